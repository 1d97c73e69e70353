#include "hamtiles/tile.hpp"

#include <algorithm>

#include "hamtiles/errors.hpp"

namespace hamtiles {

Tile::Tile(std::span<const Point> points, int dim) : dim_(dim) {
    if (dim < 1 || dim > 63)
        throw DimensionError("Tile: dimension must be in [1, 63]");
    if (points.size() != kPoints)
        throw DimensionError("Tile: exactly 8 points required");
    std::copy(points.begin(), points.end(), pts_.begin());
    std::sort(pts_.begin(), pts_.end());
    for (int i = 0; i < kPoints; ++i) {
        if (i > 0 && pts_[i] == pts_[i - 1])
            throw DimensionError("Tile: points must be distinct");
        if (dim < 64 && (pts_[i] >> dim) != 0)
            throw DimensionError("Tile: point outside F_2^dim");
    }
}

bool Tile::contains(Point p) const noexcept {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

bool Tile::isNormalized() const noexcept {
    if (!contains(0))
        return false;
    for (int i = 1; i <= dim_; ++i)
        if (!contains(unitVector(i)))
            return false;
    return true;
}

Tile normalizedTile(int rank, std::span<const Point> extra) {
    PointSet pts = ball(rank);
    if (pts.size() + extra.size() != Tile::kPoints)
        throw DimensionError("normalizedTile: need 7 - rank extra points");
    pts.insert(pts.end(), extra.begin(), extra.end());
    return Tile(pts, rank);
}

std::vector<Point> nonBallPoints(const Tile& t) {
    std::vector<Point> out;
    for (Point p : t.points())
        if (weight(p) >= 2)
            out.push_back(p);
    return out;
}

} // namespace hamtiles
