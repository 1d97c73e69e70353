#ifndef HAMTILES_TILE_HPP
#define HAMTILES_TILE_HPP

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "hamtiles/hamming.hpp"

namespace hamtiles {

/// A set of exactly 8 distinct points of F_2^dim. Stored as a sorted
/// sequence of bitmask values, so equality, hashing and canonical
/// comparisons are deterministic. Immutable after construction.
class Tile {
public:
    static constexpr int kPoints = 8;

    /// Validates: dim in [1, 63], exactly 8 distinct points, every point
    /// inside F_2^dim. Throws DimensionError otherwise.
    Tile(std::span<const Point> points, int dim);

    int dim() const noexcept { return dim_; }
    const std::array<Point, kPoints>& points() const noexcept { return pts_; }

    bool contains(Point p) const noexcept;

    /// Normalized form: contains 0 and all unit vectors e_1..e_dim
    /// (which forces rank == dim).
    bool isNormalized() const noexcept;

    /// Tiles compare by (dim, sorted point sequence), lexicographically.
    friend auto operator<=>(const Tile&, const Tile&) = default;

private:
    int dim_;
    std::array<Point, kPoints> pts_;
};

/// ball(rank) together with the given extra points, as a tile of
/// dimension `rank`. Requires |extra| == 7 - rank.
Tile normalizedTile(int rank, std::span<const Point> extra);

/// The points of a normalized tile beyond the ball, i.e. those of
/// weight >= 2. For the rank-7 tile this is empty.
std::vector<Point> nonBallPoints(const Tile& t);

} // namespace hamtiles

#endif
