#include "hamtiles/hamming.hpp"

#include "hamtiles/errors.hpp"

namespace hamtiles {

int rank(std::span<const Point> points) noexcept {
    // Incremental GF(2) basis: reduce each vector by the pivots collected
    // so far, insert it if anything survives.
    Point basis[64] = {};
    int r = 0;
    for (Point v : points) {
        while (v != 0) {
            const int pivot = 63 - std::countl_zero(v);
            if (basis[pivot] == 0) {
                basis[pivot] = v;
                ++r;
                break;
            }
            v ^= basis[pivot];
        }
    }
    return r;
}

PointSet ball(int r) {
    if (r < 1 || r > 7)
        throw DimensionError("ball: radius-1 ball dimension must be in [1, 7]");
    PointSet out;
    out.reserve(static_cast<std::size_t>(r) + 1);
    out.push_back(0);
    for (int i = 1; i <= r; ++i)
        out.push_back(unitVector(i));
    return out;
}

} // namespace hamtiles
