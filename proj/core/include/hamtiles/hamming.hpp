#ifndef HAMTILES_HAMMING_HPP
#define HAMTILES_HAMMING_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace hamtiles {

/// A point of F_2^r stored as a bitmask: bit (i-1) holds coordinate i, so
/// the unit vector e_1 is the least-significant bit. The ambient dimension
/// is carried by the containing structure (Tile, certificate, ...), not by
/// the point itself.
using Point = std::uint64_t;

using PointSet = std::vector<Point>;

/// Unit vector e_i (1-based coordinate index).
constexpr Point unitVector(int i) noexcept { return Point{1} << (i - 1); }

/// Hamming weight: number of nonzero coordinates.
inline int weight(Point p) noexcept { return std::popcount(p); }

/// Coordinatewise sum over GF(2). Self-inverse: addPoints(p, p) == 0.
constexpr Point addPoints(Point p, Point q) noexcept { return p ^ q; }

/// Hamming distance d(p, q) = weight(p + q).
inline int distance(Point p, Point q) noexcept { return weight(p ^ q); }

/// Dimension over GF(2) of the span of the given points, by in-place
/// row reduction. The empty set (and {0}) have rank 0.
int rank(std::span<const Point> points) noexcept;

/// Hamming ball of center 0 and radius 1 in F_2^r: {0, e_1, ..., e_r},
/// cardinality r + 1. Requires 1 <= r <= 7.
PointSet ball(int r);

} // namespace hamtiles

#endif
