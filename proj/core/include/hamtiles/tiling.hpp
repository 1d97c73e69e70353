#ifndef HAMTILES_TILING_HPP
#define HAMTILES_TILING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hamtiles/tile.hpp"

namespace hamtiles {

/// A complement set C witnessing that D tiles F_2^dim: every element of
/// F_2^dim is d + c for exactly one (d, c) in D x C. |C| = 2^(dim-3).
struct TilingCertificate {
    std::vector<Point> complement; // sorted ascending
    int dim = 0;
};

/// Decide tile-hood of `d` inside F_2^n by exact-cover backtracking on
/// translates of d. Returns one certificate if a complement exists,
/// std::nullopt otherwise. Deterministic: the search repeatedly takes the
/// least uncovered cell x and branches on the 8 translate origins
/// c = x + p (p over d's points in ascending order), so the returned C is
/// fixed by that order.
///
/// d's points are re-read as length-n vectors (the bitmask embedding
/// leaves coordinates beyond d.dim() zero). Throws DimensionError for
/// n < 3 or points outside F_2^n, SearchLimitError for n > 20.
std::optional<TilingCertificate> findComplement(const Tile& d, int n);

/// True iff |D| * |C| = 2^n and all sums d + c are pairwise distinct
/// (equivalently, cover F_2^n). Malformed certificates (wrong dimension,
/// out-of-range points, wrong cardinality) yield false, never an error.
bool verifyTiling(const Tile& d, const TilingCertificate& cert, int n);

/// Number of distinct complements of d in F_2^n (same guards as
/// findComplement). Exhaustive; intended for small n.
std::uint64_t countComplements(const Tile& d, int n);

} // namespace hamtiles

#endif
