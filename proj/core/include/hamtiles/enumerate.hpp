#ifndef HAMTILES_ENUMERATE_HPP
#define HAMTILES_ENUMERATE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hamtiles/tile.hpp"

namespace hamtiles {

/// One weight-condition family of normalized tiles ball(rank) u S.
/// The predicate decides membership of an S candidate (sorted, distinct
/// points of weight >= 2, |S| = sSize = 7 - rank) and is invariant under
/// coordinate permutations.
struct FamilySpec {
    int rank;
    int sSize;
    std::string label;
    bool (*predicate)(std::span<const Point> s);
};

/// The nine families, in listing order: rank 3 (S = every vector of
/// weight >= 2), four rank-4 families, three rank-5 families, one rank-6
/// family. Rank 7 has S empty and needs no conditions.
std::span<const FamilySpec> familyList();

struct CaseEnumeration {
    std::vector<Tile> tiles;     ///< sorted, distinct
    std::vector<int> routeCounts; ///< per tile: how many families produced it
};

/// All normalized tiles of the given rank generated from the rank's
/// family predicates. Overlapping family routes are counted per tile,
/// not silently merged (no family pair actually overlaps: their weight
/// multisets differ).
CaseEnumeration enumerateByCasesDetail(int rank);
std::vector<Tile> enumerateByCases(int rank);

struct ExhaustiveEnumeration {
    std::vector<Tile> tiles;      ///< sorted, distinct
    std::size_t candidatesScanned;
};

/// Independent route: scan every S of 7-rank distinct weight->=2 vectors,
/// keep ball(rank) u S iff the exact-cover search finds a complement in
/// F_2^rank.
ExhaustiveEnumeration enumerateExhaustiveDetail(int rank);
std::vector<Tile> enumerateExhaustive(int rank);

} // namespace hamtiles

#endif
