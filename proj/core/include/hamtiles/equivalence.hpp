#ifndef HAMTILES_EQUIVALENCE_HPP
#define HAMTILES_EQUIVALENCE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hamtiles/permutation.hpp"
#include "hamtiles/tile.hpp"

namespace hamtiles {

/// Image of a tile under a coordinate permutation. The permutation degree
/// must equal the tile dimension.
Tile applyPermutation(const Permutation& p, const Tile& t);

struct CanonicalForm {
    Tile tile;        ///< minimum of the orbit under the tile order
    Permutation perm; ///< first permutation (in image-sequence order) achieving it
};

/// Minimum of { pi . t : pi in S_dim } under the sorted-point-sequence
/// lexicographic order, with one permutation achieving it. Brute force
/// over dim! images; requires dim <= 7.
CanonicalForm canonicalForm(const Tile& t);

/// Number of permutations fixing t as a set. Divides dim()!.
int stabilizerSize(const Tile& t);

/// Number of distinct images of t over all dim()! permutations.
std::size_t orbitSize(const Tile& t);

/// First permutation (in image-sequence order) with pi . a == b, or
/// std::nullopt if the tiles are inequivalent. Dimensions must match.
std::optional<Permutation> findWitness(const Tile& a, const Tile& b);

/// Cheap permutation-invariant of a tile: the multisets of point weights
/// (8 entries) and of pairwise-sum weights (28 entries). Equal for
/// equivalent tiles; a filter, never a decision procedure.
struct InvariantSignature {
    std::array<std::uint8_t, 8> weightHistogram{};
    std::array<std::uint8_t, 28> pairSumHistogram{};

    friend auto operator<=>(const InvariantSignature&, const InvariantSignature&) = default;
};

InvariantSignature signatureOf(const Tile& t);

struct ClassMember {
    Tile tile;
    Permutation witness; ///< maps this member onto the class representative
    int multiplicity;    ///< how many times the tile appeared in the input
};

struct EquivalenceClass {
    Tile representative; ///< the canonical form
    std::vector<ClassMember> members;
};

/// Group tiles by canonical form. All inputs must share one dimension;
/// exact duplicates collapse into one member with a multiplicity count.
/// Classes are sorted by representative, members keep first-seen order.
std::vector<EquivalenceClass> partitionClasses(std::span<const Tile> tiles);

} // namespace hamtiles

#endif
