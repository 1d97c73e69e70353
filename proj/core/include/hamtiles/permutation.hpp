#ifndef HAMTILES_PERMUTATION_HPP
#define HAMTILES_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hamtiles/hamming.hpp"

namespace hamtiles {

/// A bijection of the coordinate indices {1..degree}, degree <= 7.
class Permutation {
public:
    /// Identity of the given degree.
    explicit Permutation(int degree);

    /// From an image table: images[i-1] = pi(i). Must be a bijection of
    /// {1..n} with n <= 7.
    static Permutation fromImages(std::vector<std::uint8_t> images);

    int degree() const noexcept { return static_cast<int>(images_.size()); }

    /// pi(i), 1-based.
    int operator()(int i) const noexcept { return images_[static_cast<std::size_t>(i) - 1]; }

    bool isIdentity() const noexcept;
    Permutation inverse() const;

    const std::vector<std::uint8_t>& images() const noexcept { return images_; }

    /// Permutations of equal degree compare lexicographically on their
    /// image sequences (the generation/tie-break order used throughout).
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> images_;
};

/// compose(outer, inner)(i) = outer(inner(i)); inner acts first.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Order in which a concatenation of cycles is composed.
enum class CycleComposition {
    rightToLeft, ///< rightmost cycle acts first (the default reading)
    leftToRight, ///< leftmost cycle acts first
};

/// Parse cycle notation: `cycle*` with `cycle := '(' digit+ ')'`, digits
/// 1..degree, no whitespace. "" and "()" are the identity. Digits may
/// repeat across cycles (non-disjoint products are legal); a repeated
/// digit within one cycle, a digit above the degree, or any stray
/// character is a ParseError.
Permutation parseCycles(std::string_view text, int degree,
                        CycleComposition order = CycleComposition::rightToLeft);

/// Disjoint-cycle notation: fixed points omitted, cycles sorted by least
/// element and started at it; the identity formats as "()".
std::string formatCycles(const Permutation& p);

/// Image of a point under the coordinate relabeling e_i -> e_{pi(i)}.
/// The point must lie in F_2^degree.
Point permutePoint(const Permutation& p, Point v) noexcept;

} // namespace hamtiles

#endif
