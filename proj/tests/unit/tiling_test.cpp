#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hamtiles/enumerate.hpp"
#include "hamtiles/equivalence.hpp"
#include "hamtiles/errors.hpp"
#include "hamtiles/tiling.hpp"

using namespace hamtiles;

namespace {

Tile rank3Tile() {
    std::vector<Point> pts;
    for (Point v = 0; v < 8; ++v)
        pts.push_back(v);
    return Tile(pts, 3);
}

// Independent oracle: try every complement candidate of the right size.
// Only feasible for small n; checks coverage with its own arithmetic.
bool bruteForceHasComplement(const Tile& d, int n) {
    const std::size_t cells = std::size_t{1} << n;
    const std::size_t want = cells / 8;
    std::vector<Point> chosen(want);
    auto covers = [&](const std::vector<Point>& c) {
        std::vector<bool> seen(cells, false);
        for (Point origin : c)
            for (Point p : d.points()) {
                const std::size_t cell = static_cast<std::size_t>(origin ^ p);
                if (seen[cell])
                    return false;
                seen[cell] = true;
            }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t depth, Point from) -> bool {
        if (depth == want)
            return covers(chosen);
        for (Point v = from; v < cells; ++v) {
            chosen[depth] = v;
            if (self(self, depth + 1, v + 1))
                return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

Point pt(std::initializer_list<int> coords) {
    Point p = 0;
    for (int c : coords)
        p |= unitVector(c);
    return p;
}

} // namespace

TEST_CASE("the rank-3 tile is all of F_2^3 and has the trivial complement") {
    const Tile d = rank3Tile();
    const auto cert = findComplement(d, 3);
    REQUIRE(cert.has_value());
    CHECK(cert->complement == std::vector<Point>{0});
    CHECK(verifyTiling(d, *cert, 3));
    CHECK(bruteForceHasComplement(d, 3));
    CHECK(countComplements(d, 3) == 8); // any single translate origin works
}

TEST_CASE("verifyTiling rejects malformed certificates") {
    const Tile d = rank3Tile();
    CHECK(verifyTiling(d, TilingCertificate{{0}, 3}, 3));
    CHECK_FALSE(verifyTiling(d, TilingCertificate{{0, 1}, 3}, 3)); // cardinality 16 != 8
    CHECK_FALSE(verifyTiling(d, TilingCertificate{{0}, 4}, 3));    // dimension mismatch
    CHECK_FALSE(verifyTiling(d, TilingCertificate{{0, 1}, 4}, 4)); // does not cover F_2^4
}

TEST_CASE("the ball of radius 1 in F_2^7 is a tile; its complement is a perfect code") {
    const Tile d = normalizedTile(7, {});
    const auto cert = findComplement(d, 7);
    REQUIRE(cert.has_value());
    CHECK(cert->complement.size() == 16);
    for (std::size_t i = 0; i < cert->complement.size(); ++i)
        for (std::size_t j = i + 1; j < cert->complement.size(); ++j)
            CHECK(distance(cert->complement[i], cert->complement[j]) >= 3);
    CHECK(verifyTiling(d, *cert, 7));

    // independent coverage re-check
    std::vector<bool> seen(128, false);
    for (Point c : cert->complement)
        for (Point p : d.points()) {
            CHECK_FALSE(seen[static_cast<std::size_t>(c ^ p)]);
            seen[static_cast<std::size_t>(c ^ p)] = true;
        }
    CHECK(std::count(seen.begin(), seen.end(), true) == 128);
}

TEST_CASE("a family-violating candidate admits no complement") {
    // ball(4) plus {e1+e2, e3+e4, e1+e3}: pairwise sums of weight 4 break
    // every rank-4 condition.
    const Point s[] = {pt({1, 2}), pt({3, 4}), pt({1, 3})};
    const Tile d = normalizedTile(4, s);
    CHECK_FALSE(bruteForceHasComplement(d, 4));
    CHECK_FALSE(findComplement(d, 4).has_value());
}

TEST_CASE("ambient dimension guards") {
    const Tile d = rank3Tile();
    CHECK_THROWS_AS(findComplement(d, 2), DimensionError);
    CHECK_THROWS_AS(findComplement(d, 21), SearchLimitError);
    const Tile d7 = normalizedTile(7, {});
    CHECK_THROWS_AS(findComplement(d7, 5), DimensionError); // points outside F_2^5
}

TEST_CASE("a tile embeds into a larger ambient cube") {
    const Tile d = rank3Tile();
    const auto cert = findComplement(d, 5);
    REQUIRE(cert.has_value());
    CHECK(cert->complement.size() == 4);
    CHECK(verifyTiling(d, *cert, 5));
}

TEST_CASE("full rank-4 sweep agrees with the brute-force oracle") {
    // All C(11,3) = 165 normalized candidates. Exactly 30 of them tile
    // F_2^4 (not the 54 the printed weight conditions would suggest; see
    // the orbit test below).
    std::vector<Point> universe;
    for (Point v = 0; v < 16; ++v)
        if (weight(v) >= 2)
            universe.push_back(v);
    REQUIRE(universe.size() == 11);

    int candidates = 0, tiles = 0;
    for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = i + 1; j < universe.size(); ++j)
            for (std::size_t k = j + 1; k < universe.size(); ++k) {
                const Point s[] = {universe[i], universe[j], universe[k]};
                const Tile d = normalizedTile(4, s);
                ++candidates;
                const bool solver = findComplement(d, 4).has_value();
                CHECK(solver == bruteForceHasComplement(d, 4));
                if (solver)
                    ++tiles;
            }
    CHECK(candidates == 165);
    CHECK(tiles == 30);
}

TEST_CASE("the difference-set obstruction: one listed set tiles, its sibling does not") {
    // For |D| = 8 in F_2^4 a complement has two elements, so D tiles
    // F_2^4 iff some nonzero c avoids the difference set D+D.
    const Point s21[] = {pt({1, 2}), pt({1, 2, 3}), pt({1, 2, 4})};
    const Tile d21 = normalizedTile(4, s21);
    const auto cert21 = findComplement(d21, 4);
    REQUIRE(cert21.has_value());
    CHECK(cert21->complement == std::vector<Point>{0, pt({1, 3, 4})}); // hand-verified pair
    CHECK(verifyTiling(d21, *cert21, 4));

    // D : {e1+e3, e1+e2+e3, e1+e2+e4} has a full difference set, so no
    // complement exists in F_2^4 — nor in any larger cube (tile-hood is
    // monotone in the ambient dimension, and the obstruction is local).
    const Point s22[] = {pt({1, 3}), pt({1, 2, 3}), pt({1, 2, 4})};
    const Tile d22 = normalizedTile(4, s22);
    std::set<Point> differences;
    for (Point a : d22.points())
        for (Point b : d22.points())
            if (a != b)
                differences.insert(a ^ b);
    CHECK(differences.size() == 15); // every nonzero vector is a difference
    for (int n = 4; n <= 8; ++n)
        CHECK_FALSE(findComplement(d22, n).has_value());
    CHECK_FALSE(bruteForceHasComplement(d22, 4));
}

TEST_CASE("existence is invariant under translation and permutation") {
    std::mt19937 rng(41);
    const auto corpus = enumerateExhaustive(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Tile& d = corpus[rng() % corpus.size()];
        const Point shift = rng() & 0xf;
        std::vector<Point> moved;
        for (Point p : d.points())
            moved.push_back(p ^ shift);
        const Tile translated(moved, 4);
        CHECK(findComplement(translated, 4).has_value());

        std::vector<std::uint8_t> img = {1, 2, 3, 4};
        std::shuffle(img.begin(), img.end(), rng);
        const Tile permuted = applyPermutation(Permutation::fromImages(img), d);
        CHECK(findComplement(permuted, 4).has_value());
    }

    // and a non-tile stays a non-tile under translation
    const Point s[] = {pt({1, 2}), pt({3, 4}), pt({1, 3})};
    const Tile bad = normalizedTile(4, s);
    std::vector<Point> moved;
    for (Point p : bad.points())
        moved.push_back(p ^ pt({2, 4}));
    CHECK_FALSE(findComplement(Tile(moved, 4), 4).has_value());
}

TEST_CASE("found certificates always verify (rank-4 corpus round trip)") {
    for (const Tile& d : enumerateExhaustive(4)) {
        const auto cert = findComplement(d, 4);
        REQUIRE(cert.has_value());
        CHECK(verifyTiling(d, *cert, 4));
        CHECK(cert->complement.size() == 2);
    }
}
