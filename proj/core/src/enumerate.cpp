#include "hamtiles/enumerate.hpp"

#include <algorithm>
#include <map>

#include "hamtiles/errors.hpp"
#include "hamtiles/tiling.hpp"

namespace hamtiles {

namespace {

bool weightsAre(std::span<const Point> s, std::initializer_list<int> sortedWeights) {
    if (s.size() != sortedWeights.size())
        return false;
    std::vector<int> w;
    w.reserve(s.size());
    for (Point p : s)
        w.push_back(weight(p));
    std::sort(w.begin(), w.end());
    return std::equal(w.begin(), w.end(), sortedWeights.begin());
}

// Splits S by weight; callers know the expected counts.
std::vector<Point> ofWeight(std::span<const Point> s, int w) {
    std::vector<Point> out;
    for (Point p : s)
        if (weight(p) == w)
            out.push_back(p);
    return out;
}

bool family3(std::span<const Point> s) {
    if (s.size() != 4)
        return false;
    return std::all_of(s.begin(), s.end(), [](Point p) { return weight(p) >= 2; });
}

// Three vectors of weight 2 whose pairwise sums all have weight 2.
bool family4a(std::span<const Point> s) {
    if (!weightsAre(s, {2, 2, 2}))
        return false;
    return distance(s[0], s[1]) == 2 && distance(s[0], s[2]) == 2 &&
           distance(s[1], s[2]) == 2;
}

// x, y of weight 2 and z of weight 3 with w(x+y)=2, w(x+z)=w(y+z)=1.
bool family4b(std::span<const Point> s) {
    if (!weightsAre(s, {2, 2, 3}))
        return false;
    const auto xy = ofWeight(s, 2);
    const Point z = ofWeight(s, 3)[0];
    return distance(xy[0], xy[1]) == 2 && distance(xy[0], z) == 1 &&
           distance(xy[1], z) == 1;
}

// x of weight 2, y and z of weight 3 with w(x+y)=1 or w(x+z)=1.
bool family4c(std::span<const Point> s) {
    if (!weightsAre(s, {2, 3, 3}))
        return false;
    const Point x = ofWeight(s, 2)[0];
    const auto yz = ofWeight(s, 3);
    return distance(x, yz[0]) == 1 || distance(x, yz[1]) == 1;
}

bool family4d(std::span<const Point> s) { return weightsAre(s, {3, 3, 3}); }

// Two vectors of weight 2 with w(x+y)=2.
bool family5a(std::span<const Point> s) {
    return weightsAre(s, {2, 2}) && distance(s[0], s[1]) == 2;
}

// x of weight 3 and y of weight 2 with w(x+y)=1 or w(x+y)=5.
bool family5b(std::span<const Point> s) {
    if (!weightsAre(s, {2, 3}))
        return false;
    const int d = distance(s[0], s[1]);
    return d == 1 || d == 5;
}

// Two vectors of weight 3 with w(x+y)=2.
bool family5c(std::span<const Point> s) {
    return weightsAre(s, {3, 3}) && distance(s[0], s[1]) == 2;
}

// One vector with w(x) != 4, 5 (and >= 2, else it would meet the ball).
bool family6(std::span<const Point> s) {
    if (s.size() != 1)
        return false;
    const int w = weight(s[0]);
    return w >= 2 && w != 4 && w != 5;
}

// Every candidate S member: distinct vectors of weight >= 2 in F_2^rank,
// as sorted tuples (the listing treats S as unordered).
template <typename Fn>
void forEachCandidate(int rank, int size, Fn&& fn) {
    std::vector<Point> universe;
    for (Point v = 0; v < (Point{1} << rank); ++v)
        if (weight(v) >= 2)
            universe.push_back(v);

    std::vector<Point> s(static_cast<std::size_t>(size));
    auto rec = [&](auto&& self, int depth, std::size_t from) -> void {
        if (depth == size) {
            fn(std::span<const Point>(s));
            return;
        }
        for (std::size_t i = from; i < universe.size(); ++i) {
            s[static_cast<std::size_t>(depth)] = universe[i];
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
}

void checkRank(int rank, const char* what) {
    if (rank < 3 || rank > 7)
        throw DimensionError(std::string(what) + ": rank must be in [3, 7]");
}

} // namespace

std::span<const FamilySpec> familyList() {
    static const std::vector<FamilySpec> specs = {
        {3, 4, "rank 3: S = every vector of weight >= 2", family3},
        {4, 3, "rank 4: w(x)=w(y)=w(z)=2, w(x+y)=w(x+z)=w(y+z)=2", family4a},
        {4, 3, "rank 4: w(x)=w(y)=2, w(z)=3, w(x+y)=2, w(x+z)=w(y+z)=1", family4b},
        {4, 3, "rank 4: w(x)=2, w(y)=w(z)=3, w(x+y)=1 or w(x+z)=1", family4c},
        {4, 3, "rank 4: w(x)=w(y)=w(z)=3", family4d},
        {5, 2, "rank 5: w(x)=w(y)=2, w(x+y)=2", family5a},
        {5, 2, "rank 5: w(x)=3, w(y)=2, w(x+y)=1 or w(x+y)=5", family5b},
        {5, 2, "rank 5: w(x)=w(y)=3, w(x+y)=2", family5c},
        {6, 1, "rank 6: w(x) != 4, 5 (and w(x) >= 2)", family6},
    };
    return specs;
}

CaseEnumeration enumerateByCasesDetail(int rank) {
    checkRank(rank, "enumerateByCases");
    std::map<Tile, int> routes;
    if (rank == 7) {
        // S is empty: the ball itself is the one tile; no conditions apply.
        routes.emplace(normalizedTile(7, {}), 1);
    } else {
        for (const FamilySpec& family : familyList()) {
            if (family.rank != rank)
                continue;
            forEachCandidate(rank, family.sSize, [&](std::span<const Point> s) {
                if (family.predicate(s))
                    routes[normalizedTile(rank, s)] += 1;
            });
        }
    }
    CaseEnumeration out;
    out.tiles.reserve(routes.size());
    out.routeCounts.reserve(routes.size());
    for (const auto& [tile, count] : routes) {
        out.tiles.push_back(tile);
        out.routeCounts.push_back(count);
    }
    return out;
}

std::vector<Tile> enumerateByCases(int rank) { return enumerateByCasesDetail(rank).tiles; }

ExhaustiveEnumeration enumerateExhaustiveDetail(int rank) {
    checkRank(rank, "enumerateExhaustive");
    ExhaustiveEnumeration out{{}, 0};
    forEachCandidate(rank, 7 - rank, [&](std::span<const Point> s) {
        ++out.candidatesScanned;
        Tile candidate = normalizedTile(rank, s);
        if (findComplement(candidate, rank).has_value())
            out.tiles.push_back(std::move(candidate));
    });
    std::sort(out.tiles.begin(), out.tiles.end());
    return out;
}

std::vector<Tile> enumerateExhaustive(int rank) { return enumerateExhaustiveDetail(rank).tiles; }

} // namespace hamtiles
