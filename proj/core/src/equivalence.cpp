#include "hamtiles/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hamtiles/errors.hpp"

namespace hamtiles {

namespace {

Point permuteRaw(const std::vector<std::uint8_t>& images, Point v) noexcept {
    Point out = 0;
    for (std::size_t i = 0; i < images.size(); ++i)
        if ((v >> i) & 1u)
            out |= Point{1} << (images[i] - 1);
    return out;
}

// Image of a point array under a raw image table, sorted in place.
void applyRaw(const std::vector<std::uint8_t>& images,
              const std::array<Point, Tile::kPoints>& pts,
              std::array<Point, Tile::kPoints>& out) noexcept {
    for (int i = 0; i < Tile::kPoints; ++i)
        out[static_cast<std::size_t>(i)] = permuteRaw(images, pts[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end());
}

void checkEnumerable(const Tile& t, const char* what) {
    if (t.dim() > 7)
        throw DimensionError(std::string(what) + ": tile dimension must be <= 7");
}

std::vector<std::uint8_t> identityImages(int degree) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), std::uint8_t{1});
    return img;
}

} // namespace

Tile applyPermutation(const Permutation& p, const Tile& t) {
    if (p.degree() != t.dim())
        throw DimensionError("applyPermutation: degree does not match tile dimension");
    std::array<Point, Tile::kPoints> out;
    applyRaw(p.images(), t.points(), out);
    return Tile(out, t.dim());
}

CanonicalForm canonicalForm(const Tile& t) {
    checkEnumerable(t, "canonicalForm");
    auto img = identityImages(t.dim());
    std::array<Point, Tile::kPoints> best = t.points();
    std::vector<std::uint8_t> bestImg = img;
    std::array<Point, Tile::kPoints> cur;
    while (std::next_permutation(img.begin(), img.end())) {
        applyRaw(img, t.points(), cur);
        if (cur < best) {
            best = cur;
            bestImg = img;
        }
    }
    return CanonicalForm{Tile(best, t.dim()), Permutation::fromImages(std::move(bestImg))};
}

int stabilizerSize(const Tile& t) {
    checkEnumerable(t, "stabilizerSize");
    auto img = identityImages(t.dim());
    std::array<Point, Tile::kPoints> cur;
    int count = 0;
    do {
        applyRaw(img, t.points(), cur);
        if (cur == t.points())
            ++count;
    } while (std::next_permutation(img.begin(), img.end()));
    return count;
}

std::size_t orbitSize(const Tile& t) {
    checkEnumerable(t, "orbitSize");
    auto img = identityImages(t.dim());
    std::set<std::array<Point, Tile::kPoints>> images;
    std::array<Point, Tile::kPoints> cur;
    do {
        applyRaw(img, t.points(), cur);
        images.insert(cur);
    } while (std::next_permutation(img.begin(), img.end()));
    return images.size();
}

std::optional<Permutation> findWitness(const Tile& a, const Tile& b) {
    if (a.dim() != b.dim())
        throw DimensionError("findWitness: tile dimensions differ");
    checkEnumerable(a, "findWitness");
    auto img = identityImages(a.dim());
    std::array<Point, Tile::kPoints> cur;
    do {
        applyRaw(img, a.points(), cur);
        if (cur == b.points())
            return Permutation::fromImages(std::move(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return std::nullopt;
}

InvariantSignature signatureOf(const Tile& t) {
    InvariantSignature sig;
    const auto& pts = t.points();
    for (int i = 0; i < Tile::kPoints; ++i)
        sig.weightHistogram[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(weight(pts[static_cast<std::size_t>(i)]));
    std::size_t k = 0;
    for (int i = 0; i < Tile::kPoints; ++i)
        for (int j = i + 1; j < Tile::kPoints; ++j)
            sig.pairSumHistogram[k++] = static_cast<std::uint8_t>(
                distance(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]));
    std::sort(sig.weightHistogram.begin(), sig.weightHistogram.end());
    std::sort(sig.pairSumHistogram.begin(), sig.pairSumHistogram.end());
    return sig;
}

std::vector<EquivalenceClass> partitionClasses(std::span<const Tile> tiles) {
    std::vector<EquivalenceClass> classes;
    if (tiles.empty())
        return classes;
    const int dim = tiles.front().dim();
    for (const Tile& t : tiles)
        if (t.dim() != dim)
            throw DimensionError("partitionClasses: tiles have mixed dimensions");

    std::map<Tile, std::size_t> classOf;        // canonical form -> class index
    std::map<Tile, std::pair<std::size_t, std::size_t>> memberOf; // exact tile -> (class, member)
    for (const Tile& t : tiles) {
        if (auto it = memberOf.find(t); it != memberOf.end()) {
            classes[it->second.first].members[it->second.second].multiplicity += 1;
            continue;
        }
        CanonicalForm canon = canonicalForm(t);
        auto [cit, inserted] = classOf.try_emplace(canon.tile, classes.size());
        if (inserted)
            classes.push_back(EquivalenceClass{canon.tile, {}});
        EquivalenceClass& cls = classes[cit->second];
        memberOf.emplace(t, std::make_pair(cit->second, cls.members.size()));
        cls.members.push_back(ClassMember{t, std::move(canon.perm), 1});
    }

    std::sort(classes.begin(), classes.end(),
              [](const EquivalenceClass& a, const EquivalenceClass& b) {
                  return a.representative < b.representative;
              });
    return classes;
}

} // namespace hamtiles
