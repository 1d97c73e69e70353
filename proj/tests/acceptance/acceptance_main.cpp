// Acceptance suite: runs each headline check of the classification tool
// end to end and prints one PASS/FAIL line per criterion.
//
// Criteria 2, 3 and 5 pin the catalog's own tile totals (54 at rank 4,
// 192 overall). The exact-cover oracle refutes 24 of the rank-4 listings
// (the D22^4 orbit admits no complement in any ambient dimension), so
// those criteria fail by construction and are expected to stay red; the
// unit suite pins the verified counts instead.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "hamtiles/catalog.hpp"
#include "hamtiles/enumerate.hpp"
#include "hamtiles/equivalence.hpp"
#include "hamtiles/tiling.hpp"

using namespace hamtiles;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << '\n';
    if (!ok)
        ++failures;
}

struct Corpus {
    // the catalog's distinct tiles and their classification, per rank
    std::map<int, std::vector<Tile>> catalogByRank;
    std::map<int, std::vector<EquivalenceClass>> classesByRank;
    double classificationSeconds = 0.0;
};

Corpus classifyCatalogCorpus() {
    Corpus corpus;
    const auto start = std::chrono::steady_clock::now();
    for (const CatalogEntry& e : builtinCatalog())
        corpus.catalogByRank[e.id.rank].push_back(e.tile);
    for (auto& [rank, tiles] : corpus.catalogByRank) {
        std::sort(tiles.begin(), tiles.end());
        tiles.erase(std::unique(tiles.begin(), tiles.end()), tiles.end());
        corpus.classesByRank[rank] = partitionClasses(tiles);
    }
    corpus.classificationSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return corpus;
}

std::multiset<int> classSizes(const std::vector<EquivalenceClass>& classes) {
    std::multiset<int> sizes;
    for (const auto& cls : classes)
        sizes.insert(static_cast<int>(cls.members.size()));
    return sizes;
}

Permutation randomPermutation(int degree, std::mt19937& rng) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), std::uint8_t{1});
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::fromImages(std::move(img));
}

// criterion 1: the full corpus reduces to 15 classes, 1/6/4/3/1 per rank
void criterion1(const Corpus& corpus) {
    const std::map<int, int> expected{{3, 1}, {4, 6}, {5, 4}, {6, 3}, {7, 1}};
    bool ok = true;
    int total = 0;
    for (const auto& [rank, classes] : corpus.classesByRank) {
        total += static_cast<int>(classes.size());
        if (static_cast<int>(classes.size()) != expected.at(rank))
            ok = false;
    }
    ok = ok && total == 15;
    const bool fast = corpus.classificationSeconds < 10.0;
    std::ostringstream what;
    what << "the 192 distinct catalog tiles form " << total
         << " classes (want 15: 1/6/4/3/1 per rank) in " << corpus.classificationSeconds << "s";
    report(1, ok && fast, what.str());
}

// criterion 2: exhaustive per-rank totals 1, 54, 100, 36, 1 (192 distinct)
// vs 193 labels, with exactly the duplicate pair D12^5 = D31^5
void criterion2(const VerificationReport& report_) {
    const std::map<int, std::size_t> stated{{3, 1}, {4, 54}, {5, 100}, {6, 36}, {7, 1}};
    bool ok = true;
    std::size_t total = 0;
    std::ostringstream actual;
    for (int rank = 3; rank <= 7; ++rank) {
        const std::size_t n = enumerateExhaustive(rank).size();
        total += n;
        actual << (rank > 3 ? "/" : "") << n;
        if (n != stated.at(rank))
            ok = false;
    }
    ok = ok && total == 192;
    ok = ok && report_.summary.labeledEntries == 193;
    ok = ok && report_.summary.distinctTiles == 192;

    std::vector<std::pair<EntryId, EntryId>> duplicates;
    for (const EntryResult& r : report_.perEntry)
        if (r.duplicateOf && *r.duplicateOf < r.id)
            duplicates.emplace_back(*r.duplicateOf, r.id);
    const bool dupOk =
        duplicates.size() == 1 && duplicates[0] == std::make_pair(EntryId{5, 12}, EntryId{5, 31});
    ok = ok && dupOk;

    std::ostringstream what;
    what << "exhaustive totals " << actual.str() << " (= " << total
         << " distinct) vs stated 1/54/100/36/1 (= 192); 193 labels, duplicate pair "
         << (dupOk ? "found" : "wrong");
    report(2, ok, what.str());
}

// criterion 3: enumerateByCases == enumerateExhaustive on every rank
void criterion3() {
    bool ok = true;
    std::ostringstream what;
    what << "route agreement per rank:";
    std::size_t scanned4 = 0, scanned5 = 0, scanned6 = 0;
    for (int rank = 3; rank <= 7; ++rank) {
        const auto cases = enumerateByCases(rank);
        const auto exhaustive = enumerateExhaustiveDetail(rank);
        const bool agree = cases == exhaustive.tiles;
        what << ' ' << rank << (agree ? "=ok" : "=MISMATCH");
        if (!agree) {
            what << "(" << cases.size() << " vs " << exhaustive.tiles.size() << ")";
            ok = false;
        }
        if (rank == 4)
            scanned4 = exhaustive.candidatesScanned;
        if (rank == 5)
            scanned5 = exhaustive.candidatesScanned;
        if (rank == 6)
            scanned6 = exhaustive.candidatesScanned;
    }
    ok = ok && scanned4 == 165 && scanned5 == 325 && scanned6 == 57;
    what << "; scans " << scanned4 << "/" << scanned5 << "/" << scanned6;
    report(3, ok, what.str());
}

// criterion 4: every annotated entry validates or is repaired; the
// findings list matches the committed fixture
void criterion4(const VerificationReport& report_) {
    int nonRepresentatives = 0;
    bool ok = true;
    for (const EntryResult& r : report_.perEntry) {
        if (!r.witnessClaimed)
            continue;
        ++nonRepresentatives;
        if (r.witnessMissing)
            ok = false;
        if (r.witnessValidUnderConvention == WitnessConvention::none && !r.repairedWitness)
            ok = false;
    }
    ok = ok && nonRepresentatives == 178;

    nlohmann::json computed = nlohmann::json::array();
    for (const Finding& f : collectFindings(report_)) {
        nlohmann::json item;
        item["kind"] = f.kind;
        item["entry"] = toString(f.entry);
        item["detail"] = f.detail;
        computed.push_back(item);
    }
    bool fixtureOk = false;
    std::ifstream fixture(std::string(HAMTILES_FIXTURES_DIR) + "/expected_findings.json");
    if (fixture) {
        nlohmann::json expected;
        fixture >> expected;
        fixtureOk = computed == expected;
    }
    report(4, ok && fixtureOk,
           "all 178 annotated witnesses validate or are repaired; findings match the fixture");
}

// criterion 5: all 192 distinct catalog tiles round-trip through the
// oracle at n = rank; 100 family-violating candidates admit no complement
void criterion5(const Corpus& corpus) {
    int refuted = 0;
    for (const auto& [rank, tiles] : corpus.catalogByRank)
        for (const Tile& t : tiles) {
            const auto cert = findComplement(t, rank);
            if (!cert || !verifyTiling(t, *cert, rank))
                ++refuted;
        }

    // deterministic sample of normalized candidates that violate every
    // family predicate of their rank
    std::mt19937 rng(20240817);
    const auto families = familyList();
    int sampled = 0;
    bool violatorsClean = true;
    while (sampled < 100) {
        const int rank = 4 + static_cast<int>(rng() % 3);
        std::vector<Point> universe;
        for (Point v = 0; v < (Point{1} << rank); ++v)
            if (weight(v) >= 2)
                universe.push_back(v);
        std::set<Point> s;
        while (static_cast<int>(s.size()) < 7 - rank)
            s.insert(universe[rng() % universe.size()]);
        const std::vector<Point> sv(s.begin(), s.end());
        bool anyFamily = false;
        for (const FamilySpec& f : families)
            if (f.rank == rank && f.predicate(sv))
                anyFamily = true;
        if (anyFamily)
            continue;
        ++sampled;
        if (findComplement(normalizedTile(rank, sv), rank).has_value())
            violatorsClean = false;
    }

    std::ostringstream what;
    what << "complement round trip: " << (192 - refuted) << "/192 tiles verify (" << refuted
         << " refuted); 100 family-violating candidates "
         << (violatorsClean ? "all lack complements" : "UNEXPECTEDLY tile");
    report(5, refuted == 0 && violatorsClean, what.str());
}

// criterion 6: orbit size == r!/stabilizer == class size, per representative
void criterion6(const Corpus& corpus, const VerificationReport& report_) {
    const std::map<int, std::multiset<int>> expected{
        {3, {1}}, {4, {4, 4, 12, 6, 24, 4}}, {5, {30, 30, 10, 30}}, {6, {15, 20, 1}}, {7, {1}}};
    const std::map<int, int> factorial{{3, 6}, {4, 24}, {5, 120}, {6, 720}, {7, 5040}};

    bool ok = true;
    std::map<int, std::multiset<int>> orbitSizes;
    for (const CatalogEntry& e : builtinCatalog()) {
        if (!e.isRepresentative())
            continue;
        const int r = e.id.rank;
        const std::size_t orbit = orbitSize(e.tile);
        const int stab = stabilizerSize(e.tile);
        if (orbit * static_cast<std::size_t>(stab) != static_cast<std::size_t>(factorial.at(r)))
            ok = false;
        orbitSizes[r].insert(static_cast<int>(orbit));
    }
    ok = ok && orbitSizes == expected;

    // class sizes from the from-scratch partition agree
    for (const auto& [rank, classes] : corpus.classesByRank)
        if (classSizes(classes) != expected.at(rank))
            ok = false;
    // and with the catalog report's per-rank sizes
    for (const auto& [rank, sizes] : report_.summary.perRankClassSizes)
        if (std::multiset<int>(sizes.begin(), sizes.end()) != expected.at(rank))
            ok = false;

    report(6, ok, "orbit sizes equal r!/stabilizer and match the class sizes per rank");
}

// criterion 7: property suites
void criterion7(const Corpus& corpus) {
    std::mt19937 rng(7311);
    bool ok = true;

    // canonical form is constant on orbits: 100 random (tile, permutation)
    std::vector<const Tile*> all;
    for (const auto& [rank, tiles] : corpus.catalogByRank)
        for (const Tile& t : tiles)
            all.push_back(&t);
    for (int trial = 0; trial < 100; ++trial) {
        const Tile& t = *all[rng() % all.size()];
        const Permutation p = randomPermutation(t.dim(), rng);
        if (canonicalForm(applyPermutation(p, t)).tile != canonicalForm(t).tile)
            ok = false;
    }

    // action composition law on 100 random triples
    for (int trial = 0; trial < 100; ++trial) {
        const Tile& t = *all[rng() % all.size()];
        const Permutation p = randomPermutation(t.dim(), rng);
        const Permutation q = randomPermutation(t.dim(), rng);
        if (applyPermutation(compose(p, q), t) != applyPermutation(p, applyPermutation(q, t)))
            ok = false;
    }

    // signatures equal across every verified equivalent pair in the catalog
    std::map<EntryId, const CatalogEntry*> byId;
    for (const CatalogEntry& e : builtinCatalog())
        byId.emplace(e.id, &e);
    for (const CatalogEntry& e : builtinCatalog())
        if (e.claimedRepresentative &&
            findWitness(e.tile, byId.at(*e.claimedRepresentative)->tile).has_value())
            if (signatureOf(e.tile) != signatureOf(byId.at(*e.claimedRepresentative)->tile))
                ok = false;

    // the rank-7 complement is a perfect code: 16 words, pairwise distance >= 3
    const auto cert = findComplement(normalizedTile(7, {}), 7);
    if (!cert || cert->complement.size() != 16)
        ok = false;
    if (cert)
        for (std::size_t i = 0; i < cert->complement.size(); ++i)
            for (std::size_t j = i + 1; j < cert->complement.size(); ++j)
                if (distance(cert->complement[i], cert->complement[j]) < 3)
                    ok = false;

    report(7, ok, "canonical invariance, composition law, signature equality, perfect code");
}

} // namespace

int main() {
    const Corpus corpus = classifyCatalogCorpus();
    const VerificationReport catalogReport = verifyCatalog(builtinCatalog());

    criterion1(corpus);
    criterion2(catalogReport);
    criterion3();
    criterion4(catalogReport);
    criterion5(corpus);
    criterion6(corpus, catalogReport);
    criterion7(corpus);

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n"
                  << "note: the failing criteria pin the catalog's own tile totals; the\n"
                  << "exact-cover oracle refutes 24 rank-4 listings (the D22^4 orbit), so\n"
                  << "those totals cannot be reproduced. See the verify-catalog report.\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
