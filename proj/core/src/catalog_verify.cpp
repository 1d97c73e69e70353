#include "hamtiles/catalog.hpp"

#include <algorithm>
#include <map>

#include "hamtiles/enumerate.hpp"
#include "hamtiles/equivalence.hpp"
#include "hamtiles/errors.hpp"
#include "hamtiles/tiling.hpp"

namespace hamtiles {

namespace {

// Listing block of an entry, as an index into familyList(). Rank 7 has
// no family; its S is empty and the condition holds vacuously.
const FamilySpec* familyOf(EntryId id) {
    const auto families = familyList();
    auto at = [&families](std::size_t i) { return &families[i]; };
    switch (id.rank) {
    case 3:
        return at(0);
    case 4:
        if (id.index <= 8)
            return at(1);
        if (id.index <= 20)
            return at(2);
        if (id.index <= 50)
            return at(3);
        return at(4);
    case 5:
        if (id.index <= 31)
            return at(5);
        if (id.index <= 71)
            return at(6);
        return at(7);
    case 6:
        return at(8);
    default:
        return nullptr;
    }
}

bool familyConditionHolds(const CatalogEntry& e) {
    if (!e.tile.isNormalized())
        return false;
    const std::vector<Point> s = nonBallPoints(e.tile);
    if (const FamilySpec* family = familyOf(e.id))
        return static_cast<int>(s.size()) == family->sSize && family->predicate(s);
    return s.empty();
}

bool tilesAmbient(const CatalogEntry& e) {
    const auto cert = findComplement(e.tile, e.id.rank);
    return cert && verifyTiling(e.tile, *cert, e.id.rank);
}

std::optional<WitnessConvention> checkWitness(const std::string& cycles, const Tile& from,
                                              const Tile& to) {
    struct Reading {
        WitnessConvention convention;
        CycleComposition order;
        bool invert;
    };
    static constexpr Reading readings[] = {
        {WitnessConvention::primary, CycleComposition::rightToLeft, false},
        {WitnessConvention::inverse, CycleComposition::rightToLeft, true},
        {WitnessConvention::oppositeComposition, CycleComposition::leftToRight, false},
    };
    for (const Reading& r : readings) {
        Permutation p(from.dim());
        try {
            p = parseCycles(cycles, from.dim(), r.order);
        } catch (const ParseError&) {
            continue;
        }
        if (r.invert)
            p = p.inverse();
        if (applyPermutation(p, from) == to)
            return r.convention;
    }
    return std::nullopt;
}

} // namespace

VerificationReport verifyCatalog(std::span<const CatalogEntry> entries) {
    VerificationReport report;
    report.perEntry.reserve(entries.size());

    std::map<EntryId, const CatalogEntry*> byId;
    for (const CatalogEntry& e : entries)
        byId.emplace(e.id, &e);

    // Canonical forms drive both the representative recomputation and the
    // from-scratch class structure.
    std::map<EntryId, Tile> canonOf;
    std::map<Tile, EntryId> representativeOfCanon; // catalog-designated representative
    std::map<Tile, EntryId> firstWithCanon;
    for (const CatalogEntry& e : entries) {
        const Tile canon = canonicalForm(e.tile).tile;
        canonOf.emplace(e.id, canon);
        firstWithCanon.try_emplace(canon, e.id);
        if (e.isRepresentative())
            representativeOfCanon.try_emplace(canon, e.id);
    }

    // Exact tile duplicates, flagged mutually.
    std::map<Tile, std::vector<EntryId>> occurrences;
    for (const CatalogEntry& e : entries)
        occurrences[e.tile].push_back(e.id);

    for (const CatalogEntry& e : entries) {
        EntryResult r;
        r.id = e.id;
        r.familyConditionOk = familyConditionHolds(e);
        r.tilesOk = tilesAmbient(e);
        r.claimedRepresentative = e.claimedRepresentative;

        const Tile& canon = canonOf.at(e.id);
        if (auto it = representativeOfCanon.find(canon); it != representativeOfCanon.end())
            r.computedRepresentative = it->second;
        else
            r.computedRepresentative = firstWithCanon.at(canon);

        if (e.claimedWitness) {
            r.witnessClaimed = e.claimedWitness;
            const CatalogEntry* rep =
                e.claimedRepresentative ? byId[*e.claimedRepresentative] : nullptr;
            if (rep == nullptr) {
                r.witnessValidUnderConvention = WitnessConvention::none;
                r.witnessMissing = true;
            } else if (auto conv = checkWitness(*e.claimedWitness, e.tile, rep->tile)) {
                r.witnessValidUnderConvention = *conv;
            } else {
                r.witnessValidUnderConvention = WitnessConvention::none;
                if (auto repaired = findWitness(e.tile, rep->tile))
                    r.repairedWitness = formatCycles(*repaired);
                else
                    r.witnessMissing = true;
            }
        }

        const auto& sameTile = occurrences.at(e.tile);
        if (sameTile.size() > 1) {
            for (EntryId other : sameTile)
                if (other != e.id) {
                    r.duplicateOf = other;
                    break;
                }
        }

        report.perEntry.push_back(std::move(r));
    }

    // Summary: recompute the class structure from scratch, per rank.
    ReportSummary& summary = report.summary;
    summary.labeledEntries = static_cast<int>(entries.size());
    summary.distinctTiles = static_cast<int>(occurrences.size());
    std::map<int, std::vector<Tile>> tilesByRank;
    for (const CatalogEntry& e : entries)
        tilesByRank[e.id.rank].push_back(e.tile);
    for (const auto& [rank, tiles] : tilesByRank) {
        const auto classes = partitionClasses(tiles);
        std::vector<int>& sizes = summary.perRankClassSizes[rank];
        for (const EquivalenceClass& cls : classes)
            sizes.push_back(static_cast<int>(cls.members.size()));
        summary.classes += static_cast<int>(classes.size());
    }

    for (const EntryResult& r : report.perEntry) {
        const bool repMatch = r.claimedRepresentative
                                  ? r.computedRepresentative == *r.claimedRepresentative
                                  : r.computedRepresentative == r.id;
        if (!r.familyConditionOk || !r.tilesOk || r.witnessMissing || !repMatch)
            ++summary.failures;
    }

    return report;
}

std::vector<Finding> collectFindings(const VerificationReport& report) {
    std::vector<Finding> findings;
    for (const EntryResult& r : report.perEntry) {
        if (!r.familyConditionOk)
            findings.push_back({"family_condition_failed", r.id, ""});
        if (!r.tilesOk)
            findings.push_back({"tile_check_failed", r.id, ""});
        // duplicates reported once per pair, at the later entry
        if (r.duplicateOf && *r.duplicateOf < r.id)
            findings.push_back({"duplicate_tile", r.id, "duplicate of " + toString(*r.duplicateOf)});
        if (r.witnessClaimed && r.witnessValidUnderConvention) {
            switch (*r.witnessValidUnderConvention) {
            case WitnessConvention::primary:
                break;
            case WitnessConvention::inverse:
            case WitnessConvention::oppositeComposition:
                findings.push_back({"witness_nonprimary", r.id,
                                    "claimed " + *r.witnessClaimed + " valid under " +
                                        toString(*r.witnessValidUnderConvention)});
                break;
            case WitnessConvention::none:
                if (r.repairedWitness)
                    findings.push_back({"witness_invalid", r.id,
                                        "claimed " + *r.witnessClaimed + "; repaired " +
                                            *r.repairedWitness});
                else
                    findings.push_back({"witness_missing", r.id,
                                        "claimed " + *r.witnessClaimed + "; no witness exists"});
                break;
            }
        }
        const bool repMatch = r.claimedRepresentative
                                  ? r.computedRepresentative == *r.claimedRepresentative
                                  : r.computedRepresentative == r.id;
        if (!repMatch)
            findings.push_back({"representative_mismatch", r.id,
                                "computed " + toString(r.computedRepresentative)});
    }
    return findings;
}

std::string toString(WitnessConvention c) {
    switch (c) {
    case WitnessConvention::primary:
        return "primary";
    case WitnessConvention::inverse:
        return "inverse";
    case WitnessConvention::oppositeComposition:
        return "oppositeComposition";
    case WitnessConvention::none:
        return "none";
    }
    return "none";
}

std::optional<ReportFormat> parseReportFormat(std::string_view name) {
    if (name == "json")
        return ReportFormat::json;
    if (name == "csv")
        return ReportFormat::csv;
    if (name == "markdown")
        return ReportFormat::markdown;
    return std::nullopt;
}

} // namespace hamtiles
