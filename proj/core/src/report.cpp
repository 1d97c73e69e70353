#include <map>
#include <sstream>

#include "hamtiles/catalog.hpp"

#include "json.hpp"

namespace hamtiles {

namespace {

using Json = nlohmann::ordered_json;

std::string idOrEmpty(const std::optional<EntryId>& id) {
    return id ? toString(*id) : std::string();
}

Json entryJson(const EntryResult& r) {
    Json j;
    j["rank"] = r.id.rank;
    j["index"] = r.id.index;
    j["family_ok"] = r.familyConditionOk;
    j["tiles_ok"] = r.tilesOk;
    j["witness_claimed"] = r.witnessClaimed ? Json(*r.witnessClaimed) : Json(nullptr);
    j["witness_convention"] = r.witnessValidUnderConvention
                                  ? Json(toString(*r.witnessValidUnderConvention))
                                  : Json(nullptr);
    j["witness_repaired"] = r.repairedWitness ? Json(*r.repairedWitness) : Json(nullptr);
    j["witness_missing"] = r.witnessMissing;
    j["rep_claimed"] =
        r.claimedRepresentative ? Json(toString(*r.claimedRepresentative)) : Json(nullptr);
    j["rep_computed"] = toString(r.computedRepresentative);
    j["duplicate_of"] = r.duplicateOf ? Json(toString(*r.duplicateOf)) : Json(nullptr);
    return j;
}

std::string toJson(const VerificationReport& report) {
    Json j;
    Json summary;
    summary["labeled_entries"] = report.summary.labeledEntries;
    summary["distinct_tiles"] = report.summary.distinctTiles;
    summary["classes"] = report.summary.classes;
    Json sizes = Json::object();
    for (const auto& [rank, s] : report.summary.perRankClassSizes)
        sizes[std::to_string(rank)] = s;
    summary["per_rank_class_sizes"] = std::move(sizes);
    summary["failures"] = report.summary.failures;
    j["summary"] = std::move(summary);

    Json findings = Json::array();
    for (const Finding& f : collectFindings(report)) {
        Json item;
        item["kind"] = f.kind;
        item["entry"] = toString(f.entry);
        item["detail"] = f.detail;
        findings.push_back(std::move(item));
    }
    j["findings"] = std::move(findings);

    Json entries = Json::array();
    for (const EntryResult& r : report.perEntry)
        entries.push_back(entryJson(r));
    j["entries"] = std::move(entries);

    return j.dump(2) + "\n";
}

std::string toCsv(const VerificationReport& report) {
    std::ostringstream os;
    os << "rank,index,family_ok,tiles_ok,witness_claimed,witness_convention,"
          "witness_repaired,rep_claimed,rep_computed,duplicate_of\n";
    for (const EntryResult& r : report.perEntry) {
        os << r.id.rank << ',' << r.id.index << ',' << (r.familyConditionOk ? "true" : "false")
           << ',' << (r.tilesOk ? "true" : "false") << ','
           << (r.witnessClaimed ? *r.witnessClaimed : "") << ','
           << (r.witnessValidUnderConvention ? toString(*r.witnessValidUnderConvention) : "")
           << ',' << (r.repairedWitness ? *r.repairedWitness : "") << ','
           << idOrEmpty(r.claimedRepresentative) << ',' << toString(r.computedRepresentative)
           << ',' << idOrEmpty(r.duplicateOf) << '\n';
    }
    return os.str();
}

std::string toMarkdown(const VerificationReport& report) {
    std::ostringstream os;
    os << "# Catalog verification report\n\n";
    os << "## Summary\n\n";
    os << "- labeled entries: " << report.summary.labeledEntries << '\n';
    os << "- distinct tiles: " << report.summary.distinctTiles << '\n';
    os << "- classes: " << report.summary.classes << '\n';
    os << "- failures: " << report.summary.failures << '\n';

    // Class tables per rank, grouped by computed representative.
    std::map<int, std::map<std::string, std::vector<const EntryResult*>>> byRank;
    for (const EntryResult& r : report.perEntry)
        byRank[r.id.rank][toString(r.computedRepresentative)].push_back(&r);
    for (const auto& [rank, classes] : byRank) {
        os << "\n## Rank " << rank << "\n\n";
        os << "| representative | labels | members |\n";
        os << "|---|---|---|\n";
        for (const auto& [rep, members] : classes) {
            os << "| " << rep << " | " << members.size() << " | ";
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (i)
                    os << ", ";
                os << toString(members[i]->id);
            }
            os << " |\n";
        }
    }

    os << "\n## Findings\n\n";
    const auto findings = collectFindings(report);
    if (findings.empty())
        os << "none\n";
    for (const Finding& f : findings) {
        os << "- " << toString(f.entry) << ": " << f.kind;
        if (!f.detail.empty())
            os << " (" << f.detail << ")";
        os << '\n';
    }
    return os.str();
}

} // namespace

std::string exportReport(const VerificationReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::json:
        return toJson(report);
    case ReportFormat::csv:
        return toCsv(report);
    case ReportFormat::markdown:
        return toMarkdown(report);
    }
    return {};
}

} // namespace hamtiles
