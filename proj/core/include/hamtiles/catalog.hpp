#ifndef HAMTILES_CATALOG_HPP
#define HAMTILES_CATALOG_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamtiles/tile.hpp"

namespace hamtiles {

/// Identifier of a catalog listing: D<index>^<rank>.
struct EntryId {
    int rank = 0;
    int index = 0;

    friend auto operator<=>(const EntryId&, const EntryId&) = default;
};

std::string toString(EntryId id); // "D12^5"

/// One labeled catalog listing. Representatives carry neither a claimed
/// representative nor a claimed witness; every other entry carries both:
/// the identifier of the representative it is claimed equivalent to, and
/// the cycle string of the permutation claimed to map it there.
struct CatalogEntry {
    EntryId id;
    Tile tile;
    std::optional<EntryId> claimedRepresentative;
    std::optional<std::string> claimedWitness;

    bool isRepresentative() const noexcept { return !claimedRepresentative.has_value(); }
};

/// The built-in catalog: 193 labeled normalized tiles across ranks 3..7
/// (1 + 54 + 101 + 36 + 1), of which 15 are representatives, in listing
/// order. Compiled-in data; catalogChecksum guards transcription drift.
std::span<const CatalogEntry> builtinCatalog();

/// FNV-1a over a canonical serialization of the entries.
std::uint64_t catalogChecksum(std::span<const CatalogEntry> entries);

/// Which reading of a claimed witness string validated it, if any.
enum class WitnessConvention {
    primary,             ///< right-to-left cycle product, e_i -> e_{pi(i)}
    inverse,             ///< the inverse of the primary reading
    oppositeComposition, ///< left-to-right cycle product
    none,                ///< no reading maps the entry onto its representative
};

std::string toString(WitnessConvention c);

struct EntryResult {
    EntryId id;
    bool familyConditionOk = false;
    bool tilesOk = false;
    std::optional<std::string> witnessClaimed;
    /// Present iff a witness was claimed.
    std::optional<WitnessConvention> witnessValidUnderConvention;
    /// Present iff the claimed witness failed every reading and an
    /// exhaustive search found a substitute.
    std::optional<std::string> repairedWitness;
    /// True iff no permutation at all maps the entry onto its claimed
    /// representative ("no witness exists").
    bool witnessMissing = false;
    std::optional<EntryId> claimedRepresentative;
    EntryId computedRepresentative;
    std::optional<EntryId> duplicateOf;
};

struct ReportSummary {
    int labeledEntries = 0;
    int distinctTiles = 0;
    int classes = 0;
    /// rank -> class sizes, in representative (canonical-form) order.
    std::map<int, std::vector<int>> perRankClassSizes;
    /// Entries failing a hard check: family condition, tile-hood,
    /// representative recomputation, or a missing witness.
    int failures = 0;
};

struct VerificationReport {
    std::vector<EntryResult> perEntry;
    ReportSummary summary;
};

/// Audit every entry: family condition of its listing block, tile-hood
/// via the exact-cover oracle, the claimed witness under the primary /
/// inverse / opposite readings (repaired by exhaustive search on total
/// failure), the representative recomputed from canonical forms, and
/// exact-duplicate detection across entries. All failures are report
/// content, never exceptions.
VerificationReport verifyCatalog(std::span<const CatalogEntry> entries);

/// A reportable anomaly, in entry order: duplicate tiles, witnesses not
/// valid under the primary reading, representative mismatches, family or
/// tile-hood failures.
struct Finding {
    std::string kind;
    EntryId entry;
    std::string detail;

    friend bool operator==(const Finding&, const Finding&) = default;
};

std::vector<Finding> collectFindings(const VerificationReport& report);

enum class ReportFormat { json, csv, markdown };

std::optional<ReportFormat> parseReportFormat(std::string_view name);

/// Deterministic serialization of the report. JSON has stable key order;
/// CSV is one row per entry under a fixed header; markdown carries
/// per-rank class tables and the findings list.
std::string exportReport(const VerificationReport& report, ReportFormat format);

} // namespace hamtiles

#endif
