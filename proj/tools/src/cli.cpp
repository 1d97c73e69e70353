#include "hamtiles/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamtiles/catalog.hpp"
#include "hamtiles/enumerate.hpp"
#include "hamtiles/equivalence.hpp"
#include "hamtiles/errors.hpp"
#include "hamtiles/tile_text.hpp"
#include "hamtiles/tiling.hpp"

namespace hamtiles::cli {

namespace {

std::string readAll(const std::string& pathOrDash, std::istream& stdinStream) {
    if (pathOrDash == "-") {
        return std::string(std::istreambuf_iterator<char>(stdinStream),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(pathOrDash);
    if (!in)
        throw ParseError("cannot open file: " + pathOrDash);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Tile loadTile(const std::string& pathOrDash) {
    return text::parseTile(readAll(pathOrDash, std::cin));
}

int runEnumerate(int rank, const std::string& method, std::ostream& out, std::ostream& err) {
    std::vector<Tile> tiles;
    if (method == "cases") {
        tiles = enumerateByCases(rank);
    } else if (method == "exhaustive") {
        tiles = enumerateExhaustive(rank);
    } else { // both
        tiles = enumerateByCases(rank);
        const std::vector<Tile> other = enumerateExhaustive(rank);
        if (tiles != other) {
            err << "enumerate: methods disagree at rank " << rank << " (cases " << tiles.size()
                << ", exhaustive " << other.size() << ")\n";
            return 1;
        }
    }
    for (const Tile& t : tiles)
        out << text::formatTile(t) << '\n';
    out << "count " << tiles.size() << '\n';
    return 0;
}

int runClassify(const std::vector<Tile>& tiles, std::ostream& out) {
    const auto classes = partitionClasses(tiles);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const EquivalenceClass& cls = classes[i];
        out << "class " << (i + 1) << " size " << cls.members.size() << '\n';
        out << "  representative " << text::formatTile(cls.representative) << '\n';
        for (const ClassMember& m : cls.members) {
            out << "  member " << text::formatTile(m.tile) << " witness "
                << formatCycles(m.witness);
            if (m.multiplicity > 1)
                out << " x" << m.multiplicity;
            out << '\n';
        }
    }
    out << "classes " << classes.size() << '\n';
    return 0;
}

int runVerifyCatalog(const std::string& format, const std::string& outPath, bool noMeta,
                     std::ostream& out, std::ostream& err) {
    const auto fmt = parseReportFormat(format);
    if (!fmt) {
        err << "verify-catalog: unknown format '" << format << "'\n";
        return 2;
    }
    const VerificationReport report = verifyCatalog(builtinCatalog());
    std::string body = exportReport(report, *fmt);
    if (*fmt == ReportFormat::json && !noMeta) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::parse(body);
        nlohmann::ordered_json withMeta;
        withMeta["meta"] = {{"generator", "hamtiles"}, {"version", "0.1.0"}};
        for (auto& [key, value] : doc.items())
            withMeta[key] = std::move(value);
        body = withMeta.dump(2) + "\n";
    }
    if (outPath.empty()) {
        out << body;
    } else {
        std::ofstream file(outPath, std::ios::binary);
        if (!file) {
            err << "verify-catalog: cannot write " << outPath << '\n';
            return 2;
        }
        file << body;
    }
    return report.summary.failures == 0 ? 0 : 1;
}

int runComplement(const std::string& tilePath, std::optional<int> dim, std::ostream& out) {
    const Tile t = loadTile(tilePath);
    const int n = dim.value_or(t.dim());
    const auto cert = findComplement(t, n);
    if (!cert) {
        out << "NONE\n";
        return 0;
    }
    for (std::size_t i = 0; i < cert->complement.size(); ++i) {
        if (i)
            out << ' ';
        out << text::formatPoint(cert->complement[i], n);
    }
    out << '\n';
    return 0;
}

int runCanon(const std::string& tilePath, std::ostream& out) {
    const Tile t = loadTile(tilePath);
    const CanonicalForm canon = canonicalForm(t);
    out << text::formatTile(canon.tile) << '\n' << formatCycles(canon.perm) << '\n';
    return 0;
}

int runWitness(const std::string& pathA, const std::string& pathB, std::ostream& out) {
    const Tile a = loadTile(pathA);
    const Tile b = loadTile(pathB);
    if (const auto w = findWitness(a, b))
        out << formatCycles(*w) << '\n';
    else
        out << "NONE\n";
    return 0;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classification toolkit for 8-element tiles of the binary Hamming cube"};
    app.name("hamtiles");
    app.require_subcommand(1);

    int rank = 0;
    std::string method = "cases";
    auto* enumerateCmd =
        app.add_subcommand("enumerate", "Enumerate the normalized tiles of a rank");
    enumerateCmd->add_option("--rank", rank, "Rank (3..7)")->required()->check(CLI::Range(3, 7));
    enumerateCmd->add_option("--method", method, "cases | exhaustive | both")
        ->check(CLI::IsMember({"cases", "exhaustive", "both"}));

    int classifyRank = 0;
    std::string classifyInput;
    auto* classifyCmd =
        app.add_subcommand("classify", "Partition tiles into coordinate-permutation classes");
    auto* classifyRankOpt =
        classifyCmd->add_option("--rank", classifyRank, "Classify the full corpus of a rank")
            ->check(CLI::Range(3, 7));
    auto* classifyInputOpt = classifyCmd->add_option(
        "--input", classifyInput, "File with one tile per line ('-' for stdin)");
    classifyRankOpt->excludes(classifyInputOpt);

    std::string format = "json";
    std::string outPath;
    bool noMeta = false;
    auto* verifyCmd =
        app.add_subcommand("verify-catalog", "Audit the built-in catalog and write a report");
    verifyCmd->add_option("--format", format, "json | csv | markdown");
    verifyCmd->add_option("--out", outPath, "Write the report to a file instead of stdout");
    verifyCmd->add_flag("--no-meta", noMeta, "Omit the meta block from JSON output");

    std::string tilePath;
    int ambient = 0;
    auto* complementCmd =
        app.add_subcommand("complement", "Find a tiling complement or print NONE");
    complementCmd->add_option("--tile", tilePath, "Tile file ('-' for stdin)")->required();
    auto* dimOpt = complementCmd->add_option("--dim", ambient, "Ambient dimension (default: tile rank)");

    std::string canonPath;
    auto* canonCmd = app.add_subcommand("canon", "Canonical form and canonicalizing permutation");
    canonCmd->add_option("--tile", canonPath, "Tile file ('-' for stdin)")->required();

    std::string witnessA, witnessB;
    auto* witnessCmd =
        app.add_subcommand("witness", "Permutation mapping tile A onto tile B, or NONE");
    witnessCmd->add_option("--tile-a", witnessA, "First tile file")->required();
    witnessCmd->add_option("--tile-b", witnessB, "Second tile file")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hamtiles");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*enumerateCmd)
            return runEnumerate(rank, method, out, err);
        if (*classifyCmd) {
            if (classifyRankOpt->count() > 0)
                return runClassify(enumerateByCases(classifyRank), out);
            if (classifyInputOpt->count() > 0) {
                std::vector<Tile> tiles;
                if (classifyInput == "-") {
                    tiles = text::parseTileLines(std::cin);
                } else {
                    std::ifstream in(classifyInput);
                    if (!in)
                        throw ParseError("cannot open file: " + classifyInput);
                    tiles = text::parseTileLines(in);
                }
                return runClassify(tiles, out);
            }
            err << "classify: one of --rank or --input is required\n";
            return 2;
        }
        if (*verifyCmd)
            return runVerifyCatalog(format, outPath, noMeta, out, err);
        if (*complementCmd)
            return runComplement(tilePath,
                                 dimOpt->count() > 0 ? std::optional<int>(ambient) : std::nullopt,
                                 out);
        if (*canonCmd)
            return runCanon(canonPath, out);
        if (*witnessCmd)
            return runWitness(witnessA, witnessB, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const SearchLimitError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace hamtiles::cli
