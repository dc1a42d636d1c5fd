// hatlab: command-line front end.
//
// Exit codes: 0 success, 1 assertion or strict failure, 2 usage, 3 I/O,
// 4 tiling search failure.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hatlab/audit.hpp"
#include "hatlab/patch_io.hpp"
#include "hatlab/report_io.hpp"
#include "hatlab/rings.hpp"
#include "hatlab/sequences.hpp"
#include "hatlab/svg.hpp"
#include "hatlab/tiler.hpp"

namespace {

using namespace hatlab;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3, kSearch = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kFormats = R"(
Formats:
  seq --csv       header "n,term"; exact integers.
  ratios --csv    header "n,ratio,delta_sign,delta,reference"; ratio = term(n+1)/term(n)
                  and |ratio - reference| to 12 decimals, sign of ratio - reference in
                  delta_sign (+, -, 0), reference constant 1.618033988750 (phi) or
                  2.618033988750 (phi2).
  patch file      JSON {"format":"hatlab-patch","version":1,"meta":{seed_chirality,
                  coronas,generator},"center":i,"placements":[{mirror,rot,q,r,corona}]}.
  import file     JSON {"format":"hatlab-import","version":1,"center":i,"tiles":[...]},
                  each tile {mirror,rot,q,r} or {"matrix":[a,b,c,d],"translation":[x,y]}
                  in Cartesian units with hexagon centres 1 apart, snapped within 1e-9.
  reports         JSON {"format":"hatlab-report","schema_version":1,"kind":...}; fields
                  in fixed order. Audit timestamps are the only varying field.
  CSV uses LF line endings; all decimals come from exact arithmetic.
Exit codes: 0 ok, 1 assertion/strict failure, 2 usage, 3 I/O, 4 search failure.)";

void emit(const std::optional<std::string>& path, const std::string& text) {
    if (path) {
        write_text_file(*path, text);
    } else {
        std::cout << text;
    }
}

SeqSpec make_spec(const std::string& kind_name, const std::string& seed0, const std::string& seed1) {
    const auto kind = parse_seq_kind(kind_name);
    if (!kind) throw UsageError("unknown sequence kind: " + kind_name);
    switch (*kind) {
        case SeqKind::fibonacci: return SeqSpec::fibonacci();
        case SeqKind::lucas: return SeqSpec::lucas();
        case SeqKind::a027941: return SeqSpec::a027941();
        case SeqKind::seeded:
            try {
                return SeqSpec::seeded(parse_integer(seed0), parse_integer(seed1));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
    }
    throw UsageError("unknown sequence kind: " + kind_name);
}

struct SeqArgs {
    std::string kind;
    Index from = 0;
    Index to = 0;
    std::string seed0 = "3";
    std::string seed1 = "5";
    bool csv = false;
    std::string target = "phi";
    std::optional<std::string> out;
};

void add_seq_args(CLI::App* cmd, SeqArgs& a) {
    cmd->add_option("kind", a.kind, "fibonacci | lucas | a027941 | seeded")->required();
    cmd->add_option("from", a.from, "first index")->required();
    cmd->add_option("to", a.to, "last index (inclusive)")->required();
    cmd->add_option("--seed0", a.seed0, "x(0) for kind seeded")->capture_default_str();
    cmd->add_option("--seed1", a.seed1, "x(1) for kind seeded")->capture_default_str();
    cmd->add_flag("--csv", a.csv, "CSV output");
    cmd->add_option("--out", a.out, "write to file instead of stdout");
}

int run_seq(const SeqArgs& a) {
    if (a.from > a.to) throw UsageError("empty range: from > to");
    const SeqSpec spec = make_spec(a.kind, a.seed0, a.seed1);
    if (a.csv) {
        emit(a.out, sequence_csv(spec, a.from, a.to));
    } else {
        std::string text;
        const auto values = terms(spec, a.from, a.to);
        for (std::size_t i = 0; i < values.size(); ++i) {
            text += std::to_string(a.from + i) + "  " + to_string(values[i]) + "\n";
        }
        emit(a.out, text);
    }
    return kOk;
}

int run_ratios(const SeqArgs& a) {
    if (a.from > a.to) throw UsageError("empty range: from > to");
    const SeqSpec spec = make_spec(a.kind, a.seed0, a.seed1);
    SurdNumber target;
    if (a.target == "phi") {
        target = phi();
    } else if (a.target == "phi2") {
        target = phi_squared();
    } else {
        throw UsageError("target must be phi or phi2");
    }
    std::vector<RatioPoint> points;
    try {
        points = ratio_series(spec, a.from, a.to, target);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    if (a.csv) {
        emit(a.out, ratio_csv(points, target));
    } else {
        std::string text = "reference " + to_decimal(target, kReportDigits) + "\n";
        for (const RatioPoint& p : points) {
            text += std::to_string(p.n) + "  " + to_decimal(p.ratio, kReportDigits) + "  " +
                    to_decimal(p.delta, kReportDigits) + "\n";
        }
        emit(a.out, text);
    }
    return kOk;
}

struct AuditArgs {
    bool strict = false;
    std::string format = "text";
    std::optional<std::string> out;
    std::optional<std::string> expected;
    bool no_timestamp = false;
};

int run_audit_cmd(const AuditArgs& a) {
    const AuditReport report = run_audit();
    const bool stamp = !a.no_timestamp;
    emit(a.out, a.format == "structured" ? audit_to_json(report, stamp) : audit_to_text(report, stamp));

    if (a.strict) {
        const VerdictTally t = report.summary();
        if (t.discrepancy + t.false_as_stated > 0) {
            std::cerr << "strict: " << t.discrepancy << " Discrepancy, " << t.false_as_stated << " FalseAsStated\n";
            return kFailed;
        }
        return kOk;
    }
    const auto expected = a.expected ? parse_expected_verdicts(read_text_file(*a.expected)) : expected_verdicts();
    const auto mismatches = verdict_mismatches(report, expected);
    if (!mismatches.empty()) {
        std::cerr << "verdicts differ from expected for:";
        for (const auto& id : mismatches) std::cerr << " " << id;
        std::cerr << "\n";
        return kFailed;
    }
    return kOk;
}

struct TileArgs {
    unsigned coronas = 3;
    std::string seed = "reflected";
    unsigned horizon = TilerConfig{}.search_horizon;
    std::uint64_t budget = TilerConfig{}.node_budget;
    std::string out;
};

int run_tile(const TileArgs& a) {
    TilerConfig cfg;
    cfg.max_coronas = a.coronas;
    cfg.search_horizon = a.horizon;
    cfg.node_budget = a.budget;
    try {
        cfg.seed_chirality = parse_chirality(a.seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    PatchFile file;
    file.meta = {cfg.seed_chirality, cfg.max_coronas, "backtracking"};
    try {
        file.patch = grow_patch(cfg);
    } catch (const SearchError& e) {
        std::cerr << "search failed (" << (e.kind() == SearchError::Kind::HorizonExceeded ? "HorizonExceeded"
                                                                                           : "SearchExhausted")
                  << "): " << e.what() << "\n";
        const auto census = patch_census(e.partial());
        std::cerr << "deepest complete state: " << e.partial().size() << " hats";
        for (const CoronaCensus& c : census) std::cerr << ", corona " << c.corona << ": " << c.total;
        std::cerr << "\n";
        return kSearch;
    }
    const ValidationReport check = validate_patch(file.patch);
    if (!check.ok()) {
        for (const Violation& v : check.violations) std::cerr << to_string(v.kind) << ": " << v.detail << "\n";
        return kFailed;
    }
    write_text_file(a.out, serialize_patch(file));
    std::cerr << "wrote " << file.patch.size() << " hats (" << last_search_nodes() << " search nodes) to " << a.out
              << "\n";
    return kOk;
}

int run_import(const std::string& from, const std::string& out) {
    PatchFile file;
    try {
        file = import_patch(read_text_file(from));
    } catch (const ImportError& e) {
        std::cerr << "import " << to_string(e.kind()) << " error: " << e.what() << "\n";
        return kFailed;
    }
    write_text_file(out, serialize_patch(file));
    return kOk;
}

PatchFile load_valid_patch(const std::string& path) {
    PatchFile file = parse_patch(read_text_file(path));
    const ValidationReport check = validate_patch(file.patch);
    if (!check.ok()) {
        std::string message = "invalid patch " + path + ":";
        for (const Violation& v : check.violations) message += "\n  " + to_string(v.kind) + ": " + v.detail;
        throw FormatError(message);
    }
    return file;
}

struct AnalyzeArgs {
    std::string patch;
    AnalysisOptions options;
    std::string format = "text";
    std::optional<std::string> out;
};

int run_analyze(AnalyzeArgs a) {
    const PatchFile file = load_valid_patch(a.patch);
    AnalysisOptions& o = a.options;
    if (!o.rings && !o.compare && !o.ratios && !o.reflected && !o.detect_period) {
        o.rings = o.compare = o.ratios = o.reflected = o.detect_period = true;
    }
    const AnalysisReport report = analyze(file, o);
    emit(a.out, a.format == "structured" ? analysis_to_json(report) : analysis_to_text(report));
    return kOk;
}

int run_render(const std::string& patch, const std::string& svg, const std::string& color) {
    const auto color_by = parse_color_by(color);
    if (!color_by) throw UsageError("--color-by must be chirality or ring");
    const PatchFile file = load_valid_patch(patch);
    write_text_file(svg, render_svg(file.patch, *color_by));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hatlab: golden-ratio arithmetic, hat patches and claim audit"};
    app.footer(kFormats);
    app.require_subcommand(1);

    SeqArgs seq_args;
    auto* seq = app.add_subcommand("seq", "terms of a sequence");
    add_seq_args(seq, seq_args);

    SeqArgs ratio_args;
    auto* ratios = app.add_subcommand("ratios", "consecutive-term ratios against phi or phi^2");
    add_seq_args(ratios, ratio_args);
    ratios->add_option("--target", ratio_args.target, "phi | phi2")
        ->check(CLI::IsMember({"phi", "phi2"}))
        ->capture_default_str();

    AuditArgs audit_args;
    auto* audit = app.add_subcommand("audit", "recompute the claim registry");
    audit->add_flag("--strict", audit_args.strict, "exit 1 on any Discrepancy or FalseAsStated");
    audit->add_option("--format", audit_args.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    audit->add_option("--out", audit_args.out, "write report to file");
    audit->add_option("--expected", audit_args.expected, "expected-verdict file (default: built-in registry)");
    audit->add_flag("--no-timestamp", audit_args.no_timestamp, "omit the timestamp");

    TileArgs tile_args;
    auto* tile = app.add_subcommand("tile", "grow a hat patch corona by corona");
    tile->add_option("--coronas", tile_args.coronas, "coronas around the centre hat")->capture_default_str();
    tile->add_option("--seed-chirality", tile_args.seed, "normal | reflected")
        ->check(CLI::IsMember({"normal", "reflected"}))
        ->capture_default_str();
    tile->add_option("--horizon", tile_args.horizon, "search horizon in kite steps")->capture_default_str();
    tile->add_option("--node-budget", tile_args.budget, "search node limit")->capture_default_str();
    tile->add_option("--out", tile_args.out, "patch file to write")->required();

    std::string import_from;
    std::string import_out;
    auto* import = app.add_subcommand("import", "convert an external placement list to a patch file");
    import->add_option("--from-hatapp", import_from, "import file")->required();
    import->add_option("--out", import_out, "patch file to write")->required();

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "ring statistics and translation search (all when no flag)");
    analyze_cmd->add_option("patch", analyze_args.patch, "patch file")->required();
    analyze_cmd->add_flag("--rings", analyze_args.options.rings, "hats per ring by chirality");
    analyze_cmd->add_flag("--compare", analyze_args.options.compare, "normal hats per ring vs A027941");
    analyze_cmd->add_flag("--ratios", analyze_args.options.ratios, "normal-count ratios vs phi^2");
    analyze_cmd->add_flag("--reflected", analyze_args.options.reflected, "reflected fraction");
    analyze_cmd->add_flag("--detect-period", analyze_args.options.detect_period, "translation search");
    analyze_cmd->add_option("--window", analyze_args.options.window_radius, "window radius, hex steps")
        ->capture_default_str();
    analyze_cmd->add_option("--max-shift", analyze_args.options.max_shift, "largest shift, hex steps")
        ->capture_default_str();
    analyze_cmd->add_option("--format", analyze_args.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    analyze_cmd->add_option("--out", analyze_args.out, "write report to file");

    std::string render_patch;
    std::string render_svg_path;
    std::string render_color = "chirality";
    auto* render = app.add_subcommand("render", "draw a patch as SVG");
    render->add_option("patch", render_patch, "patch file")->required();
    render->add_option("--svg", render_svg_path, "SVG file to write")->required();
    render->add_option("--color-by", render_color, "chirality | ring")
        ->check(CLI::IsMember({"chirality", "ring"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*seq) return run_seq(seq_args);
        if (*ratios) return run_ratios(ratio_args);
        if (*audit) return run_audit_cmd(audit_args);
        if (*tile) return run_tile(tile_args);
        if (*import) return run_import(import_from, import_out);
        if (*analyze_cmd) return run_analyze(analyze_args);
        if (*render) return run_render(render_patch, render_svg_path, render_color);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
