#include "hatlab/report_io.hpp"

#include <sstream>

#include "json.hpp"

namespace hatlab {

using json = nlohmann::ordered_json;

namespace {

json header(const char* kind) {
    json j;
    j["format"] = "hatlab-report";
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = kind;
    return j;
}

std::string decimal(const Rational& x) { return to_decimal(x, kReportDigits); }
std::string decimal(const SurdNumber& x) { return to_decimal(x, kReportDigits); }

const char* sign_char(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

}  // namespace

std::string audit_to_json(const AuditReport& report, bool include_timestamp) {
    json j = header("audit");
    j["artifact_version"] = report.version;
    if (include_timestamp) j["timestamp"] = report.timestamp;
    const VerdictTally t = report.summary();
    j["summary"] = {{"Confirmed", t.confirmed}, {"Discrepancy", t.discrepancy}, {"FalseAsStated", t.false_as_stated}};
    json claims = json::array();
    for (const Claim& c : report.claims) {
        json row;
        row["id"] = c.id;
        row["location"] = c.location;
        row["statement"] = c.statement;
        row["printed_value"] = c.printed_value ? json(*c.printed_value) : json(nullptr);
        row["computed_value"] = c.computed_value;
        row["verdict"] = to_string(c.verdict);
        row["note"] = c.note;
        claims.push_back(std::move(row));
    }
    j["claims"] = std::move(claims);
    return j.dump(2) + "\n";
}

std::string audit_to_text(const AuditReport& report, bool include_timestamp) {
    std::ostringstream out;
    out << "hatlab audit, version " << report.version << "\n";
    if (include_timestamp) out << "generated " << report.timestamp << "\n";
    out << "\n";
    for (const Claim& c : report.claims) {
        out << c.id << "  [" << to_string(c.verdict) << "]  " << c.location << "\n";
        out << "  claim:    " << c.statement << "\n";
        if (c.printed_value) out << "  printed:  " << *c.printed_value << "\n";
        out << "  computed: " << c.computed_value << "\n";
        if (!c.note.empty()) out << "  note:     " << c.note << "\n";
        out << "\n";
    }
    const VerdictTally t = report.summary();
    out << "Confirmed " << t.confirmed << ", Discrepancy " << t.discrepancy << ", FalseAsStated "
        << t.false_as_stated << "\n";
    return out.str();
}

std::string expected_verdicts_to_json(const std::vector<std::pair<std::string, Verdict>>& verdicts) {
    json j;
    j["format"] = "hatlab-expected-verdicts";
    j["version"] = 1;
    json map = json::object();
    for (const auto& [id, v] : verdicts) map[id] = to_string(v);
    j["verdicts"] = std::move(map);
    return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, Verdict>> parse_expected_verdicts(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("expected verdicts: not valid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "hatlab-expected-verdicts") {
        throw FormatError("expected verdicts: wrong or missing format tag");
    }
    if (!j.contains("version") || j.at("version") != 1) throw FormatError("expected verdicts: unsupported version");
    if (!j.contains("verdicts") || !j.at("verdicts").is_object()) {
        throw FormatError("expected verdicts: missing \"verdicts\" object");
    }
    std::vector<std::pair<std::string, Verdict>> out;
    for (const auto& [id, v] : j.at("verdicts").items()) {
        const auto verdict = v.is_string() ? parse_verdict(v.get<std::string>()) : std::nullopt;
        if (!verdict) throw FormatError("expected verdicts: bad verdict for " + id);
        out.emplace_back(id, *verdict);
    }
    return out;
}

AnalysisReport analyze(const PatchFile& file, const AnalysisOptions& options) {
    AnalysisReport out;
    out.meta = file.meta;
    out.placements = file.patch.size();
    const RingSeries series = ring_counts(file.patch);
    if (options.rings) out.rings = series;
    if (options.compare) out.comparison = compare_to_a027941(series);
    if (options.ratios) {
        try {
            out.ratios = ring_ratio_report(series);
        } catch (const std::domain_error& e) {
            out.ratios_error = e.what();
        }
    }
    if (options.reflected) {
        out.reflected_all = reflected_fraction(file.patch, false);
        out.reflected_interior = reflected_fraction(file.patch, true);
    }
    if (options.detect_period) {
        const HexCoord center = file.patch.placements.at(file.patch.center).iso.trans();
        out.period = detect_translation(file.patch.placements, options.window_radius, options.max_shift, center);
        out.max_shift = options.max_shift;
    }
    return out;
}

std::string analysis_to_json(const AnalysisReport& report) {
    json j = header("analysis");
    j["ring_definition"] = kRingDefinition;
    j["patch"] = {{"placements", report.placements},
                  {"seed_chirality", to_string(report.meta.seed_chirality)},
                  {"coronas", report.meta.coronas},
                  {"generator", report.meta.generator}};
    if (report.rings) {
        json rings = json::array();
        for (const Ring& r : report.rings->rings) {
            rings.push_back({{"index", r.index}, {"total", r.total}, {"normal", r.normal}, {"reflected", r.reflected}});
        }
        j["rings"] = std::move(rings);
    }
    if (report.comparison) {
        json rows = json::array();
        for (const RingMatch& m : report.comparison->rows) {
            rows.push_back({{"index", m.index},
                            {"observed_normal", m.observed},
                            {"a027941", to_string(m.target)},
                            {"match", m.match}});
        }
        std::vector<std::string> prefix;
        for (Index n = 0; n < 6; ++n) prefix.push_back(to_string(a027941(n)));
        j["comparison"] = {{"target_prefix", prefix},
                           {"all_match", report.comparison->all_match()},
                           {"rows", std::move(rows)}};
    }
    if (report.ratios) {
        json rows = json::array();
        for (const RingRatio& r : *report.ratios) {
            rows.push_back({{"index", r.index},
                            {"ratio", r.ratio.str()},
                            {"ratio_decimal", decimal(r.ratio)},
                            {"delta_vs_phi_squared", decimal(r.delta)}});
        }
        j["ratios"] = std::move(rows);
    } else if (report.ratios_error) {
        j["ratios"] = {{"error", *report.ratios_error}};
    }
    if (report.reflected_all) {
        j["reflected_fraction"] = {{"all", report.reflected_all->str()},
                                   {"all_decimal", decimal(*report.reflected_all)},
                                   {"interior", report.reflected_interior->str()},
                                   {"interior_decimal", decimal(*report.reflected_interior)}};
    }
    if (report.period) {
        const PeriodicityVerdict& v = *report.period;
        j["periodicity"] = {{"window_radius_hex_steps", v.window_radius},
                            {"max_shift_hex_steps", report.max_shift},
                            {"tiles_checked", v.tiles_checked},
                            {"translation", v.translation ? json::array({v.translation->q, v.translation->r})
                                                          : json(nullptr)}};
    }
    return j.dump(2) + "\n";
}

std::string analysis_to_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "patch: " << report.placements << " hats, seed " << to_string(report.meta.seed_chirality) << ", "
        << report.meta.coronas << " coronas, generator " << report.meta.generator << "\n";
    out << "rings: " << kRingDefinition << "\n";
    if (report.rings) {
        out << "\nring  total  normal  reflected\n";
        for (const Ring& r : report.rings->rings) {
            out << r.index << "  " << r.total << "  " << r.normal << "  " << r.reflected << "\n";
        }
    }
    if (report.comparison) {
        out << "\nnormal hats per ring vs A027941 (target 0, 1, 4, 12, 33, 88, ...)\n";
        out << "ring  observed  target  match\n";
        for (const RingMatch& m : report.comparison->rows) {
            out << m.index << "  " << m.observed << "  " << to_string(m.target) << "  " << (m.match ? "yes" : "no")
                << "\n";
        }
        out << "all match: " << (report.comparison->all_match() ? "yes" : "no") << "\n";
    }
    if (report.ratios) {
        out << "\nring  normal ratio  decimal  delta vs phi^2\n";
        for (const RingRatio& r : *report.ratios) {
            out << r.index << "  " << r.ratio.str() << "  " << decimal(r.ratio) << "  " << decimal(r.delta) << "\n";
        }
    } else if (report.ratios_error) {
        out << "\nratios: " << *report.ratios_error << "\n";
    }
    if (report.reflected_all) {
        out << "\nreflected fraction: " << report.reflected_all->str() << " (" << decimal(*report.reflected_all)
            << "), interior " << report.reflected_interior->str() << " (" << decimal(*report.reflected_interior)
            << ")\n";
    }
    if (report.period) {
        const PeriodicityVerdict& v = *report.period;
        out << "\ntranslation search: window " << v.window_radius << " hex steps, shifts up to " << report.max_shift
            << ", " << v.tiles_checked << " hats checked: ";
        if (v.translation) {
            out << "period (" << v.translation->q << ", " << v.translation->r << ")\n";
        } else {
            out << "none\n";
        }
    }
    return out.str();
}

std::string sequence_csv(const SeqSpec& spec, Index from, Index to) {
    std::string out = "n,term\n";
    const auto values = terms(spec, from, to);
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += std::to_string(from + i) + "," + to_string(values[i]) + "\n";
    }
    return out;
}

std::string ratio_csv(const std::vector<RatioPoint>& points, const SurdNumber& reference) {
    std::string out = "n,ratio,delta_sign,delta,reference\n";
    const std::string ref = decimal(reference);
    for (const RatioPoint& p : points) {
        const int s = p.delta.sign();
        out += std::to_string(p.n) + "," + decimal(p.ratio) + "," + sign_char(s) + "," +
               decimal(s < 0 ? -p.delta : p.delta) + "," + ref + "\n";
    }
    return out;
}

}  // namespace hatlab
