#pragma once

// Structured (JSON) and text reports, plus the CSV tables behind `seq` and
// `ratios`. Field order is fixed; the only non-deterministic field is the
// audit timestamp, which callers may leave out.

#include <optional>
#include <string>
#include <vector>

#include "hatlab/audit.hpp"
#include "hatlab/patch_io.hpp"
#include "hatlab/rings.hpp"
#include "hatlab/sequences.hpp"

namespace hatlab {

inline constexpr int kReportSchemaVersion = 1;
/// Fractional digits used for every decimal in CSV output and reports.
inline constexpr unsigned kReportDigits = 12;

std::string audit_to_json(const AuditReport& report, bool include_timestamp);
std::string audit_to_text(const AuditReport& report, bool include_timestamp);

/// {"format": "hatlab-expected-verdicts", "version": 1, "verdicts": {"C1": "Confirmed", ...}}
std::string expected_verdicts_to_json(const std::vector<std::pair<std::string, Verdict>>& verdicts);
/// Throws FormatError.
std::vector<std::pair<std::string, Verdict>> parse_expected_verdicts(const std::string& text);

struct AnalysisOptions {
    bool rings = false;
    bool compare = false;
    bool ratios = false;
    bool reflected = false;
    bool detect_period = false;
    int window_radius = 4;  // hex steps, about two hats across
    int max_shift = 8;      // hex steps
};

struct AnalysisReport {
    PatchMeta meta;
    std::size_t placements = 0;
    std::optional<RingSeries> rings;
    std::optional<RingComparison> comparison;
    std::optional<std::vector<RingRatio>> ratios;
    std::optional<std::string> ratios_error;
    std::optional<Rational> reflected_all;
    std::optional<Rational> reflected_interior;
    std::optional<PeriodicityVerdict> period;
    int max_shift = 0;
};

/// Runs the selected analyses. The caller is expected to have validated the
/// patch; the detector window is centred on the centre hat's hexagon.
AnalysisReport analyze(const PatchFile& file, const AnalysisOptions& options);

std::string analysis_to_json(const AnalysisReport& report);
std::string analysis_to_text(const AnalysisReport& report);

/// Header "n,term".
std::string sequence_csv(const SeqSpec& spec, Index from, Index to);
/// Header "n,ratio,delta_sign,delta,reference": ratio = term(n+1)/term(n),
/// delta = |ratio - reference| with its sign in delta_sign (+, - or 0).
std::string ratio_csv(const std::vector<RatioPoint>& points, const SurdNumber& reference);

}  // namespace hatlab
