#pragma once

// Registry of numeric claims about the golden ratio, Fibonacci numbers and
// A027941, each recomputed here and given a verdict.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hatlab {

inline constexpr const char* kArtifactVersion = "1.0.0";

enum class Verdict { Confirmed, Discrepancy, FalseAsStated };

std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(const std::string& text);

struct Claim {
    std::string id;
    std::string location;  // heading or figure the claim appears under
    std::string statement;
    std::optional<std::string> printed_value;
    std::string computed_value;
    Verdict verdict = Verdict::Discrepancy;
    std::string note;
    friend bool operator==(const Claim&, const Claim&) = default;
};

struct VerdictTally {
    std::size_t confirmed = 0;
    std::size_t discrepancy = 0;
    std::size_t false_as_stated = 0;
};

struct AuditReport {
    std::vector<Claim> claims;
    std::string version = kArtifactVersion;
    std::string timestamp;  // UTC, ISO 8601

    VerdictTally summary() const;
    /// Throws std::out_of_range for an unknown id.
    const Claim& at(const std::string& id) const;
};

/// Evaluates C1..C15 in order. Never throws: a claim whose evaluation fails
/// is recorded as a Discrepancy carrying the error text.
AuditReport run_audit();

/// Verdicts the registry is expected to produce, in registry order.
std::vector<std::pair<std::string, Verdict>> expected_verdicts();

/// Ids whose verdict differs from `expected` (or is missing).
std::vector<std::string> verdict_mismatches(const AuditReport& report,
                                            const std::vector<std::pair<std::string, Verdict>>& expected);

/// Number of leading characters two decimal strings share, not counting the
/// decimal point.
std::size_t agreeing_digits(const std::string& a, const std::string& b);

}  // namespace hatlab
