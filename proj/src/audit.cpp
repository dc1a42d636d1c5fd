#include "hatlab/audit.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <stdexcept>

#include "hatlab/exact.hpp"
#include "hatlab/sequences.hpp"

namespace hatlab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "Confirmed";
        case Verdict::Discrepancy: return "Discrepancy";
        case Verdict::FalseAsStated: return "FalseAsStated";
    }
    return "Discrepancy";
}

std::optional<Verdict> parse_verdict(const std::string& text) {
    if (text == "Confirmed") return Verdict::Confirmed;
    if (text == "Discrepancy") return Verdict::Discrepancy;
    if (text == "FalseAsStated") return Verdict::FalseAsStated;
    return std::nullopt;
}

VerdictTally AuditReport::summary() const {
    VerdictTally t;
    for (const Claim& c : claims) {
        switch (c.verdict) {
            case Verdict::Confirmed: ++t.confirmed; break;
            case Verdict::Discrepancy: ++t.discrepancy; break;
            case Verdict::FalseAsStated: ++t.false_as_stated; break;
        }
    }
    return t;
}

const Claim& AuditReport::at(const std::string& id) const {
    for (const Claim& c : claims)
        if (c.id == id) return c;
    throw std::out_of_range("no claim " + id);
}

std::size_t agreeing_digits(const std::string& a, const std::string& b) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) break;
        if (a[i] != '.') ++count;
    }
    return count;
}

namespace {

const SurdNumber kPhi = phi();

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string join(const std::vector<Integer>& values) {
    std::vector<std::string> parts;
    for (const Integer& v : values) parts.push_back(to_string(v));
    return join(parts);
}

std::string str(std::uint64_t n) { return std::to_string(n); }

template <unsigned long D>
Quadratic<D> abs(const Quadratic<D>& x) {
    return x.sign() < 0 ? -x : x;
}

// Smallest n with F(n) = value, searching n <= limit.
std::optional<Index> fibonacci_index(const Integer& value, Index limit) {
    for (Index n = 0; n <= limit; ++n)
        if (fib(n) == value) return n;
    return std::nullopt;
}

Claim c1() {
    Claim c{"C1", "Golden Ratio", "the golden ratio is approximately 1.6180339887", "1.6180339887", "", {}, ""};
    c.computed_value = to_decimal(kPhi, 10);
    c.verdict = c.computed_value == *c.printed_value ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = "to_decimal(phi, 10), phi = (1 + sqrt 5)/2, rounded half away from zero";
    return c;
}

Claim c2() {
    Claim c{"C2", "Golden Ratio", "1/phi = phi - 1", "1/Φ = Φ − 1", "", {}, ""};
    const SurdNumber lhs = kPhi.reciprocal();
    const SurdNumber rhs = kPhi - SurdNumber(1);
    const bool quadratic = (kPhi * kPhi - kPhi - SurdNumber(1)).is_zero();
    c.computed_value = "1/phi = " + lhs.str() + "; phi - 1 = " + rhs.str() +
                       "; phi^2 - phi - 1 = " + (kPhi * kPhi - kPhi - SurdNumber(1)).str();
    c.verdict = lhs == rhs && quadratic ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = "exact equality in Q(sqrt 5)";
    return c;
}

Claim c3() {
    Claim c{"C3", "Golden Ratio", "phi is irrational: b^2 = a^2 - ab has no coprime solution", "b² = a² − ab", "", {},
            ""};
    const IrrationalityWitness w = irrationality_witness(2000);
    c.computed_value = "min |p^2 - pq - q^2| over 1 <= p, q <= " + std::to_string(w.max_height) + " is " +
                       std::to_string(w.minimum) + " at (p, q) = (" + std::to_string(w.p) + ", " +
                       std::to_string(w.q) + ")";
    c.verdict = w.minimum >= 1 ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = "irrationality_witness(2000); bounded-height certificate only, the general theorem is not re-proved";
    return c;
}

Claim c4() {
    Claim c{"C4", "Fibonacci Series", "the Fibonacci series begins 0, 1, 1, 2, ..., 144, 233",
            "0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233", "", {}, ""};
    c.computed_value = join(terms(SeqSpec::fibonacci(), 0, 13));
    c.verdict = c.computed_value == *c.printed_value ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = "terms(fibonacci, 0, 13) with F(0) = 0";
    return c;
}

Claim c5() {
    Claim c{"C5", "Relation between the Golden Ratio and the Fibonacci Series",
            "ratios of the series 3, 5, 8, 13, 21, 34 are close to phi", "1.667, 1.600, 1.625, 1.615, 1.619", "", {},
            ""};
    std::vector<std::string> parts;
    for (const RatioPoint& p : ratio_series(SeqSpec::seeded(3, 5), 0, 4, kPhi)) parts.push_back(to_decimal(p.ratio, 3));
    c.computed_value = join(parts);
    c.verdict = c.computed_value == *c.printed_value ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = "ratio_series(seeded(3, 5), 0, 4) at 3 decimals";
    return c;
}

const Integer kPrintedLow("1100087778366101931", 10);
const Integer kPrintedHigh("1779979416004714189", 10);

Claim c6() {
    Claim c{"C6", "Relation between the Golden Ratio and the Fibonacci Series",
            "F(87) and F(88) are 1100087778366101931 and 1779979416004714189",
            "F(87) = 1100087778366101931; F(88) = 1779979416004714189", "", {}, ""};
    const auto low = fibonacci_index(kPrintedLow, 200);
    const auto high = fibonacci_index(kPrintedHigh, 200);
    if (!low || !high) {
        c.computed_value = "printed integers are not both Fibonacci numbers";
        c.verdict = Verdict::Discrepancy;
        return c;
    }
    c.computed_value = "F(" + str(*low) + ") = " + to_string(kPrintedLow) + "; F(" + str(*high) +
                       ") = " + to_string(kPrintedHigh);
    const bool labels_right = *low == 87 && *high == 88;
    c.verdict = labels_right ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = *high == *low + 1 ? "values are consecutive Fibonacci numbers; with F(0) = 0 the labels are off by one"
                               : "values are not consecutive Fibonacci numbers";
    if (labels_right) c.note = "labels agree with F(0) = 0";
    return c;
}

Claim c7() {
    Claim c{"C7", "Relation between the Golden Ratio and the Fibonacci Series",
            "1779979416004714189 / 1100087778366101931 = 1.61803398875", "1.61803398875", "", {}, ""};
    c.computed_value = to_decimal(Rational(kPrintedHigh, kPrintedLow), 11);
    c.verdict = c.computed_value == *c.printed_value ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = "to_decimal of the exact quotient of the printed integers, 11 decimals";
    return c;
}

Claim c8() {
    Claim c{"C8", "OEIS A027941 Sequence", "a(n) = Fibonacci(2n + 1) - 1 starts 0, 1, 4, 12, 33, 88",
            "0, 1, 4, 12, 33, 88", "", {}, ""};
    const auto values = terms(SeqSpec::a027941(), 0, 5);
    bool closed_form = true;
    for (Index n = 0; n < values.size(); ++n) closed_form = closed_form && values[n] == fib(2 * n + 1) - 1;
    // The worked examples F(3) - 1 = 1, F(5) - 1 = 4, F(7) - 1 = 12.
    const bool examples = fib(3) - 1 == 1 && fib(5) - 1 == 4 && fib(7) - 1 == 12;
    c.computed_value = join(values);
    c.verdict = c.computed_value == *c.printed_value && closed_form && examples ? Verdict::Confirmed
                                                                                  : Verdict::Discrepancy;
    c.note = "terms(a027941, 0, 5); recurrence-stepped terms agree with fib(2n + 1) - 1";
    return c;
}

Claim c9() {
    Claim c{"C9", "OEIS A027941 Sequence", "a(n) = a(n - 1) + a(n - 2) + 2 for n > 2, with a(0) = -1 and a(1) = 0",
            "a(n) = a(n − 1) + a(n − 2) + 2; a(0) = −1; a(1) = 0", "", {}, ""};
    constexpr Index kLast = 500;
    std::vector<Integer> values;
    for (Index n = 0; n <= kLast; ++n) values.push_back(a027941(n));
    const auto stated = check_linear_recurrence(values, 0, 1, 1, 2, 3, kLast);
    const auto derived = check_linear_recurrence(values, 0, 3, -1, 1, 2, kLast);
    std::string computed;
    if (stated) {
        computed = "first violation n = " + str(stated->n) + ": a(" + str(stated->n) + ") = " +
                   to_string(stated->lhs) + ", a(" + str(stated->n - 1) + ") + a(" + str(stated->n - 2) +
                   ") + 2 = " + to_string(stated->rhs);
    } else {
        computed = "stated recurrence holds for 3 <= n <= " + str(kLast);
    }
    computed += "; initial values from the closed form: a(0) = " + to_string(values[0]) +
                ", a(1) = " + to_string(values[1]);
    if (!derived) computed += "; a(n) = 3a(n - 1) - a(n - 2) + 1 holds for 2 <= n <= " + str(kLast);
    c.computed_value = computed;
    c.verdict = stated || values[0] != -1 || values[1] != 0 ? Verdict::Discrepancy : Verdict::Confirmed;
    c.note = "check_linear_recurrence over a027941(0..500) with coefficients (1, 1, 2) from n = 3 and (3, -1, 1) "
             "from n = 2";
    return c;
}

Claim c10() {
    Claim c{"C10", "OEIS A027941 Sequence", "the sum of the first n terms equals the nth Lucas number minus one",
            "sum of first n terms = L(n) − 1", "", {}, ""};
    constexpr Index kLimit = 200;
    // Partial sums S(n) = a(0) + ... + a(n - 1).
    std::vector<Integer> partial{0};
    for (Index k = 0; k <= kLimit; ++k) partial.push_back(partial.back() + a027941(k));
    std::optional<Index> first_fail;
    for (Index n = 1; n <= kLimit && !first_fail; ++n)
        if (partial[n] != lucas(n) - 1) first_fail = n;
    bool telescoping = true;
    for (Index n = 0; n <= kLimit; ++n)
        telescoping = telescoping && partial[n + 1] == fib(2 * n + 2) - Integer(static_cast<unsigned long>(n + 1));

    std::vector<Integer> head(partial.begin() + 1, partial.begin() + 6);
    c.computed_value = "sums of the first n terms, n = 1..5: " + join(head);
    if (first_fail) {
        c.computed_value += "; fails at n = " + str(*first_fail) + ": " + to_string(partial[*first_fail]) +
                            " vs L(" + str(*first_fail) + ") - 1 = " + to_string(lucas(*first_fail) - 1);
    }
    if (telescoping) {
        c.computed_value += "; a(0) + ... + a(n) = F(2n + 2) - (n + 1) holds for n <= " + str(kLimit);
    }
    c.verdict = first_fail ? Verdict::Discrepancy : Verdict::Confirmed;
    c.note = "first n terms read as a(0)..a(n - 1), n = 1..200; reading them as a(1)..a(n) fails already at n = 1 "
             "(1 vs L(1) - 1 = 0)";
    return c;
}

Claim c11() {
    Claim c{"C11", "Research Methodology", "a(25), a(26), a(27) and a(28) as printed",
            "a(25) = 20365011072; a(26) = 53316291172; a(27) = 139583862444; a(28) = 365435296161", "", {}, ""};
    const std::vector<std::pair<Index, Integer>> printed{{25, Integer("20365011072", 10)},
                                                         {26, Integer("53316291172", 10)},
                                                         {27, Integer("139583862444", 10)},
                                                         {28, Integer("365435296161", 10)}};
    std::vector<std::string> values;
    std::vector<std::string> wrong;
    for (const auto& [n, value] : printed) {
        const Integer computed = a027941(n);
        values.push_back("a(" + str(n) + ") = " + to_string(computed));
        if (computed != value) {
            wrong.push_back("a(" + str(n) + ") printed " + to_string(value) + ", off by " +
                            to_string(Integer(computed - value)));
        }
    }
    c.computed_value = join(values, "; ");
    c.verdict = wrong.empty() ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = wrong.empty() ? "all four match a027941(n)" : "mismatch: " + join(wrong, "; ") + "; other terms match";
    return c;
}

Claim c12() {
    Claim c{"C12", "Research Methodology", "a(26)/a(25), a(27)/a(26), a(28)/a(27) are approximately as printed",
            "2.61803398896, 2.61803398878, 2.61803398875", "", {}, ""};
    struct Row {
        Index n;
        Integer num;
        Integer den;
        std::string printed;
    };
    const std::vector<Row> rows{{25, Integer("53316291172", 10), Integer("20365011072", 10), "2.61803398896"},
                                {26, Integer("139583862444", 10), Integer("53316291172", 10), "2.61803398878"},
                                {27, Integer("365435296161", 10), Integer("139583862444", 10), "2.61803398875"}};
    std::vector<std::string> from_printed;
    std::vector<std::string> from_oracle;
    std::vector<std::string> agreement;
    bool all_match = true;
    for (const Row& row : rows) {
        const std::string p = to_decimal(Rational(row.num, row.den), 11);
        const std::string o = to_decimal(Rational(a027941(row.n + 1), a027941(row.n)), 11);
        from_printed.push_back(p);
        from_oracle.push_back(o);
        agreement.push_back(std::to_string(agreeing_digits(p, row.printed)) + "/" +
                            std::to_string(agreeing_digits(o, row.printed)));
        all_match = all_match && p == row.printed;
    }
    c.computed_value = "from printed operands: " + join(from_printed) + "; from a027941: " + join(from_oracle) +
                       "; leading digits agreeing with print (printed operands/a027941): " + join(agreement);
    c.verdict = all_match ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = "to_decimal of exact quotients at 11 decimals; the third printed ratio disagrees in its last digit even "
             "from its own operands (365435296161/139583862444 = 2.6180339887615...)";
    return c;
}

Claim c13() {
    Claim c{"C13", "Research Methodology", "1 + phi = phi^2, numerically 2.61803398875 = 1 + 1.61803398875",
            "1 + Φ = Φ²; 2.61803398875", "", {}, ""};
    const SurdNumber lhs = SurdNumber(1) + kPhi;
    const SurdNumber rhs = kPhi * kPhi;
    const std::string decimal = to_decimal(rhs, 11);
    c.computed_value = "1 + phi = " + lhs.str() + "; phi^2 = " + rhs.str() + "; to_decimal(phi^2, 11) = " + decimal;
    c.verdict = lhs == rhs && decimal == "2.61803398875" ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = "exact equality in Q(sqrt 5)";
    return c;
}

Claim c14() {
    Claim c{"C14", "Research Methodology", "the square of an irrational number must be irrational", std::nullopt, "",
            {}, ""};
    using Sqrt2 = Quadratic<2>;
    const Sqrt2 root2 = Sqrt2::root();
    const Sqrt2 square = root2 * root2;
    const bool counterexample = !root2.is_rational() && square.is_rational();
    const SurdNumber phi2 = kPhi * kPhi;
    const bool phi2_irrational = phi2 == kPhi + SurdNumber(1) && !phi2.is_rational();
    c.computed_value = "counterexample: sqrt 2 is irrational and (sqrt 2)^2 = " + square.str() +
                       "; phi^2 = phi + 1 = " + phi2.str() + (phi2_irrational ? " is irrational" : "");
    c.verdict = counterexample ? Verdict::FalseAsStated : Verdict::Discrepancy;
    c.note = "the general statement is false; the narrower claim that phi^2 is irrational holds, since phi^2 = phi + 1 "
             "and phi is irrational (C3)";
    return c;
}

Claim c15() {
    Claim c{"C15", "Research Methodology", "a(n + 1)/a(n) approaches phi^2", std::nullopt, "", {}, ""};
    const auto series = ratio_series(SeqSpec::a027941(), 5, 40, phi_squared());
    bool decreasing = true;
    for (std::size_t i = 1; i < series.size(); ++i)
        decreasing = decreasing && abs(series[i].delta) < abs(series[i - 1].delta);
    const SurdNumber bound(Rational(Integer(1), pow10(10)));
    const SurdNumber at25 = abs(series[25 - 5].delta);
    c.computed_value = "|a(26)/a(25) - phi^2| = " + to_decimal(at25, 15) + (at25 < bound ? " < 1e-10" : " >= 1e-10") +
                       "; |delta| strictly decreasing for 5 <= n <= 40: " + (decreasing ? "yes" : "no");
    c.verdict = decreasing && at25 < bound ? Verdict::Confirmed : Verdict::Discrepancy;
    c.note = "ratio_series(a027941, 5, 40, phi^2), exact comparisons in Q(sqrt 5)";
    return c;
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

AuditReport run_audit() {
    const std::vector<std::pair<const char*, std::function<Claim()>>> registry{
        {"C1", c1},   {"C2", c2},   {"C3", c3},   {"C4", c4},   {"C5", c5},
        {"C6", c6},   {"C7", c7},   {"C8", c8},   {"C9", c9},   {"C10", c10},
        {"C11", c11}, {"C12", c12}, {"C13", c13}, {"C14", c14}, {"C15", c15},
    };
    AuditReport report;
    for (const auto& [id, evaluate] : registry) {
        try {
            report.claims.push_back(evaluate());
        } catch (const std::exception& e) {
            Claim failed;
            failed.id = id;
            failed.computed_value = "evaluation failed";
            failed.verdict = Verdict::Discrepancy;
            failed.note = e.what();
            report.claims.push_back(std::move(failed));
        }
    }
    report.timestamp = utc_now();
    return report;
}

std::vector<std::pair<std::string, Verdict>> expected_verdicts() {
    using enum Verdict;
    return {{"C1", Confirmed},    {"C2", Confirmed},    {"C3", Confirmed},      {"C4", Confirmed},
            {"C5", Confirmed},    {"C6", Discrepancy},  {"C7", Confirmed},      {"C8", Confirmed},
            {"C9", Discrepancy},  {"C10", Discrepancy}, {"C11", Discrepancy},   {"C12", Discrepancy},
            {"C13", Confirmed},   {"C14", FalseAsStated}, {"C15", Confirmed}};
}

std::vector<std::string> verdict_mismatches(const AuditReport& report,
                                            const std::vector<std::pair<std::string, Verdict>>& expected) {
    std::vector<std::string> out;
    for (const auto& [id, verdict] : expected) {
        const auto it = std::find_if(report.claims.begin(), report.claims.end(),
                                     [&](const Claim& c) { return c.id == id; });
        if (it == report.claims.end() || it->verdict != verdict) out.push_back(id);
    }
    for (const Claim& c : report.claims) {
        const bool known = std::any_of(expected.begin(), expected.end(), [&](const auto& e) { return e.first == c.id; });
        if (!known) out.push_back(c.id);
    }
    return out;
}

}  // namespace hatlab
