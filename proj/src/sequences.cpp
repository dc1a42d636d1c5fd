#include "hatlab/sequences.hpp"

#include <bit>
#include <stdexcept>

namespace hatlab {

std::pair<Integer, Integer> fib_pair(Index n) {
    // F(2k)   = F(k) * (2F(k+1) - F(k))
    // F(2k+1) = F(k)^2 + F(k+1)^2
    Integer a = 0;  // F(k)
    Integer b = 1;  // F(k+1)
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        Integer c = a * (2 * b - a);
        Integer d = a * a + b * b;
        if ((n >> bit) & 1U) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {a, b};
}

Integer fib(Index n) { return fib_pair(n).first; }

Integer lucas(Index n) {
    auto [f, f1] = fib_pair(n);
    return 2 * f1 - f;
}

Integer a027941(Index n) { return fib(2 * n + 1) - 1; }

Integer seeded_sequence(const Integer& seed0, const Integer& seed1, Index n) {
    if (seed0 <= 0 || seed1 <= 0) {
        throw std::invalid_argument("seeded_sequence: seeds must be positive");
    }
    if (n == 0) return seed0;
    // x(n) = seed0*F(n-1) + seed1*F(n)
    auto [prev, cur] = fib_pair(n - 1);
    return seed0 * prev + seed1 * cur;
}

std::string to_string(SeqKind kind) {
    switch (kind) {
        case SeqKind::fibonacci: return "fibonacci";
        case SeqKind::lucas: return "lucas";
        case SeqKind::a027941: return "a027941";
        case SeqKind::seeded: return "seeded";
    }
    return "unknown";
}

std::optional<SeqKind> parse_seq_kind(const std::string& name) {
    if (name == "fibonacci") return SeqKind::fibonacci;
    if (name == "lucas") return SeqKind::lucas;
    if (name == "a027941") return SeqKind::a027941;
    if (name == "seeded") return SeqKind::seeded;
    return std::nullopt;
}

SeqSpec SeqSpec::seeded(Integer s0, Integer s1) {
    if (s0 <= 0 || s1 <= 0) throw std::invalid_argument("seeded sequence: seeds must be positive");
    return {SeqKind::seeded, std::move(s0), std::move(s1)};
}

Integer SeqSpec::term(Index n) const {
    switch (kind) {
        case SeqKind::fibonacci: return fib(n);
        case SeqKind::lucas: return hatlab::lucas(n);
        case SeqKind::a027941: return hatlab::a027941(n);
        case SeqKind::seeded: return seeded_sequence(seed0, seed1, n);
    }
    throw std::logic_error("unknown sequence kind");
}

std::vector<Integer> terms(const SeqSpec& spec, Index from, Index to) {
    if (from > to) throw std::invalid_argument("terms: empty range");
    std::vector<Integer> out;
    out.reserve(to - from + 1);
    out.push_back(spec.term(from));
    if (to == from) return out;
    out.push_back(spec.term(from + 1));
    for (Index n = from + 2; n <= to; ++n) {
        const Integer& a = out[out.size() - 1];
        const Integer& b = out[out.size() - 2];
        // A027941 obeys a(n) = 3a(n-1) - a(n-2) + 1; the others are additive.
        Integer next = spec.kind == SeqKind::a027941 ? Integer(3 * a - b + 1) : Integer(a + b);
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<RatioPoint> ratio_series(const SeqSpec& spec, Index from, Index to,
                                     const SurdNumber& target) {
    if (from > to) throw std::invalid_argument("ratio_series: empty range");
    const std::vector<Integer> values = terms(spec, from, to + 1);
    std::vector<RatioPoint> out;
    out.reserve(to - from + 1);
    for (Index n = from; n <= to; ++n) {
        const Integer& den = values[n - from];
        if (den == 0) {
            throw std::domain_error("ratio_series: term " + std::to_string(n) + " is zero");
        }
        Rational ratio(values[n - from + 1], den);
        SurdNumber delta = SurdNumber(ratio) - target;
        out.push_back({n, std::move(ratio), std::move(delta)});
    }
    return out;
}

std::optional<RecurrenceViolation> check_linear_recurrence(std::span<const Integer> values,
                                                           Index offset, const Integer& c1,
                                                           const Integer& c2, const Integer& k,
                                                           Index first, Index last) {
    if (first < offset + 2 || last >= offset + values.size()) {
        throw std::out_of_range("check_linear_recurrence: range outside the supplied terms");
    }
    for (Index n = first; n <= last; ++n) {
        const Integer& lhs = values[n - offset];
        Integer rhs = c1 * values[n - offset - 1] + c2 * values[n - offset - 2] + k;
        if (lhs != rhs) return RecurrenceViolation{n, lhs, std::move(rhs)};
    }
    return std::nullopt;
}

}  // namespace hatlab
