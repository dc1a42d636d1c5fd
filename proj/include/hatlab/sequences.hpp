#pragma once

// Fibonacci, Lucas, A027941 and seeded additive sequences, all exact.
// Index convention: F(0) = 0, F(1) = 1.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hatlab/exact.hpp"

namespace hatlab {

using Index = std::uint64_t;

/// (F(n), F(n+1)) by fast doubling.
std::pair<Integer, Integer> fib_pair(Index n);

Integer fib(Index n);

/// Lucas numbers, L(0) = 2, L(1) = 1.
Integer lucas(Index n);

/// OEIS A027941: F(2n+1) - 1 = 0, 1, 4, 12, 33, 88, ...
Integer a027941(Index n);

/// Term n of x(k) = x(k-1) + x(k-2) with x(0) = seed0, x(1) = seed1.
/// Both seeds must be positive; throws std::invalid_argument otherwise.
Integer seeded_sequence(const Integer& seed0, const Integer& seed1, Index n);

enum class SeqKind { fibonacci, lucas, a027941, seeded };

std::string to_string(SeqKind kind);
/// Accepts "fibonacci", "lucas", "a027941", "seeded".
std::optional<SeqKind> parse_seq_kind(const std::string& name);

struct SeqSpec {
    SeqKind kind = SeqKind::fibonacci;
    Integer seed0 = 0;
    Integer seed1 = 1;

    static SeqSpec fibonacci() { return {SeqKind::fibonacci, 0, 1}; }
    static SeqSpec lucas() { return {SeqKind::lucas, 2, 1}; }
    static SeqSpec a027941() { return {SeqKind::a027941, 0, 1}; }
    static SeqSpec seeded(Integer s0, Integer s1);

    Integer term(Index n) const;
};

/// Terms from..to inclusive, computed by one pass of the recurrence after
/// seeding with the closed form at `from`.
std::vector<Integer> terms(const SeqSpec& spec, Index from, Index to);

struct RatioPoint {
    Index n = 0;
    Rational ratio;      // term(n+1) / term(n)
    SurdNumber delta;    // ratio - target, exact
};

/// Ratios term(n+1)/term(n) for n in [from, to] together with their exact
/// offsets from `target`. A zero term(n) throws std::domain_error.
std::vector<RatioPoint> ratio_series(const SeqSpec& spec, Index from, Index to,
                                     const SurdNumber& target);

struct RecurrenceViolation {
    Index n = 0;
    Integer lhs;  // term(n)
    Integer rhs;  // c1*term(n-1) + c2*term(n-2) + k
};

/// Checks term(n) = c1*term(n-1) + c2*term(n-2) + k for every n in
/// [first, last]. `values[i]` holds term(offset + i). Returns the first
/// violation, or nothing when the recurrence holds on the whole range.
std::optional<RecurrenceViolation> check_linear_recurrence(std::span<const Integer> values,
                                                           Index offset, const Integer& c1,
                                                           const Integer& c2, const Integer& k,
                                                           Index first, Index last);

}  // namespace hatlab
