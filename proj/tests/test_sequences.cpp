#include <gtest/gtest.h>

#include <random>

#include "hatlab/sequences.hpp"

using namespace hatlab;

namespace {

// Plain iterative addition; independent of the doubling formulas.
std::vector<Integer> fib_by_addition(std::size_t count) {
    std::vector<Integer> out{0, 1};
    while (out.size() < count) out.push_back(out[out.size() - 1] + out[out.size() - 2]);
    out.resize(count);
    return out;
}

}  // namespace

TEST(Fibonacci, ListedTerms) {
    const std::vector<long> listed{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
    for (std::size_t n = 0; n < listed.size(); ++n) EXPECT_EQ(fib(n), listed[n]) << n;
    EXPECT_EQ(fib(51), Integer("20365011074"));
}

TEST(Fibonacci, DoublingMatchesAddition) {
    const auto oracle = fib_by_addition(301);
    for (Index n = 0; n <= 300; ++n) ASSERT_EQ(fib(n), oracle[n]) << n;
}

TEST(Fibonacci, Cassini) {
    for (Index n = 1; n <= 200; ++n) {
        const Integer lhs = fib(n - 1) * fib(n + 1) - fib(n) * fib(n);
        ASSERT_EQ(lhs, n % 2 == 0 ? 1 : -1) << n;
    }
}

TEST(Fibonacci, BeyondMachineWords) {
    // F(200) has 42 digits.
    EXPECT_EQ(to_string(fib(200)), "280571172992510140037611932413038677189525");
}

TEST(Lucas, Terms) {
    EXPECT_EQ(lucas(0), 2);
    EXPECT_EQ(lucas(1), 1);
    EXPECT_EQ(lucas(6), 18);
    for (Index n = 1; n <= 200; ++n) ASSERT_EQ(lucas(n), fib(n - 1) + fib(n + 1)) << n;
}

TEST(A027941, Terms) {
    const std::vector<long> listed{0, 1, 4, 12, 33, 88};
    for (std::size_t n = 0; n < listed.size(); ++n) EXPECT_EQ(a027941(n), listed[n]);
    EXPECT_EQ(a027941(25), Integer("20365011073"));
    EXPECT_EQ(a027941(26), Integer("53316291172"));
    EXPECT_EQ(a027941(27), Integer("139583862444"));
    EXPECT_EQ(a027941(28), Integer("365435296161"));
}

TEST(A027941, TelescopingSum) {
    Integer sum = 0;
    for (Index n = 0; n <= 200; ++n) {
        sum += a027941(n);
        ASSERT_EQ(sum, fib(2 * n + 2) - Integer(static_cast<unsigned long>(n + 1))) << n;
    }
}

TEST(Seeded, Terms) {
    const std::vector<long> listed{3, 5, 8, 13, 21, 34};
    for (std::size_t n = 0; n < listed.size(); ++n) EXPECT_EQ(seeded_sequence(3, 5, n), listed[n]);
    EXPECT_EQ(seeded_sequence(1, 1, 12), fib(13));
    EXPECT_THROW(seeded_sequence(0, 5, 3), std::invalid_argument);
    EXPECT_THROW(seeded_sequence(3, -1, 3), std::invalid_argument);
    EXPECT_THROW(SeqSpec::seeded(0, 1), std::invalid_argument);
}

TEST(Terms, RecurrencePassAgreesWithClosedForm) {
    for (auto spec : {SeqSpec::fibonacci(), SeqSpec::lucas(), SeqSpec::a027941(), SeqSpec::seeded(7, 2)}) {
        const auto values = terms(spec, 3, 60);
        for (Index n = 3; n <= 60; ++n) ASSERT_EQ(values[n - 3], spec.term(n)) << to_string(spec.kind);
    }
    EXPECT_THROW(terms(SeqSpec::fibonacci(), 5, 4), std::invalid_argument);
}

TEST(Ratios, PrintedExamples) {
    auto fibs = ratio_series(SeqSpec::fibonacci(), 5, 5, phi());
    EXPECT_EQ(fibs[0].ratio, Rational(Integer(8), Integer(5)));
    EXPECT_EQ(to_decimal(fibs[0].ratio, 3), "1.600");

    auto seeded = ratio_series(SeqSpec::seeded(3, 5), 0, 4, phi());
    const std::vector<std::string> printed{"1.667", "1.600", "1.625", "1.615", "1.619"};
    for (std::size_t i = 0; i < printed.size(); ++i) EXPECT_EQ(to_decimal(seeded[i].ratio, 3), printed[i]);

    auto a = ratio_series(SeqSpec::a027941(), 26, 26, phi_squared());
    EXPECT_EQ(a[0].ratio, Rational(Integer("139583862444"), Integer("53316291172")));
    EXPECT_EQ(to_decimal(a[0].ratio, 11), "2.61803398878");
}

TEST(Ratios, DeltaIsExact) {
    for (const auto& point : ratio_series(SeqSpec::fibonacci(), 1, 40, phi())) {
        ASSERT_EQ(point.delta + phi(), SurdNumber(point.ratio));
    }
}

TEST(Ratios, ZeroTermRejected) {
    EXPECT_THROW(ratio_series(SeqSpec::fibonacci(), 0, 3, phi()), std::domain_error);
    EXPECT_THROW(ratio_series(SeqSpec::a027941(), 0, 3, phi_squared()), std::domain_error);
}

TEST(Ratios, FibonacciConvergesAlternating) {
    auto series = ratio_series(SeqSpec::fibonacci(), 2, 90, phi());
    for (std::size_t i = 1; i < series.size(); ++i) {
        const SurdNumber prev = series[i - 1].delta, cur = series[i].delta;
        const SurdNumber prev_abs = prev.sign() < 0 ? -prev : prev;
        const SurdNumber cur_abs = cur.sign() < 0 ? -cur : cur;
        ASSERT_LT(cur_abs, prev_abs) << series[i].n;
        ASSERT_EQ(cur.sign(), -prev.sign()) << series[i].n;
    }
}

TEST(Ratios, A027941WithinTenToMinusTenFrom25) {
    const SurdNumber tolerance(Rational(Integer(1), pow10(10)));
    for (const auto& point : ratio_series(SeqSpec::a027941(), 25, 120, phi_squared())) {
        const SurdNumber mag = point.delta.sign() < 0 ? -point.delta : point.delta;
        ASSERT_LT(mag, tolerance) << point.n;
    }
    auto n24 = ratio_series(SeqSpec::a027941(), 24, 24, phi_squared());
    const SurdNumber mag = n24[0].delta.sign() < 0 ? -n24[0].delta : n24[0].delta;
    EXPECT_GT(mag, tolerance);
}

TEST(Ratios, RandomSeedsConverge) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> seed(1, 1'000'000);
    const SurdNumber tolerance(Rational(Integer(1), pow10(6)));
    for (int trial = 0; trial < 100; ++trial) {
        auto spec = SeqSpec::seeded(seed(rng), seed(rng));
        auto series = ratio_series(spec, 0, 39, phi());
        const SurdNumber last = series.back().delta;
        ASSERT_LT(last.sign() < 0 ? -last : last, tolerance);
    }
}

TEST(Recurrence, Checks) {
    const auto fibs = terms(SeqSpec::fibonacci(), 0, 100);
    EXPECT_FALSE(check_linear_recurrence(fibs, 0, 1, 1, 0, 2, 100));

    const auto a = terms(SeqSpec::a027941(), 0, 500);
    auto violation = check_linear_recurrence(a, 0, 1, 1, 2, 3, 500);
    ASSERT_TRUE(violation);
    EXPECT_EQ(violation->n, 3U);
    EXPECT_EQ(violation->lhs, 12);
    EXPECT_EQ(violation->rhs, 7);
    EXPECT_FALSE(check_linear_recurrence(a, 0, 3, -1, 1, 2, 500));

    // Closed form, not the recurrence pass, as the oracle.
    std::vector<Integer> closed;
    for (Index n = 0; n <= 500; ++n) closed.push_back(fib(2 * n + 1) - 1);
    EXPECT_FALSE(check_linear_recurrence(closed, 0, 3, -1, 1, 2, 500));
    EXPECT_THROW(check_linear_recurrence(closed, 0, 1, 1, 0, 1, 10), std::out_of_range);
}
