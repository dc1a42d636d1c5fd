#pragma once

/**
 * @file exact.hpp
 * @brief Exact arithmetic: big integers, canonical rationals and the
 * quadratic fields Q(sqrt(D)).
 *
 * Nothing in here ever touches binary floating point. Decimal strings are
 * produced from scaled integer square roots, so every digit printed is the
 * correctly rounded digit of the exact value.
 *
 * Representation choices:
 * - Integer is GMP's mpz_class (arbitrary precision, canonical zero).
 * - Rational keeps den > 0 and gcd(|num|, den) = 1 at all times, so
 *   structural equality is value equality.
 * - Quadratic<D> stores r + s*sqrt(D) as a pair of rationals. For square-free
 *   D > 1 that pair is unique.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hatlab {

using Integer = mpz_class;

/// Parses a base-10 integer literal ("-123"). Throws std::invalid_argument.
Integer parse_integer(const std::string& text);

std::string to_string(const Integer& value);

/// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& value);

/// 10^k.
Integer pow10(unsigned k);

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design of the field tower
    Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT
    Rational(Integer num, Integer den);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    int sign() const { return sgn(num_); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

private:
    void canonicalize();

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Decimal expansion of a rational with `digits` fractional digits,
/// rounded half away from zero.
std::string to_decimal(const Rational& value, unsigned digits);

namespace detail {
/// floor((p + c*sqrt(d)) / den) for integers p and c, d >= 0 and den > 0.
Integer floor_quadratic(const Integer& p, const Integer& c, unsigned long d, const Integer& den);
/// Rounds (p + c*sqrt(d)) / den half away from zero to `digits` fractional
/// digits and formats the result.
std::string quadratic_to_decimal(const Integer& p, const Integer& c, unsigned long d,
                                 const Integer& den, int sign, unsigned digits);
}  // namespace detail

/**
 * An element r + s*sqrt(D) of the real quadratic field Q(sqrt(D)).
 *
 * D must be square-free and greater than one. Comparisons and signs are
 * decided exactly by comparing r^2 against D*s^2.
 */
template <unsigned long D>
class Quadratic {
    static_assert(D > 1, "radicand must exceed one");

public:
    Quadratic() = default;
    Quadratic(Rational rational_part)  // NOLINT: rationals embed in the field
        : r_(std::move(rational_part)) {}
    Quadratic(Rational rational_part, Rational surd_part)
        : r_(std::move(rational_part)), s_(std::move(surd_part)) {}

    static Quadratic root() { return Quadratic(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return r_; }
    const Rational& surd_part() const { return s_; }

    bool is_zero() const { return r_.is_zero() && s_.is_zero(); }
    bool is_rational() const { return s_.is_zero(); }

    /// Galois conjugate r - s*sqrt(D).
    Quadratic conjugate() const { return {r_, -s_}; }
    /// Field norm r^2 - D*s^2 (a rational).
    Rational norm() const { return r_ * r_ - Rational(static_cast<long>(D)) * s_ * s_; }

    Quadratic operator-() const { return {-r_, -s_}; }

    friend Quadratic operator+(const Quadratic& a, const Quadratic& b) {
        return {a.r_ + b.r_, a.s_ + b.s_};
    }
    friend Quadratic operator-(const Quadratic& a, const Quadratic& b) {
        return {a.r_ - b.r_, a.s_ - b.s_};
    }
    friend Quadratic operator*(const Quadratic& a, const Quadratic& b) {
        const Rational d(static_cast<long>(D));
        return {a.r_ * b.r_ + d * a.s_ * b.s_, a.r_ * b.s_ + a.s_ * b.r_};
    }
    friend Quadratic operator/(const Quadratic& a, const Quadratic& b) {
        if (b.is_zero()) throw std::domain_error("division by zero in quadratic field");
        // a/b = a*conj(b) / norm(b); the norm is nonzero because sqrt(D) is irrational.
        const Quadratic numerator = a * b.conjugate();
        const Rational n = b.norm();
        return {numerator.r_ / n, numerator.s_ / n};
    }

    Quadratic reciprocal() const { return Quadratic(Rational(1)) / *this; }

    Quadratic& operator+=(const Quadratic& b) { return *this = *this + b; }
    Quadratic& operator-=(const Quadratic& b) { return *this = *this - b; }
    Quadratic& operator*=(const Quadratic& b) { return *this = *this * b; }
    Quadratic& operator/=(const Quadratic& b) { return *this = *this / b; }

    friend bool operator==(const Quadratic& a, const Quadratic& b) {
        return a.r_ == b.r_ && a.s_ == b.s_;
    }

    friend std::strong_ordering operator<=>(const Quadratic& a, const Quadratic& b) {
        const int s = (a - b).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Exact sign in {-1, 0, +1}.
    int sign() const {
        const int sr = r_.sign();
        const int ss = s_.sign();
        if (ss == 0) return sr;
        if (sr == 0) return ss;
        if (sr == ss) return sr;
        // Opposite signs: the larger magnitude wins. Ties are impossible
        // because r^2 = D*s^2 would make sqrt(D) rational.
        const Rational lhs = r_ * r_;
        const Rational rhs = Rational(static_cast<long>(D)) * s_ * s_;
        return lhs > rhs ? sr : ss;
    }

    /// "r + s*sqrt(D)" in rational notation.
    std::string str() const {
        if (s_.is_zero()) return r_.str();
        std::string out;
        if (!r_.is_zero()) out = r_.str() + (s_.sign() < 0 ? " - " : " + ");
        else if (s_.sign() < 0) out = "-";
        const Rational mag = s_.sign() < 0 ? -s_ : s_;
        if (mag != Rational(1)) out += mag.str() + "*";
        out += "sqrt(" + std::to_string(D) + ")";
        return out;
    }

    /// Correctly rounded (half away from zero) decimal string.
    friend std::string to_decimal(const Quadratic& value, unsigned digits) {
        // Bring both parts over the common denominator: (p + c*sqrt(D)) / den.
        const Integer den = lcm_of(value.r_.den(), value.s_.den());
        const Integer p = value.r_.num() * (den / value.r_.den());
        const Integer c = value.s_.num() * (den / value.s_.den());
        const int sgn_value = value.sign();
        if (sgn_value < 0) {
            return detail::quadratic_to_decimal(-p, -c, D, den, sgn_value, digits);
        }
        return detail::quadratic_to_decimal(p, c, D, den, sgn_value, digits);
    }

private:
    static Integer lcm_of(const Integer& a, const Integer& b) {
        Integer out;
        mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return out;
    }

    Rational r_;
    Rational s_;
};

template <unsigned long D>
std::ostream& operator<<(std::ostream& os, const Quadratic<D>& value) {
    return os << value.str();
}

/// Q(sqrt 5): home of the golden ratio.
using SurdNumber = Quadratic<5>;

/// The golden ratio (1 + sqrt 5) / 2. Also written tau.
SurdNumber phi();

/// phi^2 = (3 + sqrt 5) / 2.
SurdNumber phi_squared();

/// Smallest |p^2 - p*q - q^2| over 1 <= p, q <= max_height and one pair
/// attaining it (the lexicographically first).
struct IrrationalityWitness {
    std::int64_t minimum = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t max_height = 0;
};

/// Brute force over all pairs. A minimum of at least one certifies that no
/// rational p/q of height <= max_height is a root of x^2 - x - 1.
IrrationalityWitness irrationality_witness(std::int64_t max_height);

}  // namespace hatlab
