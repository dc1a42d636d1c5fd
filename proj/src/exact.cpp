#include "hatlab/exact.hpp"

#include <algorithm>
#include <cstdlib>

namespace hatlab {

Integer parse_integer(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("bad integer literal: " + text);
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal: " + text);
    }
    Integer out;
    // mpz_set_str rejects a leading '+'.
    out.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    return out;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer isqrt(const Integer& value) {
    if (value < 0) throw std::domain_error("isqrt of a negative integer");
    Integer out;
    mpz_sqrt(out.get_mpz_t(), value.get_mpz_t());
    return out;
}

Integer pow10(unsigned k) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
    return out;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void Rational::canonicalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw std::domain_error("reciprocal of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

namespace {

std::string format_scaled(const Integer& scaled, int sign, unsigned digits) {
    std::string body = to_string(scaled);
    if (digits > 0) {
        if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
    }
    if (sign < 0 && scaled != 0) body.insert(0, "-");
    return body;
}

}  // namespace

std::string to_decimal(const Rational& value, unsigned digits) {
    // round(|x| * 10^k) = floor((2*|num|*10^k + den) / (2*den))
    Integer mag = abs(value.num());
    Integer scaled;
    Integer top = 2 * mag * pow10(digits) + value.den();
    Integer bottom = 2 * value.den();
    mpz_fdiv_q(scaled.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
    return format_scaled(scaled, value.sign(), digits);
}

namespace detail {

Integer floor_quadratic(const Integer& p, const Integer& c, unsigned long d, const Integer& den) {
    // floor((p + y)/den) == floor((p + floor(y))/den) for integer p and den > 0.
    const Integer radicand = c * c * d;
    Integer root = isqrt(radicand);
    Integer floor_y;
    if (c >= 0) {
        floor_y = root;
    } else {
        floor_y = -root;
        if (root * root != radicand) floor_y -= 1;
    }
    Integer out;
    Integer top = p + floor_y;
    mpz_fdiv_q(out.get_mpz_t(), top.get_mpz_t(), den.get_mpz_t());
    return out;
}

std::string quadratic_to_decimal(const Integer& p, const Integer& c, unsigned long d,
                                 const Integer& den, int sign, unsigned digits) {
    // Value (p + c*sqrt(d))/den is non-negative here; round half away via
    // floor((2*(p + c*sqrt d)*10^k + den) / (2*den)).
    const Integer scale = pow10(digits);
    const Integer scaled =
        floor_quadratic(2 * p * scale + den, 2 * c * scale, d, 2 * den);
    return format_scaled(scaled, sign, digits);
}

}  // namespace detail

SurdNumber phi() { return SurdNumber(Rational(1, 2), Rational(1, 2)); }

SurdNumber phi_squared() { return SurdNumber(Rational(3, 2), Rational(1, 2)); }

IrrationalityWitness irrationality_witness(std::int64_t max_height) {
    if (max_height < 1) throw std::invalid_argument("irrationality_witness: max_height must be >= 1");
    if (max_height > 1'000'000'000) throw std::invalid_argument("irrationality_witness: max_height too large");
    IrrationalityWitness best;
    best.max_height = max_height;
    best.minimum = -1;
    for (std::int64_t p = 1; p <= max_height; ++p) {
        for (std::int64_t q = 1; q <= max_height; ++q) {
            const std::int64_t value = std::llabs(p * p - p * q - q * q);
            if (best.minimum < 0 || value < best.minimum) {
                best.minimum = value;
                best.p = p;
                best.q = q;
            }
        }
    }
    return best;
}

}  // namespace hatlab
