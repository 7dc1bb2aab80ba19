#pragma once

// Exact rational and complex scalar arithmetic, q-brackets, binomial
// coefficients and p-adic valuations.

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "qeuler/error.hpp"

namespace qeuler {

using BigInt = mpz_class;
using ComplexScalar = std::complex<double>;

/// Arbitrary-precision rational in canonical form (den > 0, gcd = 1).
class BigRational {
public:
    BigRational() = default;
    BigRational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT(implicit)
    BigRational(const BigInt& n) : v_(n) {}                 // NOLINT(implicit)
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "n", "-n" or "n/d" (d != 0). Whitespace is not accepted.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// "num/den", or just "num" when the denominator is 1.
    std::string to_string() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.v_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_;
};

/// base^exponent for any integer exponent; a zero base with a negative
/// exponent is a DomainError.
BigRational pow(const BigRational& base, long long exponent);

/// A real base in (0, 1), the archimedean setting of the zeta functions.
/// Optionally remembers the exact rational it came from.
class QReal {
public:
    explicit QReal(double value);
    explicit QReal(const BigRational& value);

    double value() const { return value_; }
    const std::optional<BigRational>& exact() const { return exact_; }

private:
    double value_;
    std::optional<BigRational> exact_;
};

/// An odd prime p and a rational q with v_p(q - 1) >= 1 and v_p(q) = 0.
class PAdicQParam {
public:
    PAdicQParam(std::uint32_t p, BigRational q);

    std::uint32_t p() const { return p_; }
    const BigRational& q() const { return q_; }

private:
    std::uint32_t p_;
    BigRational q_;
};

bool is_prime(std::uint64_t n);

// q-brackets --------------------------------------------------------------

/// [x]_q = (1 - q^x)/(1 - q), exact. Returns x when q == 1.
BigRational q_bracket(long long x, const BigRational& q);
/// Floating [x]_q for real x and q > 0; returns x when q == 1.
double q_bracket(double x, double q);

/// [x]_{-q} = (1 - (-q)^x)/(1 + q).
BigRational q_bracket_signed(long long x, const BigRational& q);
double q_bracket_signed(long long x, double q);

// binomials ---------------------------------------------------------------

/// C(m, i); zero when i < 0 or i > m.
BigInt binom(std::uint64_t m, long long i);

/// C(s + j - 1, j) = prod_{i=1..j} (s + i - 1)/i via the multiplicative
/// recurrence. gen_binom(-m, j) = (-1)^j C(m, j).
ComplexScalar gen_binom(ComplexScalar s, std::uint64_t j);
BigRational gen_binom(const BigRational& s, std::uint64_t j);

// p-adic ------------------------------------------------------------------

/// v_p(r); std::nullopt stands for +infinity (r == 0).
std::optional<long> p_valuation(const BigRational& r, std::uint64_t p);

}  // namespace qeuler
