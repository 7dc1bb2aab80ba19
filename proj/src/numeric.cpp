#include "qeuler/numeric.hpp"

#include <cmath>
#include <string>

namespace qeuler {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };

    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (!num.empty() && num.front() == '+') {
        num.remove_prefix(1);
    }
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return BigRational(n, d);
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) {
        throw DomainError("division by zero rational");
    }
    v_ /= o.v_;
    return *this;
}

BigRational pow(const BigRational& base, long long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) {
            throw DomainError("zero raised to a negative power");
        }
        // (a/b)^-e = (b/a)^e
        return pow(BigRational(base.denominator(), base.numerator()), -exponent);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(),
               static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(),
               static_cast<unsigned long>(exponent));
    return BigRational(num, den);
}

QReal::QReal(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0)) {
        throw DomainError("q must satisfy 0 < q < 1, got " + std::to_string(value));
    }
}

QReal::QReal(const BigRational& value) : value_(value.to_double()), exact_(value) {
    if (value.sign() <= 0 || value >= BigRational(1)) {
        throw DomainError("q must satisfy 0 < q < 1, got " + value.to_string());
    }
}

PAdicQParam::PAdicQParam(std::uint32_t p, BigRational q) : p_(p), q_(std::move(q)) {
    if (p < 3 || !is_prime(p)) {
        throw DomainError("p must be an odd prime, got " + std::to_string(p));
    }
    const auto unit = p_valuation(q_, p);
    if (!unit || *unit != 0) {
        throw DomainError("q must be a " + std::to_string(p) + "-adic unit");
    }
    const auto near_one = p_valuation(q_ - BigRational(1), p);
    if (near_one && *near_one < 1) {
        throw DomainError("q must satisfy |q - 1|_p < 1");
    }
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

BigRational q_bracket(long long x, const BigRational& q) {
    if (q == BigRational(1)) {
        return BigRational(x);
    }
    if (q.is_zero() && x < 0) {
        throw DomainError("[x]_q with q = 0 and negative x");
    }
    return (BigRational(1) - pow(q, x)) / (BigRational(1) - q);
}

double q_bracket(double x, double q) {
    if (q == 1.0) {
        return x;
    }
    // 1 - q^x computed as -expm1(x log q) to keep precision near q = 1
    return -std::expm1(x * std::log(q)) / (1.0 - q);
}

BigRational q_bracket_signed(long long x, const BigRational& q) {
    const BigRational minus_q = -q;
    return (BigRational(1) - pow(minus_q, x)) / (BigRational(1) + q);
}

double q_bracket_signed(long long x, double q) {
    const double sign = (x % 2 == 0) ? 1.0 : -1.0;
    return (1.0 - sign * std::pow(q, static_cast<double>(x))) / (1.0 + q);
}

BigInt binom(std::uint64_t m, long long i) {
    if (i < 0 || static_cast<std::uint64_t>(i) > m) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), m, static_cast<unsigned long>(i));
    return out;
}

ComplexScalar gen_binom(ComplexScalar s, std::uint64_t j) {
    ComplexScalar c(1.0, 0.0);
    for (std::uint64_t i = 1; i <= j; ++i) {
        // multiply first: exact integer coefficients for integer s
        c = c * (s + static_cast<double>(i - 1)) / static_cast<double>(i);
    }
    return c;
}

BigRational gen_binom(const BigRational& s, std::uint64_t j) {
    BigRational c(1);
    for (std::uint64_t i = 1; i <= j; ++i) {
        c *= (s + BigRational(static_cast<long long>(i) - 1)) /
             BigRational(static_cast<long long>(i));
        if (c.is_zero()) {
            break;
        }
    }
    return c;
}

std::optional<long> p_valuation(const BigRational& r, std::uint64_t p) {
    if (r.is_zero()) {
        return std::nullopt;
    }
    if (p < 2) {
        throw DomainError("valuation needs p >= 2");
    }
    const BigInt prime(static_cast<unsigned long>(p));
    auto count = [&prime](BigInt n) {
        long v = 0;
        if (n < 0) {
            n = -n;
        }
        v = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
        return v;
    };
    return count(r.numerator()) - count(r.denominator());
}

}  // namespace qeuler
