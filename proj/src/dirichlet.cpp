#include "qeuler/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qeuler/qeuler_numbers.hpp"

namespace qeuler {

namespace {

constexpr std::uint64_t kMaxModulus = 10'000'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t out = 1 % mod;
    base %= mod;
    while (e > 0) {
        if (e & 1U) {
            out = mul_mod(out, base, mod);
        }
        base = mul_mod(base, base, mod);
        e >>= 1U;
    }
    return out;
}

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;
    std::uint64_t value;
};

std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        PrimePower pp{p, 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
            pp.value *= p;
        }
        out.push_back(pp);
    }
    if (n > 1) {
        out.push_back({n, 1, n});
    }
    return out;
}

std::uint64_t smallest_primitive_root(const PrimePower& pp, std::uint64_t group_order) {
    if (pp.value <= 2) {
        return 1 % pp.value;
    }
    std::vector<std::uint64_t> order_primes;
    for (const auto& f : factorize(group_order)) {
        order_primes.push_back(f.prime);
    }
    for (std::uint64_t g = 2; g < pp.value; ++g) {
        if (g % pp.prime == 0) {
            continue;
        }
        bool primitive = true;
        for (std::uint64_t ell : order_primes) {
            if (pow_mod(g, group_order / ell, pp.value) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            return g;
        }
    }
    throw DomainError("no primitive root modulo " + std::to_string(pp.value));
}

void require_odd_modulus(std::uint64_t d) {
    if (d == 0 || d % 2 == 0) {
        throw DomainError("character modulus must be odd and positive, got " + std::to_string(d));
    }
    if (d > kMaxModulus) {
        throw ResourceError("character modulus above " + std::to_string(kMaxModulus));
    }
}

std::vector<DirichletCharacter::Component> make_components(std::uint64_t d) {
    std::vector<DirichletCharacter::Component> out;
    for (const auto& pp : factorize(d)) {
        DirichletCharacter::Component c;
        c.prime = pp.prime;
        c.exponent = pp.exponent;
        c.prime_power = pp.value;
        c.group_order = pp.value / pp.prime * (pp.prime - 1);
        c.generator = smallest_primitive_root(pp, c.group_order);
        out.push_back(c);
    }
    return out;
}

}  // namespace

RootOfUnity::RootOfUnity(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        throw DomainError("root of unity with zero denominator");
    }
    num %= den;
    const std::uint64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

int RootOfUnity::real_value() const {
    if (!is_real()) {
        throw DomainError("root of unity exp(2 pi i " + std::to_string(num_) + "/" +
                          std::to_string(den_) + ") is not real");
    }
    return num_ == 0 ? 1 : -1;
}

ComplexScalar RootOfUnity::value() const {
    if (num_ == 0) {
        return {1.0, 0.0};
    }
    if (den_ == 2) {
        return {-1.0, 0.0};
    }
    if (den_ == 4) {
        return num_ == 1 ? ComplexScalar(0.0, 1.0) : ComplexScalar(0.0, -1.0);
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) /
                         static_cast<double>(den_);
    return std::polar(1.0, angle);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    const std::uint64_t den = std::lcm(a.den_, b.den_);
    const std::uint64_t num = a.num_ * (den / a.den_) + b.num_ * (den / b.den_);
    return RootOfUnity(num % den, den);
}

DirichletCharacter::DirichletCharacter(std::uint64_t modulus,
                                       const std::vector<std::uint64_t>& exponents)
    : modulus_(modulus) {
    require_odd_modulus(modulus);
    components_ = make_components(modulus);
    if (exponents.size() != components_.size()) {
        throw DomainError("expected " + std::to_string(components_.size()) +
                          " character exponents for modulus " + std::to_string(modulus));
    }
    for (std::size_t i = 0; i < components_.size(); ++i) {
        auto& c = components_[i];
        if (exponents[i] >= c.group_order) {
            throw DomainError("character exponent out of range");
        }
        c.char_exponent = exponents[i];
        order_ = std::lcm(order_, c.group_order / std::gcd(c.group_order, c.char_exponent));
    }

    // Discrete-log tables per factor, then the value table over Z/d.
    std::vector<std::vector<std::int64_t>> logs;
    logs.reserve(components_.size());
    for (const auto& c : components_) {
        std::vector<std::int64_t> log(c.prime_power, -1);
        std::uint64_t cur = 1;
        for (std::uint64_t k = 0; k < c.group_order; ++k) {
            log[cur] = static_cast<std::int64_t>(k);
            cur = mul_mod(cur, c.generator, c.prime_power);
        }
        logs.push_back(std::move(log));
    }
    table_.resize(modulus);
    for (std::uint64_t n = 0; n < modulus; ++n) {
        if (std::gcd(n, modulus) != 1) {
            continue;
        }
        RootOfUnity v;
        for (std::size_t i = 0; i < components_.size(); ++i) {
            const auto& c = components_[i];
            const auto log = static_cast<std::uint64_t>(logs[i][n % c.prime_power]);
            v = v * RootOfUnity(mul_mod(c.char_exponent, log, c.group_order), c.group_order);
        }
        table_[n] = v;
    }
}

DirichletCharacter DirichletCharacter::principal(std::uint64_t modulus) {
    require_odd_modulus(modulus);
    return DirichletCharacter(modulus,
                              std::vector<std::uint64_t>(factorize(modulus).size(), 0));
}

CharValue DirichletCharacter::operator()(long long n) const {
    const auto d = static_cast<long long>(modulus_);
    const auto r = static_cast<std::uint64_t>(((n % d) + d) % d);
    return table_[r];
}

ComplexScalar DirichletCharacter::complex_value(long long n) const {
    const CharValue v = (*this)(n);
    return v ? v->value() : ComplexScalar(0.0, 0.0);
}

bool DirichletCharacter::is_principal() const {
    for (const auto& c : components_) {
        if (c.char_exponent != 0) {
            return false;
        }
    }
    return true;
}

bool DirichletCharacter::is_real() const { return order_ <= 2; }

std::uint64_t DirichletCharacter::conductor() const {
    for (std::uint64_t f = 1; f <= modulus_; ++f) {
        if (modulus_ % f != 0) {
            continue;
        }
        bool factors = true;
        for (std::uint64_t n = 1; n < modulus_ && factors; n += f) {
            const CharValue v = table_[n];
            if (v && !(*v == RootOfUnity())) {
                factors = false;
            }
        }
        if (factors) {
            return f;
        }
    }
    return modulus_;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) {
        return 0;
    }
    std::uint64_t out = n;
    for (const auto& pp : factorize(n)) {
        out = out / pp.prime * (pp.prime - 1);
    }
    return out;
}

std::vector<DirichletCharacter> characters_mod(std::uint64_t d) {
    require_odd_modulus(d);
    const auto comps = make_components(d);
    std::vector<DirichletCharacter> out;
    std::vector<std::uint64_t> exps(comps.size(), 0);
    while (true) {
        out.emplace_back(d, exps);
        // Odometer, last component fastest.
        std::size_t i = comps.size();
        while (i > 0) {
            --i;
            if (++exps[i] < comps[i].group_order) {
                break;
            }
            exps[i] = 0;
            if (i == 0) {
                return out;
            }
        }
        if (comps.empty()) {
            return out;
        }
    }
}

DirichletCharacter character_by_index(std::uint64_t d, std::uint64_t index) {
    require_odd_modulus(d);
    if (index >= euler_phi(d)) {
        throw DomainError("character index " + std::to_string(index) + " out of range for modulus " +
                          std::to_string(d));
    }
    const auto comps = make_components(d);
    std::vector<std::uint64_t> exps(comps.size(), 0);
    for (std::size_t i = comps.size(); i > 0; --i) {
        exps[i - 1] = index % comps[i - 1].group_order;
        index /= comps[i - 1].group_order;
    }
    return DirichletCharacter(d, exps);
}

namespace {

// Exact per-index factors [2]_q/[2]_{q^d} [d]_q^m (-1)^i q^{-mi} E_{m,q^d}(i/d).
std::vector<BigRational> generalized_terms(std::uint32_t m, std::uint64_t d,
                                           const BigRational& r) {
    const BigRational& q = r;
    const auto dd = static_cast<std::uint32_t>(d);
    const BigRational scale = q_bracket(2, q) / q_bracket(2, pow(q, dd)) *
                              pow(q_bracket(static_cast<long long>(d), q), m);
    std::vector<BigRational> out(d);
    for (std::uint32_t i = 0; i < dd; ++i) {
        BigRational term = scale * pow(q, -static_cast<long long>(m) * i) *
                           qeuler_poly_exact(m, r, dd, i);
        out[i] = (i % 2 == 1) ? -term : term;
    }
    return out;
}

}  // namespace

BigRational generalized_qeuler_exact(std::uint32_t m, const DirichletCharacter& chi,
                                     const BigRational& r) {
    if (!chi.is_real()) {
        throw DomainError("exact generalized q-Euler number needs a real character");
    }
    const auto terms = generalized_terms(m, chi.modulus(), r);
    BigRational sum;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const CharValue v = chi(static_cast<long long>(i));
        if (!v) {
            continue;
        }
        sum += v->real_value() > 0 ? terms[i] : -terms[i];
    }
    return sum;
}

ComplexScalar generalized_qeuler(std::uint32_t m, const DirichletCharacter& chi,
                                 const BigRational& r) {
    const auto terms = generalized_terms(m, chi.modulus(), r);
    // Group the exact factors by character value before going numeric.
    std::vector<std::pair<RootOfUnity, BigRational>> groups;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const CharValue v = chi(static_cast<long long>(i));
        if (!v) {
            continue;
        }
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == *v; });
        if (it == groups.end()) {
            groups.emplace_back(*v, terms[i]);
        } else {
            it->second += terms[i];
        }
    }
    ComplexScalar sum(0.0, 0.0);
    for (const auto& [root, coeff] : groups) {
        sum += root.value() * coeff.to_double();
    }
    return sum;
}

}  // namespace qeuler
