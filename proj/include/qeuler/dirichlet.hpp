#pragma once

// Dirichlet characters modulo odd d and the generalized q-Euler numbers
// attached to them.

#include <cstdint>
#include <optional>
#include <vector>

#include "qeuler/numeric.hpp"

namespace qeuler {

/// exp(2 pi i num/den) with 0 <= num < den, num/den reduced.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(std::uint64_t num, std::uint64_t den);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    bool is_real() const { return den_ <= 2; }
    /// +1 or -1; DomainError when not real.
    int real_value() const;
    ComplexScalar value() const;

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// chi(n): nullopt means 0 (gcd(n, d) > 1).
using CharValue = std::optional<RootOfUnity>;

/// A Dirichlet character mod odd d, given by a character exponent t_i on a
/// primitive root g_i of each prime-power factor p_i^e_i:
/// chi(g_i) = exp(2 pi i t_i / phi(p_i^e_i)).
class DirichletCharacter {
public:
    struct Component {
        std::uint64_t prime = 0;
        std::uint32_t exponent = 0;
        std::uint64_t prime_power = 0;
        std::uint64_t generator = 0;
        std::uint64_t group_order = 0;
        std::uint64_t char_exponent = 0;
    };

    /// Character mod d with the given exponents (one per prime factor of d,
    /// ascending primes). d must be odd.
    DirichletCharacter(std::uint64_t modulus, const std::vector<std::uint64_t>& exponents);

    static DirichletCharacter principal(std::uint64_t modulus);

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t order() const { return order_; }
    const std::vector<Component>& components() const { return components_; }

    CharValue operator()(long long n) const;
    ComplexScalar complex_value(long long n) const;

    bool is_principal() const;
    bool is_real() const;
    /// Smallest f | d such that chi factors through (Z/f)^*.
    std::uint64_t conductor() const;
    bool is_primitive() const { return conductor() == modulus_; }

private:
    std::uint64_t modulus_;
    std::uint64_t order_ = 1;
    std::vector<Component> components_;
    std::vector<CharValue> table_;
};

std::uint64_t euler_phi(std::uint64_t n);

/// All phi(d) characters mod odd d, in lexicographic order of the exponent
/// tuples (t_1, ..., t_r) over ascending primes. Index 0 is principal.
std::vector<DirichletCharacter> characters_mod(std::uint64_t d);

/// characters_mod(d)[index] without building the rest.
DirichletCharacter character_by_index(std::uint64_t d, std::uint64_t index);

/// E_{m,chi,q}^{(-m,1)} = [2]_q/[2]_{q^d} [d]_q^m
///     * sum_{i<d} chi(i) (-1)^i q^{-mi} E_{m,q^d}^{(-m,1)}(i/d),  q = r.
/// Exact; requires a real-valued character.
BigRational generalized_qeuler_exact(std::uint32_t m, const DirichletCharacter& chi,
                                     const BigRational& r);
/// Same sum with complex character values; each per-i factor is exact.
ComplexScalar generalized_qeuler(std::uint32_t m, const DirichletCharacter& chi,
                                 const BigRational& r);

}  // namespace qeuler
