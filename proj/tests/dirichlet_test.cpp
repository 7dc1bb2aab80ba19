#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qeuler/dirichlet.hpp"
#include "qeuler/qeuler_numbers.hpp"

using namespace qeuler;
using oracle::frac;

namespace {

bool near(ComplexScalar a, ComplexScalar b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("RootOfUnity arithmetic") {
    const RootOfUnity a(1, 3);
    const RootOfUnity b(2, 6);
    CHECK(a == b);
    CHECK((a * a * a) == RootOfUnity(0, 1));
    CHECK(RootOfUnity(1, 2).is_real());
    CHECK(RootOfUnity(1, 2).real_value() == -1);
    CHECK(RootOfUnity(0, 5).real_value() == 1);
    CHECK_FALSE(a.is_real());
    CHECK_THROWS_AS(a.real_value(), DomainError);
    CHECK(near(RootOfUnity(1, 4).value(), ComplexScalar(0.0, 1.0), 1e-15));
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(45) == 24);
    CHECK(euler_phi(97) == 96);
}

TEST_CASE("character values mod 3 and mod 5") {
    const DirichletCharacter chi3(3, {1});
    CHECK_FALSE(chi3(0).has_value());
    CHECK(chi3(1)->real_value() == 1);
    CHECK(chi3(2)->real_value() == -1);
    CHECK(chi3(-1)->real_value() == -1);
    CHECK(chi3(5)->real_value() == -1);
    CHECK(chi3.is_real());
    CHECK(chi3.is_primitive());
    CHECK(chi3.order() == 2);

    // generator 2 mod 5, exponent 1: chi(2) = i
    const DirichletCharacter chi5(5, {1});
    CHECK(*chi5(2) == RootOfUnity(1, 4));
    CHECK(*chi5(4) == RootOfUnity(1, 2));
    CHECK(*chi5(3) == RootOfUnity(3, 4));
    CHECK(chi5.order() == 4);
    CHECK_FALSE(chi5.is_real());
}

TEST_CASE("principal character") {
    const DirichletCharacter chi = DirichletCharacter::principal(15);
    CHECK(chi.is_principal());
    CHECK(chi.conductor() == 1);
    for (long long n = 0; n < 30; ++n) {
        CHECK(chi(n).has_value() == (std::gcd(n, 15LL) == 1));
    }
    CHECK(DirichletCharacter::principal(1).is_primitive());
    CHECK(DirichletCharacter::principal(1)(0)->real_value() == 1);
}

TEST_CASE("character construction rejects bad input") {
    CHECK_THROWS_AS(DirichletCharacter(4, {0}), DomainError);
    CHECK_THROWS_AS(DirichletCharacter(15, {0}), DomainError);
    CHECK_THROWS_AS(DirichletCharacter(9, {6}), DomainError);
    CHECK_THROWS_AS(character_by_index(9, 6), DomainError);
    CHECK_THROWS_AS(characters_mod(0), DomainError);
}

TEST_CASE("enumeration, orthogonality and multiplicativity") {
    for (std::uint64_t d : {1ULL, 3ULL, 5ULL, 7ULL, 9ULL, 15ULL, 21ULL, 25ULL, 45ULL}) {
        const auto chars = characters_mod(d);
        REQUIRE(chars.size() == euler_phi(d));
        CHECK(chars.front().is_principal());
        for (std::uint64_t i = 0; i < chars.size(); ++i) {
            CHECK(character_by_index(d, i).components().size() == chars[i].components().size());
            for (std::uint64_t j = 0; j < chars.size(); ++j) {
                ComplexScalar sum(0.0, 0.0);
                for (std::uint64_t a = 0; a < d; ++a) {
                    sum += chars[i].complex_value(static_cast<long long>(a)) *
                           std::conj(chars[j].complex_value(static_cast<long long>(a)));
                }
                const double expected = (i == j) ? static_cast<double>(euler_phi(d)) : 0.0;
                CHECK(near(sum, ComplexScalar(expected, 0.0), 1e-9));
            }
        }
        std::mt19937_64 rng(d);
        for (const auto& chi : chars) {
            for (int t = 0; t < 40; ++t) {
                const auto a = static_cast<long long>(rng() % 1000);
                const auto b = static_cast<long long>(rng() % 1000);
                CHECK(near(chi.complex_value(a * b), chi.complex_value(a) * chi.complex_value(b), 1e-12));
            }
        }
    }
}

TEST_CASE("conductors and primitivity") {
    // the mod-9 characters of order 1, 2 come from mod 3 or mod 1
    const auto chars = characters_mod(9);
    CHECK(chars[0].conductor() == 1);
    CHECK(chars[3].conductor() == 3);
    CHECK_FALSE(chars[3].is_primitive());
    for (std::uint64_t i : {1ULL, 2ULL, 4ULL, 5ULL}) {
        CHECK(chars[i].conductor() == 9);
    }
    // mod 15: index t1 * 4 + t2
    CHECK(character_by_index(15, 1).conductor() == 5);
    CHECK(character_by_index(15, 4).conductor() == 3);
    CHECK(character_by_index(15, 5).conductor() == 15);
    int primitive = 0;
    for (const auto& chi : characters_mod(15)) {
        primitive += chi.is_primitive() ? 1 : 0;
    }
    CHECK(primitive == 3);  // (3-2) * (5-2)
}

TEST_CASE("generalized q-Euler numbers") {
    const BigRational r = frac(1, 2);
    SUBCASE("modulus 1 reduces to the plain numbers") {
        const auto chi = DirichletCharacter::principal(1);
        for (std::uint32_t m = 0; m <= 8; ++m) {
            CHECK(generalized_qeuler_exact(m, chi, r) == qeuler_higher(m, 1, r));
        }
    }
    SUBCASE("m = 0 is [2]_q/[2]_{q^d} sum chi(i) (-1)^i (1 + q^d)/2") {
        for (std::uint64_t d : {3ULL, 5ULL, 15ULL}) {
            for (const auto& chi : characters_mod(d)) {
                if (!chi.is_real()) {
                    continue;
                }
                BigRational s;
                for (std::uint64_t i = 0; i < d; ++i) {
                    const auto v = chi(static_cast<long long>(i));
                    if (v) {
                        s += BigRational(v->real_value() * (i % 2 ? -1 : 1));
                    }
                }
                const BigRational expected = (BigRational(1) + r) / BigRational(2) * s;
                CHECK(generalized_qeuler_exact(0, chi, r) == expected);
            }
        }
    }
    SUBCASE("complex path agrees with exact path on real characters") {
        for (const auto& chi : characters_mod(15)) {
            if (!chi.is_real()) {
                continue;
            }
            for (std::uint32_t m = 0; m <= 5; ++m) {
                const double exact = generalized_qeuler_exact(m, chi, r).to_double();
                CHECK(near(generalized_qeuler(m, chi, r), ComplexScalar(exact, 0.0),
                           1e-12 * std::max(1.0, std::abs(exact))));
            }
        }
    }
    CHECK_THROWS_AS(generalized_qeuler_exact(2, DirichletCharacter(5, {1}), r), DomainError);
}
