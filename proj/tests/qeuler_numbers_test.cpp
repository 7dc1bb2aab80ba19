#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qeuler/qeuler_numbers.hpp"

using namespace qeuler;
using oracle::frac;

TEST_CASE("qeuler_higher examples") {
    const BigRational half = frac(1, 2);
    CHECK(qeuler_higher(0, 1, half) == frac(3, 4));
    CHECK(qeuler_higher(0, 1, frac(2, 7)) == (BigRational(1) + frac(2, 7)) / BigRational(2));
    CHECK(qeuler_higher(2, 1, half) == frac(1, 5));
    // E_2 = (1 - q)/(2 (1 + q^2)) for every q
    for (const auto& q : {frac(1, 3), frac(3, 4), frac(9, 10), BigRational(4)}) {
        CHECK(qeuler_higher(2, 1, q) == (BigRational(1) - q) / (BigRational(2) * (BigRational(1) + q * q)));
    }
    CHECK(qeuler_higher(2, 1, 0.5) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("E_1 is -1/2 for every q") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const long long b = 2 + static_cast<long long>(rng() % 500);
        const long long a = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(b - 1));
        CHECK(qeuler_higher(1, 1, frac(a, b)) == frac(-1, 2));
    }
}

TEST_CASE("qeuler_higher rejects singular parameters") {
    CHECK_THROWS_AS(qeuler_higher(2, 1, BigRational(1)), DomainError);
    CHECK_THROWS_AS(qeuler_higher(2, 1, BigRational(-1)), DomainError);  // 1 + q^odd = 0
    CHECK_THROWS_AS(qeuler_higher(2, 0, frac(1, 2)), DomainError);
    CHECK_THROWS_AS(qeuler_higher(2, 1, 1.5), DomainError);
}

TEST_CASE("qeuler_mixed") {
    for (std::uint32_t m = 0; m <= 15; ++m) {
        CHECK(qeuler_mixed(m, m, frac(1, 2)) == qeuler_higher(m, 1, frac(1, 2)));
        CHECK(qeuler_mixed(0, m, frac(1, 2)) ==
              (BigRational(1) + frac(1, 2)) / (BigRational(1) + pow(frac(1, 2), -static_cast<long long>(m))));
    }
    // 2-term sum: [2]_q/(1-q) (1/(1+q^{-2}) - 1/(1+q^{-1})) at q = 1/2
    CHECK(qeuler_mixed(1, 2, frac(1, 2)) == frac(-2, 5));
    CHECK(qeuler_mixed(3, 5, 0.4) == doctest::Approx(qeuler_mixed(3, 5, frac(2, 5)).to_double()));
}

TEST_CASE("qeuler_poly_exact") {
    for (std::uint32_t m = 0; m <= 8; ++m) {
        CHECK(qeuler_poly_exact(m, frac(1, 2), 3, 0) == qeuler_higher(m, 1, frac(1, 8)));
        CHECK(qeuler_poly_exact(0, frac(2, 3), 5, m) == (BigRational(1) + pow(frac(2, 3), 5)) / BigRational(2));
    }
    CHECK(qeuler_poly_exact(1, frac(1, 2), 3, 1) == frac(-5, 28));
    CHECK_THROWS_AS(qeuler_poly_exact(1, frac(3, 2), 3, 1), DomainError);
    CHECK_THROWS_AS(qeuler_poly_exact(1, frac(1, 2), 0, 1), DomainError);
}

TEST_CASE("qeuler_poly_numeric") {
    for (std::uint32_t m = 0; m <= 8; ++m) {
        CHECK(std::abs(qeuler_poly_numeric(m, 0.3, 0.0) - qeuler_higher(m, 1, 0.3)) <= 1e-12);
        const double exact = qeuler_poly_exact(m, frac(1, 2), 3, 2).to_double();
        CHECK(std::abs(qeuler_poly_numeric(m, 0.125, 2.0 / 3.0) - exact) <= 1e-12);
    }
    for (double q : {0.1, 0.5, 0.8}) {
        CHECK(std::abs(qeuler_poly_numeric(1, q, 0.0) + 0.5) <= 1e-12);
    }
}

TEST_CASE("euler_classical") {
    CHECK(euler_classical(0, 1) == BigRational(1));
    CHECK(euler_classical(1, 1) == frac(-1, 2));
    CHECK(euler_classical(2, 1) == BigRational(0));
    CHECK(euler_classical(3, 1) == frac(1, 4));
    CHECK(euler_classical(1, 2) == BigRational(-1));
    for (std::uint32_t k = 1; k <= 4; ++k) {
        CHECK(euler_classical_sequence(14, k) == oracle::euler_by_series(14, k));
    }
}

TEST_CASE("classical limit of the q-Euler numbers") {
    const auto gap = [](std::uint32_t m, std::uint32_t k, long long inv_h) {
        const BigRational q = BigRational(1) - frac(1, inv_h);
        return std::abs((qeuler_higher(m, k, q) - euler_classical(m, k)).to_double());
    };
    for (std::uint32_t m = 0; m <= 6; ++m) {
        for (std::uint32_t k = 1; k <= 3; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            const double d4 = gap(m, k, 10'000);
            const double d6 = gap(m, k, 1'000'000);
            CHECK(d6 <= 1e-3);
            CHECK(d6 <= d4 / 50.0);
        }
    }
    // first-order term: slope about 47 for (m, k) = (5, 3)
    CHECK(gap(5, 3, 10'000) > 1e-3);
    CHECK(gap(5, 3, 10'000) == doctest::Approx(0.0047).epsilon(0.01));
}

TEST_CASE("distribution relation") {
    CHECK(distribution_residual(4, 1, 2, frac(1, 3)).is_zero());
    CHECK(distribution_residual(2, 3, 0, frac(1, 2)).is_zero());
    CHECK(distribution_residual(5, 5, 2, frac(2, 3)).is_zero());
    for (const auto& r : {frac(1, 2), frac(1, 3)}) {
        for (std::uint32_t n = 0; n <= 8; ++n) {
            for (std::uint32_t d : {1U, 3U, 5U}) {
                for (std::uint32_t x : {0U, 1U, 2U}) {
                    CHECK(distribution_residual(n, d, x, r).is_zero());
                }
            }
        }
    }
    CHECK_THROWS_AS(distribution_residual(2, 2, 0, frac(1, 2)), DomainError);
    // the even-d analogue genuinely fails, so the check has teeth
    const BigRational r = frac(1, 2);
    BigRational inner;
    for (std::uint32_t i = 0; i < 2; ++i) {
        BigRational t = pow(r, -2LL * i) * qeuler_poly_exact(2, r, 2, i);
        inner += i % 2 ? -t : t;
    }
    const BigRational rhs = q_bracket(2, r) / q_bracket(2, pow(r, 2)) * pow(q_bracket(2, r), 2) * inner;
    CHECK_FALSE((qeuler_poly_exact(2, r, 1, 0) - rhs).is_zero());
}

TEST_CASE("multiplication identity at x = 0") {
    CHECK(multiplication_residual_x0(4, 1, frac(1, 2)).is_zero());
    CHECK(multiplication_residual_x0(3, 3, frac(1, 2)).is_zero());
    CHECK(multiplication_residual_x0(6, 5, frac(1, 3)).is_zero());
    for (const auto& r : {frac(1, 2), frac(2, 3)}) {
        for (std::uint32_t m = 0; m <= 8; ++m) {
            for (std::uint32_t n : {1U, 3U, 5U}) {
                CHECK(multiplication_residual_x0(m, n, r).is_zero());
            }
        }
    }
    CHECK_THROWS_AS(multiplication_residual_x0(3, 4, frac(1, 2)), DomainError);
}

TEST_CASE("classical multiplication identity") {
    CHECK(classical_multiplication_residual(5, 1).is_zero());
    // (1 - 3) E_1 = 1 and C(1,0) 3^0 E_0 (-1 + 2) = 1
    CHECK(classical_multiplication_residual(1, 3).is_zero());
    CHECK(classical_multiplication_residual(8, 5).is_zero());
    for (std::uint32_t m = 1; m <= 10; ++m) {
        for (std::uint32_t n : {3U, 5U, 7U}) {
            CHECK(classical_multiplication_residual(m, n).is_zero());
        }
    }
}
