#include <doctest.h>

#include "oracles.hpp"
#include "qeuler/fermionic.hpp"
#include "qeuler/qeuler_numbers.hpp"

using namespace qeuler;
using oracle::frac;

namespace {

std::vector<long> finite(const StageReport& r) {
    std::vector<long> out;
    for (const auto& v : r.valuations) {
        out.push_back(v ? *v : -1000);
    }
    return out;
}

}  // namespace

TEST_CASE("constant integrand is normalized to 1") {
    const std::vector<PAdicQParam> contexts = {PAdicQParam(3, BigRational(4)),
                                               PAdicQParam(5, BigRational(6)),
                                               PAdicQParam(3, BigRational(-2)),
                                               PAdicQParam(7, frac(15, 8))};
    for (const auto& ctx : contexts) {
        for (std::uint32_t n = 1; n <= 3; ++n) {
            CHECK(stage_sum(Integrand::constant(1), ctx, n) == BigRational(1));
        }
    }
}

TEST_CASE("stage sum of q^{-2t}[t]_q at p=3, q=4, N=1") {
    const PAdicQParam ctx(3, BigRational(4));
    const Integrand f = Integrand::monomial(1, 1, -2);
    // direct three-term evaluation
    const BigRational q(4);
    BigRational direct;
    for (long long j = 0; j < 3; ++j) {
        direct += pow(-q, j) * pow(q, -2 * j) * oracle::bracket(j, q);
    }
    direct /= (BigRational(1) + pow(q, 3)) / (BigRational(1) + q);
    CHECK(stage_sum(f, ctx, 1) == direct);
    CHECK(stage_sum(f, ctx, 1) == frac(1, 208));
}

TEST_CASE("Integrand evaluation matches its definition") {
    const BigRational q = frac(2, 5);
    const Integrand f = Integrand::monomial(frac(3, 2), 2, -1) + Integrand::constant(7);
    for (std::uint64_t t = 0; t < 6; ++t) {
        const auto tt = static_cast<long long>(t);
        const BigRational expected =
            frac(3, 2) * pow(oracle::bracket(tt, q), 2) * pow(q, -tt) + BigRational(7);
        CHECK(f.evaluate(t, q) == expected);
    }
}

TEST_CASE("stage sums are linear") {
    const PAdicQParam ctx(3, BigRational(4));
    const Integrand f = Integrand::monomial(1, 1, -2);
    const Integrand g = Integrand::monomial(1, 2, -3) + Integrand::monomial(frac(1, 3), 0, 1);
    const BigRational a = frac(5, 7);
    const BigRational b = frac(-2, 9);
    for (std::uint32_t n = 1; n <= 3; ++n) {
        CHECK(stage_sum(a * f + b * g, ctx, n) == a * stage_sum(f, ctx, n) + b * stage_sum(g, ctx, n));
    }
}

TEST_CASE("convergence report against the closed form") {
    const PAdicQParam ctx(3, BigRational(4));
    const Integrand f = Integrand::monomial(1, 1, -2);

    SUBCASE("exact reference gives infinite valuations") {
        const StageReport r = convergence_report(Integrand::constant(1), ctx, 4, BigRational(1));
        CHECK(r.stages.size() == 4);
        for (const auto& v : r.valuations) {
            CHECK_FALSE(v.has_value());
        }
        CHECK(r.valuations_nondecreasing());
    }
    SUBCASE("q^{-2t}[t]_q converges 3-adically to -1/2") {
        const StageReport r = convergence_report(f, ctx, 6, frac(-1, 2));
        CHECK(finite(r) == std::vector<long>{1, 2, 3, 4, 5, 6});
        CHECK(r.valuations_nondecreasing());
        CHECK(r.stages.front().first == 1);
        CHECK(r.stages.back().first == 6);
    }
    SUBCASE("wrong reference stays bounded") {
        const StageReport r = convergence_report(f, ctx, 5, BigRational(0));
        CHECK(finite(r) == std::vector<long>{0, 0, 0, 0, 0});
    }
    SUBCASE("two-index integrand q^{-3t}[t]_q converges to the mixed closed form") {
        const Integrand h = Integrand::monomial(1, 1, -3);
        const StageReport r = convergence_report(h, ctx, 5, qeuler_mixed(1, 2, BigRational(4)));
        CHECK(r.valuations_nondecreasing());
        CHECK(*r.valuations.back() >= *r.valuations.front() + 3);
    }
    CHECK_THROWS_AS(convergence_report(f, ctx, 1, BigRational(0)), DomainError);
}

TEST_CASE("higher_order_stage equals the literal k-fold sum") {
    for (const auto& q : {BigRational(4), frac(7, 4)}) {
        const PAdicQParam ctx(3, q);
        for (std::uint32_t m = 0; m <= 3; ++m) {
            for (std::uint32_t k = 1; k <= 3; ++k) {
                for (std::uint32_t level = 1; level <= (k == 3 ? 1U : 2U); ++level) {
                    CHECK(higher_order_stage(m, k, ctx, level) ==
                          oracle::brute_force_stage(m, k, 3, level, q));
                }
            }
        }
    }
}

TEST_CASE("higher-order stages approach the closed form") {
    const PAdicQParam ctx(3, BigRational(4));

    SUBCASE("m=0, k=1 tends to [2]_q/2") {
        const StageReport r = higher_order_report(0, 1, ctx, 4, frac(5, 2));
        CHECK(finite(r) == std::vector<long>{2, 3, 4, 5});
    }
    SUBCASE("m=1, k=1 tends to -1/2") {
        const StageReport r = higher_order_report(1, 1, ctx, 6, frac(-1, 2));
        CHECK(finite(r) == std::vector<long>{1, 2, 3, 4, 5, 6});
    }
    SUBCASE("m=1, k=2 tends to qeuler_higher(1, 2, 4)") {
        const BigRational limit = qeuler_higher(1, 2, BigRational(4));
        CHECK(limit == frac(-50, 17));
        const StageReport r = higher_order_report(1, 2, ctx, 3, limit);
        CHECK(finite(r) == std::vector<long>{1, 2, 3});
    }
}

TEST_CASE("stage sums respect the term cap") {
    const PAdicQParam ctx(3, BigRational(4));
    CHECK_THROWS_AS(stage_sum(Integrand::constant(1), ctx, 3, 26), ResourceError);
    CHECK_NOTHROW(stage_sum(Integrand::constant(1), ctx, 3, 27));
    CHECK_THROWS_AS(higher_order_stage(1, 3, ctx, 2, 700), ResourceError);
    CHECK_THROWS_AS(stage_sum(Integrand::constant(1), ctx, 40), ResourceError);
    CHECK_THROWS_AS(stage_sum(Integrand::constant(1), ctx, 0), DomainError);
}
