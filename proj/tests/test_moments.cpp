#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qn/moments.hpp"

#include <cmath>

using namespace qn;

namespace {

const CoefficientSpec kGeo = CoefficientSpec::geometric(Rat(1, 2));
const CoefficientSpec kEx =
    CoefficientSpec::explicit_list({RatC(1, 2), RatC(1, 3), RatC(-1, 4), RatC(1, 7)});

}  // namespace

TEST_CASE("power sums with certified geometric tails") {
    ExactWithTail p1 = power_sum_abs2(kGeo, 1, 30);
    CHECK(std::abs(mpq_get_d(p1.value.get_mpq_t()) - 1.0 / 3.0) <=
          mpq_get_d(p1.tail.get_mpq_t()));
    CHECK(p1.value + p1.tail == Rat(1, 3));  // the closed form is exact
    ExactWithTail e = power_sum_abs2(kEx, 2, 10);
    CHECK(e.tail == 0);
    CHECK(e.value == Rat(1, 16) + Rat(1, 81) + Rat(1, 256) + Rat(1, 2401));
}

TEST_CASE("distinct monomial sums: merge recursion vs tuple enumeration") {
    for (const auto& spec : {kGeo, kEx})
        for (int p = 1; p <= 3; ++p)
            for (const auto& sh : shapes(p)) {
                ExactWithTail s = distinct_monomial_sum(sh, spec, 8);
                CHECK(s.value == distinct_monomial_bruteforce(sh, spec, 8));
            }
}

TEST_CASE("distinct monomial worked examples") {
    // shape (1), geometric 1/2: sum 4^-n -> 1/3
    ExactWithTail s1 = distinct_monomial_sum({1}, kGeo, 60);
    CHECK(s1.value + s1.tail == Rat(1, 3));
    // shape (1,1): (sum x)^2 - sum x^2 = 1/9 - 1/15 = 2/45 in the limit
    ExactWithTail s11 = distinct_monomial_sum({1, 1}, kGeo, 200);
    CHECK(std::abs(mpq_get_d(s11.value.get_mpq_t()) - 2.0 / 45.0) <= 1e-15);
    // shape (2), explicit [1]
    auto one = CoefficientSpec::explicit_list({RatC(1)});
    CHECK(distinct_monomial_sum({2}, one, 1).value == 1);
}

TEST_CASE("moments of X: worked values and parity") {
    MomentReport m2 = moment_X(kGeo, 2, 200);
    CHECK(std::abs(m2.value - 1.0 / 3.0) <= m2.tail_bound + 1e-15);
    MomentReport m4 = moment_X(kGeo, 4, 200);
    CHECK(std::abs(m4.value - 1.0 / 5.0) <= m4.tail_bound + 1e-15);
    CHECK(moment_X(kGeo, 3, 50).exact == RatC(0));
    CHECK(moment_X(kEx, 7, 4).exact == RatC(0));
    // alpha = 1/2 closed form tau(X^2) = a^2/(1-a^2) = 1/3
    auto third = CoefficientSpec::geometric(Rat(1, 3));
    MomentReport t2 = moment_X(third, 2, 200);
    CHECK(std::abs(t2.value - (1.0 / 9.0) / (1.0 - 1.0 / 9.0)) <= t2.tail_bound + 1e-15);
}

TEST_CASE("Y and re/im moments derive from X") {
    CHECK(moment_Y(kEx, 2, 4).exact == -moment_X(kEx, 2, 4).exact);
    CHECK(moment_Y(kEx, 4, 4).exact == moment_X(kEx, 4, 4).exact);
    CHECK(moment_Y(kEx, 5, 4).exact == RatC(0));
    CHECK(moment_reim(kEx, 2, 4).exact.re == moment_X(kEx, 2, 4).exact.re / 4);
    CHECK(moment_reim(kEx, 3, 4).exact == RatC(0));
}

TEST_CASE("exact equality with the dense oracle at matched truncation") {
    for (int order : {2, 4, 6, 8})
        CHECK(moment_X(kEx, order, 4).exact == moment_dense_exact(MomentTarget::X, kEx, order, 4).exact);
    for (int p = 1; p <= 3; ++p)
        CHECK(moment_Y(kEx, 2 * p, 4).exact ==
              moment_dense_exact(MomentTarget::Y, kEx, 2 * p, 4).exact);
}

TEST_CASE("A*A moments: combinatorial = dense, and worked values") {
    for (int p = 1; p <= 4; ++p)
        CHECK(moment_AstarA(kEx, p, 4).exact ==
              moment_dense_exact(MomentTarget::AstarA, kEx, p, 4).exact);
    // single site: A*A = Q, tau(Q^p) = 1/2
    auto one = CoefficientSpec::explicit_list({RatC(1)});
    CHECK(moment_AstarA(one, 2, 1).exact == RatC(Rat(1, 2)));
    CHECK(moment_dense_exact(MomentTarget::AstarA, one, 2, 1).exact == RatC(Rat(1, 2)));
    // geometric: tau(A*A) = sum |c_n|^2 tau(Q) -> (1/3)(1/2) = 1/6
    MomentReport g1 = moment_AstarA(kGeo, 1, 200);
    CHECK(std::abs(g1.value - 1.0 / 6.0) <= g1.tail_bound + 1e-15);
    // complex coefficients enter through |c|^2
    auto cx = CoefficientSpec::explicit_list({RatC(Rat(1, 2), Rat(1, 3)), RatC(Rat(0), Rat(1, 4))});
    for (int p = 1; p <= 3; ++p)
        CHECK(moment_AstarA(cx, p, 2).exact ==
              moment_dense_exact(MomentTarget::AstarA, cx, p, 2).exact);
}

TEST_CASE("characteristic-function route") {
    CharfnMoments cm = charfn_moments(Rat(1, 2), 8);
    CHECK(cm.moment[0] == 1);
    CHECK(cm.moment[1] == 0);
    CHECK(cm.moment[3] == 0);
    CHECK(std::abs(mpq_get_d(cm.moment[2].get_mpq_t()) - 1.0 / 3.0) <=
          mpq_get_d(cm.tail[2].get_mpq_t()) + 1e-15);
    CHECK(std::abs(mpq_get_d(cm.moment[4].get_mpq_t()) - 1.0 / 5.0) <=
          mpq_get_d(cm.tail[4].get_mpq_t()) + 1e-15);
    // agreement with the combinatorial route within both tails
    for (int order : {2, 4, 6, 8}) {
        MomentReport comb = moment_X(kGeo, order, 400);
        double diff = std::abs(comb.value - mpq_get_d(cm.moment[order].get_mpq_t()));
        CHECK(diff <= comb.tail_bound + mpq_get_d(cm.tail[order].get_mpq_t()) + 1e-12);
    }
    CHECK_THROWS_AS(charfn_moments(Rat(3, 2), 4), std::invalid_argument);
}

TEST_CASE("route agreement for alpha = 1/3 up to order 8") {
    auto third = CoefficientSpec::geometric(Rat(1, 3));
    CharfnMoments cm = charfn_moments(Rat(1, 3), 8);
    for (int order : {2, 4, 6, 8}) {
        MomentReport comb = moment_X(third, order, 400);
        double diff = std::abs(comb.value - mpq_get_d(cm.moment[order].get_mpq_t()));
        CHECK(diff <= comb.tail_bound + mpq_get_d(cm.tail[order].get_mpq_t()) + 1e-12);
    }
}

TEST_CASE("dyadic integral route") {
    // explicit [1]: f = f_1, f^2 = 1
    auto one = CoefficientSpec::explicit_list({RatC(1)});
    CHECK(rademacher_moment(one, 2, 6).exact == RatC(1));
    // odd moments vanish exactly by the dyadic flip
    CHECK(rademacher_moment(kEx, 3, 8).exact == RatC(0));
    CHECK(rademacher_moment(kGeo, 5, 10).exact == RatC(0));
    // geometric 1/2: f is the staircase for x, second moment -> 1/3
    MomentReport r = rademacher_moment(kGeo, 2, 16);
    CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-8);
    // matched truncation: the dyadic sum equals the combinatorial value exactly
    CHECK(rademacher_moment(kEx, 4, 4).exact == moment_X(kEx, 4, 4).exact);
    CHECK(rademacher_moment(kGeo, 2, 10).exact == moment_X(kGeo, 2, 10).exact);
    auto cx = CoefficientSpec::explicit_list({RatC(Rat(0), Rat(1))});
    CHECK_THROWS_AS(rademacher_moment(cx, 2, 4), std::invalid_argument);
}

TEST_CASE("mixed moments factor") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m + n <= 6; ++m) {
            MixedMomentReport r = mixed_moment_check(kEx, n, m, 4);
            CHECK(r.equal);
        }
    MixedMomentReport odd = mixed_moment_check(kEx, 2, 1, 4);
    CHECK(odd.lhs == RatC(0));
    CHECK(odd.rhs == RatC(0));
}
