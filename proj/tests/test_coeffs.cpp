#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qn/coeffs.hpp"

#include <cmath>

using namespace qn;

TEST_CASE("spec parsing and coefficient access") {
    auto g = CoefficientSpec::parse("geometric:1/2");
    CHECK(g.coeff(3) == RatC(Rat(1, 8)));
    CHECK(g.coeff(1) == RatC(Rat(1, 2)));

    auto e = CoefficientSpec::parse("list:1/2,1/3");
    CHECK(e.coeff(2) == RatC(Rat(1, 3)));
    CHECK(e.coeff(5) == RatC(0));

    auto c = CoefficientSpec::parse("list:1/2+1/3i,-2i");
    CHECK(c.coeff(1) == RatC(Rat(1, 2), Rat(1, 3)));
    CHECK(c.coeff(2) == RatC(Rat(0), Rat(-2)));
    CHECK(!c.all_real());

    CHECK_THROWS_AS(CoefficientSpec::parse("geometric:3/2"), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSpec::parse("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSpec::parse("list:"), std::invalid_argument);

    CHECK(CoefficientSpec::parse(g.to_string()).ratio == g.ratio);
}

TEST_CASE("l1 tails") {
    auto g = CoefficientSpec::geometric(Rat(1, 2));
    CHECK(g.tail_l1(2) == Rat(1, 4));
    auto t = CoefficientSpec::geometric(Rat(1, 3));
    CHECK(t.tail_l1(0) == Rat(1, 2));
    auto e = CoefficientSpec::explicit_list({RatC(1), RatC(1)});
    CHECK(e.tail_l1(2) == 0);
    CHECK(e.tail_l1(1) == 1);
}

namespace {

// direct subset enumeration of e_k over |c_1..c_N|
Rat sigma_enum(const CoefficientSpec& s, int k, int N, int start = 1) {
    if (k == 0) return Rat(1);
    Rat acc = 0;
    for (int i = start; i + (k - 1) <= N; ++i)
        acc += s.abs_coeff_real(i) * sigma_enum(s, k - 1, N, i + 1);
    return acc;
}

}  // namespace

TEST_CASE("sigma prefix recursion vs subset enumeration") {
    auto g = CoefficientSpec::geometric(Rat(1, 2));
    auto e = CoefficientSpec::explicit_list({RatC(1, 2), RatC(-1, 3), RatC(1, 5), RatC(2, 7)});
    for (int k = 1; k <= 4; ++k) {
        CHECK(sigma(g, k, 12).exact == sigma_enum(g, k, 12));
        CHECK(sigma(e, k, 4).exact == sigma_enum(e, k, 4));
    }
    CHECK(sigma(e, 3, 4).is_exact);
    CHECK(sigma(e, 3, 4).tail_bound == 0.0);
}

TEST_CASE("sigma worked values") {
    auto g = CoefficientSpec::geometric(Rat(1, 2));
    SigmaValue s2 = sigma(g, 2, 60);
    CHECK(std::abs(s2.value - 1.0 / 3.0) <= s2.tail_bound + 1e-15);
    auto e = CoefficientSpec::explicit_list({RatC(1, 2), RatC(1, 4), RatC(1, 8)});
    CHECK(sigma(e, 3, 3).exact == Rat(1, 64));
}

TEST_CASE("sigma is nondecreasing in N") {
    auto g = CoefficientSpec::geometric(Rat(2, 3));
    for (int k = 1; k <= 3; ++k)
        for (int N = k; N < 10; ++N)
            CHECK(sigma(g, k, N + 1).exact >= sigma(g, k, N).exact);
}

TEST_CASE("Newton identities recover e_k from power sums") {
    auto g = CoefficientSpec::geometric(Rat(1, 2));
    const int N = 12, K = 6;
    std::vector<Rat> p(K + 1, Rat(0));
    for (int m = 1; m <= K; ++m)
        for (int i = 1; i <= N; ++i) {
            Rat x = g.abs_coeff_real(i), xm = 1;
            for (int j = 0; j < m; ++j) xm *= x;
            p[m] += xm;
        }
    std::vector<Rat> e(K + 1, Rat(0));
    e[0] = 1;
    for (int k = 1; k <= K; ++k) {
        Rat acc = 0;
        for (int i = 1; i <= k; ++i) acc += (i % 2 ? 1 : -1) * e[k - i] * p[i];
        e[k] = acc / k;
    }
    auto table = sigma_table_exact(g, K, N);
    for (int k = 1; k <= K; ++k) CHECK(e[k] == table[k]);
}

TEST_CASE("decay profile") {
    auto g = CoefficientSpec::geometric(Rat(1, 2));
    auto prof = decay_profile(g, 40, 200);
    CHECK(prof[0].root == doctest::Approx(1.0).epsilon(1e-9));
    for (int k = 5; k < 40; ++k) CHECK(prof[k].root < prof[k - 1].root);
    CHECK(prof[39].root < 0.05);

    auto e = CoefficientSpec::explicit_list({RatC(1, 2)});
    auto p2 = decay_profile(e, 3, 1);
    CHECK(p2[1].root == 0.0);
    CHECK(p2[2].root == 0.0);
}

TEST_CASE("g(0) = 1 for every spec") {
    for (const char* s : {"geometric:1/2", "geometric:9/10", "list:1/3,-1/7", "list:1/2+1/2i"}) {
        GEvalResult r = g_eval(CoefficientSpec::parse(s), {0.0, 0.0});
        REQUIRE(r.ok);
        CHECK(std::abs(r.value - std::complex<double>(1.0, 0.0)) < 1e-9);
    }
}

TEST_CASE("g for a single coefficient is 1 + c1 z") {
    auto e = CoefficientSpec::explicit_list({RatC(1, 3)});
    for (double re : {-2.0, -0.7, 0.4, 2.0})
        for (double im : {-1.0, 0.0, 0.9}) {
            if (re * re + im * im > 4.0) continue;
            std::complex<double> z(re, im);
            GEvalResult r = g_eval(e, z);
            REQUIRE(r.ok);
            CHECK(std::abs(r.value - (1.0 + z / 3.0)) < 1e-8);
        }
}

TEST_CASE("g matches the partial sum of n! sigma_n z^n") {
    auto g = CoefficientSpec::geometric(Rat(1, 2));
    GEvalResult r = g_eval(g, {0.5, 0.0});
    REQUIRE(r.ok);
    auto e = sigma_table_exact(g, 20, 400);
    double series = 0.0, nfact = 1.0, zn = 1.0;
    for (int n = 0; n <= 20; ++n) {
        if (n > 0) {
            nfact *= n;
            zn *= 0.5;
        }
        series += nfact * e[n].get_d() * zn;
    }
    CHECK(std::abs(r.value.real() - series) < 1e-6);
}

TEST_CASE("g reports failure when the tolerance is unachievable") {
    GQuadParams qp;
    qp.tol = 1e-12;
    qp.cutoff_T = 3.0;  // far too small a cutoff for this tolerance
    GEvalResult r = g_eval(CoefficientSpec::geometric(Rat(1, 2)), {1.0, 0.0}, qp);
    CHECK(!r.ok);
    CHECK(!r.message.empty());
}
