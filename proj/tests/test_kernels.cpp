#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qn/kernels.hpp"

#include <cstdint>
#include <vector>

using namespace qn::kernels;

namespace {

// deterministic pseudo-random doubles in [-1, 1]
double rnd(std::uint64_t& s) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return double((s >> 11) & ((1ULL << 53) - 1)) * 0x1.0p-52 - 1.0;
}

std::vector<cd> rand_vec(std::size_t n, std::uint64_t seed) {
    std::uint64_t s = seed;
    std::vector<cd> v(n);
    for (auto& x : v) x = {rnd(s), rnd(s)};
    return v;
}

bool close(cd a, cd b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("scalar and AVX2 kernels agree") {
    if (!avx2_available()) {
        MESSAGE("AVX2 not available on this host; scalar-only run");
        return;
    }
    const Ops& s = scalar_ops();
    const Ops& v = avx2_ops();

    // odd lengths exercise the vector remainder loops
    for (std::size_t n : {std::size_t(1), std::size_t(3), std::size_t(8), std::size_t(13),
                          std::size_t(64), std::size_t(257)}) {
        auto x = rand_vec(n, 11 * n + 1);
        auto y = rand_vec(n, 23 * n + 7);

        CHECK(close(s.dot(x.data(), y.data(), n), v.dot(x.data(), y.data(), n), 1e-12 * double(n)));

        cd a{0.3, -0.8};
        auto ys = y, yv = y;
        s.axpy(a, x.data(), ys.data(), n);
        v.axpy(a, x.data(), yv.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(close(ys[i], yv[i]));

        auto xs = x, xv = x;
        s.scale(a, xs.data(), n);
        v.scale(a, xv.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(close(xs[i], xv[i]));

        cd m00{0.5, 0.1}, m01{-0.2, 0.7}, m10{0.0, -1.0}, m11{1.5, 0.0};
        std::vector<cd> s0(n), s1(n), v0(n), v1(n);
        s.site2x2(x.data(), y.data(), s0.data(), s1.data(), m00, m01, m10, m11, n);
        v.site2x2(x.data(), y.data(), v0.data(), v1.data(), m00, m01, m10, m11, n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(close(s0[i], v0[i]));
            CHECK(close(s1[i], v1[i]));
        }
    }
}

TEST_CASE("dot is conjugate-linear in the first argument") {
    const Ops& k = ops();
    auto x = rand_vec(19, 5);
    auto y = rand_vec(19, 9);
    cd d1 = k.dot(x.data(), y.data(), 19);
    cd d2 = k.dot(y.data(), x.data(), 19);
    CHECK(close(d1, std::conj(d2)));
    cd n = k.dot(x.data(), x.data(), 19);
    CHECK(n.real() > 0.0);
    CHECK(std::abs(n.imag()) < 1e-12);
}

TEST_CASE("matmul_acc matches the naive triple loop") {
    const std::size_t n = 17;
    auto A = rand_vec(n * n, 100);
    auto B = rand_vec(n * n, 200);
    std::vector<cd> C(n * n, cd{0, 0}), D(n * n, cd{0, 0});
    matmul_acc(A.data(), B.data(), C.data(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) D[i * n + j] += A[i * n + k] * B[k * n + j];
    for (std::size_t i = 0; i < n * n; ++i) CHECK(close(C[i], D[i], 1e-11));
}

TEST_CASE("runtime selection reports a valid kernel set") {
    const Ops& k = ops();
    CHECK(k.name != nullptr);
    auto x = rand_vec(4, 1);
    CHECK(close(k.dot(x.data(), x.data(), 4), scalar_ops().dot(x.data(), x.data(), 4)));
}
