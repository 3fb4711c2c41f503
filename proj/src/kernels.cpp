#include "qn/kernels.hpp"

#include <cstdlib>

namespace qn::kernels {

namespace {

void site2x2_scalar(const cd* x0, const cd* x1, cd* y0, cd* y1,
                    cd m00, cd m01, cd m10, cd m11, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        cd a = x0[i], b = x1[i];
        y0[i] = m00 * a + m01 * b;
        y1[i] = m10 * a + m11 * b;
    }
}

cd dot_scalar(const cd* x, const cd* y, std::size_t n) {
    cd s(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

void axpy_scalar(cd a, const cd* x, cd* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(cd a, cd* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

const Ops kScalar{"scalar", site2x2_scalar, dot_scalar, axpy_scalar, scale_scalar};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops& ops() {
    static const Ops& selected = []() -> const Ops& {
        const char* force = std::getenv("QN_FORCE_SCALAR");
        if (force && force[0] == '1') return kScalar;
        if (avx2_available()) return avx2_ops();
        return kScalar;
    }();
    return selected;
}

void matmul_acc(const cd* A, const cd* B, cd* C, std::size_t n) {
    const Ops& k = ops();
    for (std::size_t i = 0; i < n; ++i) {
        const cd* arow = A + i * n;
        cd* crow = C + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            cd a = arow[j];
            if (a.real() == 0.0 && a.imag() == 0.0) continue;
            k.axpy(a, B + j * n, crow, n);
        }
    }
}

}  // namespace qn::kernels
