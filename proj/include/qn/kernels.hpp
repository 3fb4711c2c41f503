#pragma once

#include <complex>
#include <cstddef>

namespace qn::kernels {

using cd = std::complex<double>;

/// Data-parallel inner loops on interleaved complex-double arrays. Scalar
/// reference kernels and AVX2/FMA variants share this table; the active set
/// is picked once at startup from CPU features.
struct Ops {
    const char* name;

    /// y0[i] = m00*x0[i] + m01*x1[i];  y1[i] = m10*x0[i] + m11*x1[i]
    /// (one 2x2 site matrix applied across a contiguous pair of blocks)
    void (*site2x2)(const cd* x0, const cd* x1, cd* y0, cd* y1,
                    cd m00, cd m01, cd m10, cd m11, std::size_t n);

    /// sum conj(x[i]) * y[i]
    cd (*dot)(const cd* x, const cd* y, std::size_t n);

    /// y[i] += a * x[i]
    void (*axpy)(cd a, const cd* x, cd* y, std::size_t n);

    /// x[i] *= a
    void (*scale)(cd a, cd* x, std::size_t n);
};

/// Scalar reference kernels, always available.
const Ops& scalar_ops();

/// AVX2/FMA kernels; only valid to call when avx2_available().
const Ops& avx2_ops();

bool avx2_available();

/// The runtime-selected kernel set. Honors QN_FORCE_SCALAR=1 in the
/// environment for debugging and equivalence runs.
const Ops& ops();

/// C += A * B for row-major n x n complex matrices, blocked over the axpy
/// kernel (C[i,:] += A[i,k] * B[k,:]).
void matmul_acc(const cd* A, const cd* B, cd* C, std::size_t n);

}  // namespace qn::kernels
