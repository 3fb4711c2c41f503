#pragma once

#include "qn/opsum.hpp"

#include <complex>
#include <vector>

namespace qn {

/// Memory guard for the literal 2^N x 2^N realization.
inline constexpr int kDefaultOracleCap = 10;

/// Exact dense matrix, row-major 2^N x 2^N, under the shared basis
/// convention: index bits b1..bN with site 1 the most significant bit and
/// bit 0 the first (P-supported) coordinate.
struct DenseExact {
    int N = 0;
    std::vector<RatC> a;  // size 4^N

    std::size_t dim() const { return std::size_t(1) << N; }
    const RatC& at(std::size_t r, std::size_t c) const { return a[r * dim() + c]; }
};

struct DenseCd {
    int N = 0;
    std::vector<std::complex<double>> a;

    std::size_t dim() const { return std::size_t(1) << N; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const { return a[r * dim() + c]; }
};

/// Literal Kronecker-product realization. Throws std::invalid_argument when
/// a word is longer than N or N exceeds the cap.
DenseExact dense_exact(const OperatorSum& x, int N, int cap = kDefaultOracleCap);
DenseCd dense_cd(const OperatorSum& x, int N, int cap = kDefaultOracleCap);

DenseExact dense_mul(const DenseExact& x, const DenseExact& y);
DenseExact dense_adjoint(const DenseExact& x);

/// Normalized trace tr(M)/2^N, exact.
RatC dense_trace(const DenseExact& x);

/// Normalized trace of M^p; uses trace(M^a M^b) = sum M^a_ij M^b_ji so only
/// about p/2 multiplications are formed. p >= 1.
RatC dense_trace_power(const DenseExact& x, int p);
std::complex<double> dense_trace_power(const DenseCd& x, int p);

/// Exact rank over the rationals by Gaussian elimination; rows x cols,
/// row-major.
int rank_exact(std::vector<RatC> m, std::size_t rows, std::size_t cols);

/// Rank of the joined range [x | y] (column span union), exact.
int range_join_rank(const DenseExact& x, const DenseExact& y);

}  // namespace qn
