#pragma once

#include "qn/coeffs.hpp"
#include "qn/combinatorics.hpp"
#include "qn/dense.hpp"
#include "qn/opsum.hpp"

#include <string>
#include <vector>

namespace qn {

enum class MomentTarget { X, Y, Re, Im, AstarA };

std::string moment_target_name(MomentTarget t);

struct MomentReport {
    std::string target;
    std::string route;
    RatC exact{Rat(0)};
    double value = 0.0;
    bool is_exact = true;
    /// Bound on the change if the coefficient sequence were not truncated
    /// at N; exactly 0 for finite explicit specs.
    double tail_bound = 0.0;
    int truncation = 0;
};

struct ExactWithTail {
    Rat value{0};
    Rat tail{0};
};

/// P_m = sum_{i<=N} |c_i|^{2m}, exact, with certified tail (closed geometric
/// form for geometric specs, 0 for explicit ones).
ExactWithTail power_sum_abs2(const CoefficientSpec& spec, int m, int N);

/// Ordered sum over distinct indices p_1,...,p_k in 1..N of
/// prod |c_{p_i}|^{2 n_i}, by power-sum merge recursion (exact).
ExactWithTail distinct_monomial_sum(const PartitionShape& shape, const CoefficientSpec& spec,
                                    int N);

/// The same sum by direct distinct-tuple enumeration (test oracle; small N, k).
Rat distinct_monomial_bruteforce(const PartitionShape& shape, const CoefficientSpec& spec, int N);

/// Combinatorial route: tau(X^order) = sum over shapes of gamma * monomial
/// sum for even order, 0 for odd.
MomentReport moment_X(const CoefficientSpec& spec, int order, int N);
/// tau(Y^{2p}) = (-1)^p tau(X^{2p}); odd orders 0.
MomentReport moment_Y(const CoefficientSpec& spec, int order, int N);
/// tau(a^n) = tau(b^n) = (1/2)^n tau(X^n) with a = Re(A), b = Im(A).
MomentReport moment_reim(const CoefficientSpec& spec, int order, int N);
/// Combinatorial route: tau((A*A)^p) = sum_k (1/2^k) sum_shapes alpha * sum.
MomentReport moment_AstarA(const CoefficientSpec& spec, int p, int N, int cap = kDefaultAlphaCap);

/// The operator whose trace powers realize the target at truncation N.
OperatorSum target_operator(MomentTarget t, const CoefficientSpec& spec, int N);

/// Independent route: literal 2^N x 2^N matrix trace, exact rationals.
MomentReport moment_dense_exact(MomentTarget t, const CoefficientSpec& spec, int order, int N,
                                int cap = kDefaultOracleCap);
/// Same in double precision (for levels where exact arithmetic is too slow).
MomentReport moment_dense_cd(MomentTarget t, const CoefficientSpec& spec, int order, int N,
                             int cap = kDefaultOracleCap);

inline constexpr int kDefaultSeriesLen = 60;

struct CharfnMoments {
    std::vector<Rat> moment;  // moment[k] = E X^k of the truncated model
    std::vector<Rat> tail;    // certified bound vs. the full sequence
    int series_N = 0;
};

/// Moments of X_alpha read off the power series of prod_{n<=N} cos(alpha^n t):
/// E X^k = (1/i)^k k! [t^k]. Exact rational arithmetic throughout.
CharfnMoments charfn_moments(const Rat& alpha, int max_order, int series_N = kDefaultSeriesLen);

/// Integral route: (1/2) int_{-1}^{1} f(x)^n dx with f = sum c_k f_k, the f_k
/// being the +-1 dyadic step functions; exact summation over the 2^depth
/// dyadic cells on which the depth-truncated f is constant. Real specs only.
MomentReport rademacher_moment(const CoefficientSpec& spec, int order, int depth);

struct MixedMomentReport {
    int n = 0, m = 0, N = 0;
    RatC lhs{Rat(0)};  // tau(a^n b^m), dense oracle
    RatC rhs{Rat(0)};  // tau(a^n) tau(b^m), dense oracle
    bool equal = false;
};

/// tau(a^n b^m) = tau(a^n) tau(b^m), both sides by the dense oracle.
MixedMomentReport mixed_moment_check(const CoefficientSpec& spec, int n, int m, int N,
                                     int cap = kDefaultOracleCap);

}  // namespace qn
