#pragma once

#include <cstdint>
#include <vector>

#include "qn/coeffs.hpp"

namespace qn {

/// f(x) = sum_{n<=N} c_n f_n(x) with f_n the +-1 dyadic step functions on
/// [-1,1]; dyadic breakpoints take the left limit. Real specs only.
double f_eval(const CoefficientSpec& spec, double x, int N);

struct SampleRun {
    double alpha = 0.0;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    int truncation = 0;

    double mean = 0.0;
    double moments[8] = {};  // raw moments of order 1..8
    double range = 0.0;      // all samples lie in [-range, range]
    std::vector<double> bin_edges;  // bins+1 edges over [-range, range]
    std::vector<std::uint64_t> bin_counts;

    /// sup_x |F_hat(x) - F(x)| against the uniform CDF on [-1,1]
    double sup_cdf_uniform = 0.0;
};

/// Draws `count` values of sum_{n<=N} eps_n alpha^n with signs derived from a
/// counter-based 64-bit generator keyed on (seed, sample index); byte-for-byte
/// reproducible and order-independent per sample.
SampleRun sample_series(double alpha, std::uint64_t count, std::uint64_t seed, int N,
                        int bins = 64);

/// The per-index generator word, exposed so reproducibility can be asserted.
std::uint64_t sample_stream_word(std::uint64_t seed, std::uint64_t index);

}  // namespace qn
