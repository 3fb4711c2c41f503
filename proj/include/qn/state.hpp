#pragma once

#include "qn/opsum.hpp"

#include <complex>
#include <vector>

namespace qn {

/// Complex vector of length 2^N indexed by site bitstrings; site 1 is the
/// most significant bit and bit 0 selects the first (P-supported)
/// coordinate.
struct StateVector {
    int N = 0;
    std::vector<std::complex<double>> amps;

    static StateVector zero(int level) {
        return {level, std::vector<std::complex<double>>(std::size_t(1) << level)};
    }
    static StateVector basis(int level, std::size_t index);

    std::size_t dim() const { return amps.size(); }
};

std::complex<double> inner(const StateVector& x, const StateVector& y);
double norm(const StateVector& x);

/// Matrix-free action: equals dense(x,N) * v without forming the matrix.
/// Each non-identity letter acts on one bit position.
StateVector apply(const OperatorSum& x, const StateVector& v);

struct NormEstimate {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Largest singular value of the 2^N realization by power iteration on
/// x* x, started from the all-ones vector plus a fixed-seed perturbation.
NormEstimate op_norm(const OperatorSum& x, int N, double tol = 1e-10,
                     int max_iter = 2000);

}  // namespace qn
