#include "qn/state.hpp"

#include "qn/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qn {

namespace {

using cd = std::complex<double>;

uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// apply one 2x2 site matrix in place at 1-based site s (site 1 = MSB)
void apply_site(std::vector<cd>& v, int N, int s, const Mat2& m) {
    const auto& k = kernels::ops();
    cd m00 = m.e[0].to_cd(), m01 = m.e[1].to_cd();
    cd m10 = m.e[2].to_cd(), m11 = m.e[3].to_cd();
    std::size_t stride = std::size_t(1) << (N - s);
    std::size_t dim = v.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride)
        k.site2x2(v.data() + base, v.data() + base + stride,
                  v.data() + base, v.data() + base + stride,
                  m00, m01, m10, m11, stride);
}

}  // namespace

StateVector StateVector::basis(int level, std::size_t index) {
    StateVector v = zero(level);
    v.amps[index] = 1.0;
    return v;
}

std::complex<double> inner(const StateVector& x, const StateVector& y) {
    return kernels::ops().dot(x.amps.data(), y.amps.data(), x.amps.size());
}

double norm(const StateVector& x) {
    return std::sqrt(std::abs(inner(x, x).real()));
}

StateVector apply(const OperatorSum& x, const StateVector& v) {
    if (x.max_site() > v.N) throw std::invalid_argument("apply: word longer than level");
    StateVector out = StateVector::zero(v.N);
    std::vector<cd> tmp;
    for (const auto& [w, c] : x.terms) {
        tmp = v.amps;
        for (int s = 1; s <= w.length(); ++s) {
            if (w.sites[s - 1].is_identity()) continue;
            apply_site(tmp, v.N, s, w.sites[s - 1]);
        }
        kernels::ops().axpy(c.to_cd(), tmp.data(), out.amps.data(), tmp.size());
    }
    return out;
}

NormEstimate op_norm(const OperatorSum& x, int N, double tol, int max_iter) {
    NormEstimate est;
    if (x.is_zero()) {
        est.converged = true;
        return est;
    }
    OperatorSum xadj = x.adjoint();

    StateVector v = StateVector::zero(N);
    for (auto& a : v.amps) a = 1.0;
    // fixed-seed perturbation so degenerate starts cannot stall
    uint64_t seed = 0x51a7e5eedULL;
    for (auto& a : v.amps)
        a += 1e-3 * (double(splitmix64(seed) >> 11) * 0x1.0p-53 - 0.5);
    double nv = norm(v);
    kernels::ops().scale(1.0 / nv, v.amps.data(), v.amps.size());

    double prev = -1.0;
    for (int it = 1; it <= max_iter; ++it) {
        StateVector w = apply(x, v);
        double nw = norm(w);
        est.iterations = it;
        if (nw == 0.0) {
            est.value = 0.0;
            est.converged = true;
            return est;
        }
        StateVector u = apply(xadj, w);
        double lambda = inner(v, u).real();
        est.value = std::sqrt(std::max(lambda, 0.0));
        if (prev >= 0.0 && std::abs(est.value - prev) < tol) {
            est.converged = true;
            return est;
        }
        prev = est.value;
        double nu = norm(u);
        if (nu == 0.0) {
            est.value = 0.0;
            est.converged = true;
            return est;
        }
        kernels::ops().scale(1.0 / nu, u.amps.data(), u.amps.size());
        v = std::move(u);
    }
    return est;  // not converged; last estimate reported
}

}  // namespace qn
