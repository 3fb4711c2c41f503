#include "qn/dense.hpp"

#include "qn/kernels.hpp"

#include <stdexcept>

namespace qn {

namespace {

void check_level(const OperatorSum& x, int N, int cap) {
    if (N < 1) throw std::invalid_argument("dense: N >= 1 required");
    if (N > cap) throw std::invalid_argument("dense: level exceeds oracle cap");
    if (x.max_site() > N) throw std::invalid_argument("dense: word longer than level");
}

}  // namespace

DenseExact dense_exact(const OperatorSum& x, int N, int cap) {
    check_level(x, N, cap);
    std::size_t d = std::size_t(1) << N;
    DenseExact out;
    out.N = N;
    out.a.assign(d * d, RatC(0));
    for (const auto& [w, c] : x.terms) {
        // grow the Kronecker product site by site
        std::vector<RatC> m{c};
        std::size_t md = 1;
        for (int s = 0; s < N; ++s) {
            Mat2 site = s < w.length() ? w.sites[s] : Mat2::ident();
            std::vector<RatC> next(4 * md * md, RatC(0));
            std::size_t nd = 2 * md;
            for (std::size_t r = 0; r < md; ++r)
                for (std::size_t cc = 0; cc < md; ++cc) {
                    const RatC& v = m[r * md + cc];
                    if (v.is_zero()) continue;
                    for (int br = 0; br < 2; ++br)
                        for (int bc = 0; bc < 2; ++bc) {
                            const RatC& sv = site.e[br * 2 + bc];
                            if (sv.is_zero()) continue;
                            next[(r * 2 + br) * nd + (cc * 2 + bc)] = v * sv;
                        }
                }
            m = std::move(next);
            md = nd;
        }
        for (std::size_t i = 0; i < d * d; ++i)
            if (!m[i].is_zero()) out.a[i] += m[i];
    }
    return out;
}

DenseCd dense_cd(const OperatorSum& x, int N, int cap) {
    check_level(x, N, cap);
    std::size_t d = std::size_t(1) << N;
    DenseCd out;
    out.N = N;
    out.a.assign(d * d, {0.0, 0.0});
    for (const auto& [w, c] : x.terms) {
        std::vector<std::complex<double>> m{c.to_cd()};
        std::size_t md = 1;
        for (int s = 0; s < N; ++s) {
            Mat2 site = s < w.length() ? w.sites[s] : Mat2::ident();
            std::complex<double> sm[4] = {site.e[0].to_cd(), site.e[1].to_cd(),
                                          site.e[2].to_cd(), site.e[3].to_cd()};
            std::size_t nd = 2 * md;
            std::vector<std::complex<double>> next(nd * nd, {0.0, 0.0});
            for (std::size_t r = 0; r < md; ++r)
                for (std::size_t cc = 0; cc < md; ++cc) {
                    auto v = m[r * md + cc];
                    if (v == std::complex<double>{}) continue;
                    for (int br = 0; br < 2; ++br)
                        for (int bc = 0; bc < 2; ++bc)
                            next[(r * 2 + br) * nd + (cc * 2 + bc)] = v * sm[br * 2 + bc];
                }
            m = std::move(next);
            md = nd;
        }
        for (std::size_t i = 0; i < d * d; ++i) out.a[i] += m[i];
    }
    return out;
}

DenseExact dense_mul(const DenseExact& x, const DenseExact& y) {
    if (x.N != y.N) throw std::invalid_argument("dense_mul: level mismatch");
    std::size_t d = x.dim();
    DenseExact out;
    out.N = x.N;
    out.a.assign(d * d, RatC(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const RatC& v = x.a[i * d + k];
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                const RatC& w = y.a[k * d + j];
                if (!w.is_zero()) out.a[i * d + j] += v * w;
            }
        }
    return out;
}

DenseExact dense_adjoint(const DenseExact& x) {
    std::size_t d = x.dim();
    DenseExact out;
    out.N = x.N;
    out.a.assign(d * d, RatC(0));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) out.a[c * d + r] = x.a[r * d + c].conj();
    return out;
}

RatC dense_trace(const DenseExact& x) {
    std::size_t d = x.dim();
    RatC t(0);
    for (std::size_t i = 0; i < d; ++i) t += x.a[i * d + i];
    Rat scale(1, long(d));
    scale.canonicalize();
    return t * RatC(scale);
}

RatC dense_trace_power(const DenseExact& x, int p) {
    if (p < 1) throw std::invalid_argument("dense_trace_power: p >= 1");
    if (p == 1) return dense_trace(x);
    std::size_t d = x.dim();
    int a = p / 2, b = p - a;
    DenseExact ma = x, mb = x;
    for (int i = 1; i < a; ++i) ma = dense_mul(ma, x);
    for (int i = 1; i < b; ++i) mb = dense_mul(mb, x);
    RatC t(0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const RatC& u = ma.a[i * d + j];
            if (u.is_zero()) continue;
            t += u * mb.a[j * d + i];
        }
    Rat scale(1, long(d));
    scale.canonicalize();
    return t * RatC(scale);
}

std::complex<double> dense_trace_power(const DenseCd& x, int p) {
    if (p < 1) throw std::invalid_argument("dense_trace_power: p >= 1");
    std::size_t d = x.dim();
    std::complex<double> t(0.0, 0.0);
    if (p == 1) {
        for (std::size_t i = 0; i < d; ++i) t += x.a[i * d + i];
        return t / double(d);
    }
    int a = p / 2, b = p - a;
    auto power = [&](int k) {
        std::vector<std::complex<double>> m = x.a;
        std::vector<std::complex<double>> tmp(d * d);
        for (int i = 1; i < k; ++i) {
            std::fill(tmp.begin(), tmp.end(), std::complex<double>{});
            kernels::matmul_acc(m.data(), x.a.data(), tmp.data(), d);
            m.swap(tmp);
        }
        return m;
    };
    auto ma = power(a);
    auto mb = (a == b) ? ma : power(b);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) t += ma[i * d + j] * mb[j * d + i];
    return t / double(d);
}

int rank_exact(std::vector<RatC> m, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!m[r * cols + c].is_zero()) { pivot = r; break; }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m[pivot * cols + j], m[rank * cols + j]);
        RatC pv = m[rank * cols + c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            RatC f = m[r * cols + c];
            if (f.is_zero()) continue;
            f = f / pv;
            for (std::size_t j = c; j < cols; ++j)
                m[r * cols + j] -= f * m[rank * cols + j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int range_join_rank(const DenseExact& x, const DenseExact& y) {
    if (x.N != y.N) throw std::invalid_argument("range_join_rank: level mismatch");
    std::size_t d = x.dim();
    // columns of x and y side by side: rows d, cols 2d
    std::vector<RatC> m(d * 2 * d, RatC(0));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            m[r * 2 * d + c] = x.a[r * d + c];
            m[r * 2 * d + d + c] = y.a[r * d + c];
        }
    return rank_exact(std::move(m), d, 2 * d);
}

}  // namespace qn
