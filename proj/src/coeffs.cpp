#include "qn/coeffs.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qn {

CoefficientSpec CoefficientSpec::geometric(Rat alpha) {
    if (sgn(alpha) <= 0 || alpha >= 1)
        throw std::invalid_argument("geometric ratio must lie strictly in (0,1)");
    CoefficientSpec s;
    s.kind = Kind::Geometric;
    s.ratio = std::move(alpha);
    return s;
}

CoefficientSpec CoefficientSpec::explicit_list(std::vector<RatC> vals) {
    CoefficientSpec s;
    s.kind = Kind::Explicit;
    s.values = std::move(vals);
    return s;
}

CoefficientSpec CoefficientSpec::parse(const std::string& str) {
    auto colon = str.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("coefficient spec needs 'geometric:' or 'list:' prefix");
    std::string head = str.substr(0, colon), body = str.substr(colon + 1);
    if (head == "geometric") return geometric(parse_rat(body));
    if (head == "list") {
        std::vector<RatC> vals;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) vals.push_back(parse_ratc(item));
        if (vals.empty()) throw std::invalid_argument("empty coefficient list");
        return explicit_list(std::move(vals));
    }
    throw std::invalid_argument("unknown coefficient spec kind: " + head);
}

RatC CoefficientSpec::coeff(int n) const {
    if (n < 1) throw std::invalid_argument("coefficient index must be >= 1");
    if (kind == Kind::Geometric) {
        Rat p;
        mpz_pow_ui(p.get_num().get_mpz_t(), ratio.get_num().get_mpz_t(), n);
        mpz_pow_ui(p.get_den().get_mpz_t(), ratio.get_den().get_mpz_t(), n);
        p.canonicalize();
        return RatC(p);
    }
    if (n > static_cast<int>(values.size())) return RatC(0);
    return values[n - 1];
}

bool CoefficientSpec::all_real() const {
    if (kind == Kind::Geometric) return true;
    for (const auto& v : values)
        if (!v.is_real()) return false;
    return true;
}

Rat CoefficientSpec::tail_l1(int N) const {
    if (kind == Kind::Geometric) {
        // alpha^{N+1} / (1 - alpha)
        Rat p = coeff(N + 1).re;
        return p / (1 - ratio);
    }
    Rat t(0);
    for (int n = N + 1; n <= static_cast<int>(values.size()); ++n)
        t += abs(values[n - 1].re) + abs(values[n - 1].im);
    return t;
}

Rat CoefficientSpec::abs_coeff_real(int n) const {
    RatC c = coeff(n);
    if (!c.is_real()) throw std::domain_error("abs_coeff_real on complex entry");
    return abs(c.re);
}

std::string CoefficientSpec::to_string() const {
    if (kind == Kind::Geometric) return "geometric:" + rat_str(ratio);
    std::string s = "list:";
    for (size_t i = 0; i < values.size(); ++i)
        s += (i ? "," : "") + ratc_str(values[i]);
    return s;
}

std::vector<Rat> sigma_table_exact(const CoefficientSpec& spec, int kmax, int N) {
    std::vector<Rat> e(kmax + 1, Rat(0));
    e[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Rat x = spec.abs_coeff_real(n);
        if (sgn(x) == 0) continue;
        for (int k = std::min(kmax, n); k >= 1; --k) e[k] += x * e[k - 1];
    }
    return e;
}

namespace {

Rat factorial(int k) {
    Rat f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// tail of sigma_k at truncation N:
//   e_k(inf) - e_k(N) <= tail_l1(N) * e_{k-1}(inf)
// with e_{k-1}(inf) <= (sigma_1(N) + tail)^{k-1} / (k-1)!.
double sigma_tail_bound(const CoefficientSpec& spec, int k, int N, const Rat& sigma1_N) {
    Rat tail = spec.tail_l1(N);
    if (sgn(tail) == 0) return 0.0;
    Rat s1 = sigma1_N + tail;
    Rat b = tail;
    for (int i = 1; i < k; ++i) b = b * s1 / i;
    return b.get_d();
}

}  // namespace

SigmaValue sigma(const CoefficientSpec& spec, int k, int N) {
    if (k < 1) throw std::invalid_argument("sigma: k >= 1 required");
    SigmaValue out;
    if (spec.all_real()) {
        auto e = sigma_table_exact(spec, k, N);
        out.exact = e[k];
        out.value = e[k].get_d();
        out.is_exact = true;
        out.tail_bound = sigma_tail_bound(spec, k, N, e[1]);
        return out;
    }
    // complex entries: |c_n| is irrational in general, compute in double
    std::vector<double> e(k + 1, 0.0);
    e[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        double x = std::sqrt(spec.coeff(n).abs2().get_d());
        for (int j = std::min(k, n); j >= 1; --j) e[j] += x * e[j - 1];
    }
    out.exact = 0;
    out.value = e[k];
    out.is_exact = false;
    // |re|+|im| >= |c|, so tail_l1(0) dominates sigma_1
    out.tail_bound = sigma_tail_bound(spec, k, N, spec.tail_l1(0));
    return out;
}

std::vector<DecayEntry> decay_profile(const CoefficientSpec& spec, int kmax, int N) {
    std::vector<DecayEntry> out;
    out.reserve(kmax);
    if (spec.all_real()) {
        auto e = sigma_table_exact(spec, kmax, N);
        for (int k = 1; k <= kmax; ++k) {
            DecayEntry d;
            d.k = k;
            d.sigma_k = e[k];
            d.sigma_d = e[k].get_d();
            if (sgn(e[k]) == 0) {
                d.root = 0.0;
            } else {
                double lg = std::lgamma(k + 1.0) + log_rat(e[k]);
                d.root = std::exp(lg / k);
            }
            out.push_back(std::move(d));
        }
        return out;
    }
    for (int k = 1; k <= kmax; ++k) {
        DecayEntry d;
        d.k = k;
        d.sigma_d = sigma(spec, k, N).value;
        d.root = d.sigma_d > 0.0
                     ? std::exp((std::lgamma(k + 1.0) + std::log(d.sigma_d)) / k)
                     : 0.0;
        out.push_back(std::move(d));
    }
    return out;
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

namespace {

std::complex<double> product_f(const CoefficientSpec& spec, std::complex<double> tz, int N,
                               const std::vector<std::complex<double>>& cs) {
    std::complex<double> f(1.0, 0.0);
    for (int n = 1; n <= N; ++n) f *= 1.0 + tz * cs[n];
    return f;
}

}  // namespace

GEvalResult g_eval(const CoefficientSpec& spec, std::complex<double> z, GQuadParams quad) {
    GEvalResult out;
    double az = std::abs(z);

    double T = quad.cutoff_T;
    if (T <= 0.0) T = 2.0 * std::log(10.0 / quad.tol) + 40.0;

    // product truncation: the neglected factors perturb f by a relative
    // factor exp(t |z| tail) - 1 <= 2 t |z| tail on [0,T]
    int N = quad.trunc_N;
    if (N <= 0) {
        N = 1;
        while (N < 4000 && 2.0 * T * az * spec.tail_l1(N).get_d() > quad.tol) ++N;
        if (spec.is_finite()) N = std::min(N, spec.explicit_length());
        if (2.0 * T * az * spec.tail_l1(N).get_d() > quad.tol) {
            out.message = "tolerance unachievable: coefficient tail too heavy";
            return out;
        }
    }

    // the paper-style cutoff estimate: pick N0 with tail < 1/(2 max(|z|,1)),
    // then |f(tz)| <= K(T) exp(t/2) with K(T) the head product bound
    int N0 = 0;
    double half = 1.0 / (2.0 * std::max(az, 1.0));
    while (spec.tail_l1(N0).get_d() >= half && N0 < 4000) ++N0;
    double logK = 0.0;
    for (int n = 1; n <= N0; ++n)
        logK += std::log1p(T * az * std::sqrt(spec.coeff(n).abs2().get_d()));
    double cutoff_tail = 2.0 * std::exp(logK - T / 2.0);
    if (cutoff_tail > quad.tol) {
        out.message = "tolerance unachievable with cutoff T";
        return out;
    }

    std::vector<std::complex<double>> cs(N + 1);
    for (int n = 1; n <= N; ++n) cs[n] = spec.coeff(n).to_cd();

    std::vector<double> xs, ws, xs2, ws2;
    gauss_legendre(quad.nodes, xs, ws);
    gauss_legendre(std::max(2, quad.nodes / 2), xs2, ws2);

    int panels = static_cast<int>(std::ceil(T));
    double h = T / panels;
    std::complex<double> total(0.0, 0.0);
    double quad_err = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = p * h, mid = a + h / 2.0, sc = h / 2.0;
        std::complex<double> s(0.0, 0.0), s2(0.0, 0.0);
        for (size_t i = 0; i < xs.size(); ++i) {
            double t = mid + sc * xs[i];
            s += ws[i] * product_f(spec, t * z, N, cs) * std::exp(-t);
        }
        for (size_t i = 0; i < xs2.size(); ++i) {
            double t = mid + sc * xs2[i];
            s2 += ws2[i] * product_f(spec, t * z, N, cs) * std::exp(-t);
        }
        total += sc * s;
        quad_err += std::abs(sc * (s - s2));
    }

    out.value = total;
    out.error_estimate = quad_err + cutoff_tail +
                         2.0 * T * az * spec.tail_l1(N).get_d() * (std::abs(total) + 1.0);
    out.ok = out.error_estimate <= std::max(quad.tol, 1e-14) * 10.0 + quad.tol;
    if (!out.ok) out.message = "error estimate exceeds tolerance";
    return out;
}

}  // namespace qn
