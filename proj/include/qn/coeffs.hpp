#pragma once

#include "qn/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace qn {

/// The single source of operator data: an l1 coefficient sequence {c_n},
/// either geometric c_n = alpha^n with exact rational 0 < alpha < 1, or an
/// explicit finite list (entries beyond the list are exactly 0).
struct CoefficientSpec {
    enum class Kind { Geometric, Explicit };

    Kind kind = Kind::Geometric;
    Rat ratio{1, 2};
    std::vector<RatC> values;

    static CoefficientSpec geometric(Rat alpha);
    static CoefficientSpec explicit_list(std::vector<RatC> vals);

    /// Grammar: "geometric:<p>/<q>" or "list:<c1>,<c2>,..." with optional
    /// "+<im>i" parts. Throws std::invalid_argument on malformed input.
    static CoefficientSpec parse(const std::string& s);

    /// c_n, n >= 1.
    RatC coeff(int n) const;

    bool all_real() const;

    /// True when only finitely many coefficients are nonzero.
    bool is_finite() const { return kind == Kind::Explicit; }
    int explicit_length() const { return static_cast<int>(values.size()); }

    /// Exact upper bound on sum_{n>N} |c_n|. For complex entries |re|+|im|
    /// is used, which keeps the bound rational.
    Rat tail_l1(int N) const;

    /// |c_n| exactly for real entries; used by the symmetric-function code.
    Rat abs_coeff_real(int n) const;

    std::string to_string() const;
};

/// sigma_k truncated at N coefficients, with a certified truncation bound.
/// Exact for real specs; double precision (is_exact=false) otherwise.
struct SigmaValue {
    Rat exact{0};
    double value = 0.0;
    bool is_exact = true;
    double tail_bound = 0.0;
};

SigmaValue sigma(const CoefficientSpec& spec, int k, int N);

/// e_0..e_kmax of (|c_1|,...,|c_N|) by the prefix recursion, exact.
/// Requires a real spec.
std::vector<Rat> sigma_table_exact(const CoefficientSpec& spec, int kmax, int N);

struct DecayEntry {
    int k = 0;
    Rat sigma_k{0};       // exact when the spec is real
    double sigma_d = 0.0;
    double root = 0.0;    // (k! sigma_k)^(1/k)
};

/// (k! sigma_k)^(1/k) for k = 1..kmax; factorial and sigma exact, the root
/// taken through logarithms so large k cannot overflow.
std::vector<DecayEntry> decay_profile(const CoefficientSpec& spec, int kmax, int N);

struct GQuadParams {
    double tol = 1e-10;
    double cutoff_T = -1.0;   // <=0: choose from tol
    int nodes = 24;           // Gauss-Legendre nodes per unit panel
    int trunc_N = -1;         // <=0: choose from tail bound
};

struct GEvalResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    bool ok = false;
    std::string message;
};

/// g(z) = integral_0^inf f(tz) e^{-t} dt with f(z) = prod(1 + z c_n),
/// by composite Gauss-Legendre on [0,T] and a certified truncation of the
/// product. Fails (ok=false) if the requested tolerance is unachievable.
GEvalResult g_eval(const CoefficientSpec& spec, std::complex<double> z,
                   GQuadParams quad = {});

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace qn
