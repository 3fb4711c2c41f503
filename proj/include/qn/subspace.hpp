#pragma once

#include "qn/coeffs.hpp"
#include "qn/dense.hpp"
#include "qn/opsum.hpp"

#include <string>
#include <vector>

namespace qn {

/// A word over {P,Q} labelling a diagonal projection p_w = w (x) I (x) ...
struct PQWord {
    std::string letters;  // 'P' / 'Q'

    static PQWord parse(const std::string& s);
    int length() const { return static_cast<int>(letters.size()); }
    int p_count() const;
};

/// tau(R_m w) for geometric alpha, by the exact recursions
///   tau(R_m (P (x) w)) = (1/2) a^{2m} tau(R_m w)
///   tau(R_m (Q (x) w)) = (a^{2m}/2) (m^2 tau(R_{m-1} w) + tau(R_m w))
///   tau(R_m)          = (m^2 a^{2m} / (2 (1 - a^{2m}))) tau(R_{m-1})
/// with tau(R_0 w) = 2^{-|w|}. Throws on alpha outside (0,1).
Rat rm_trace(const PQWord& w, const Rat& alpha, int m);

/// Independent oracle: direct evaluation of the defining sum
/// R_m = (m!)^2 sum_{q_1<...<q_m} a^{2 q_1}...a^{2 q_m} Q_{q_1}...Q_{q_m}
/// truncated at N sites, as a weighted elementary symmetric sum, with a
/// certified bound on the omitted terms.
struct RmDirect {
    Rat value{0};
    Rat tail{0};
};
RmDirect rm_trace_direct(const PQWord& w, const Rat& alpha, int m, int N);

struct RatioRow {
    int m = 0;
    Rat ratio{0};       // tau(R_m w) / tau(R_m), exact
    double root = 0.0;  // ratio^{1/(2m)}
};

struct RatioProfile {
    PQWord word;
    Rat alpha{0};
    std::vector<RatioRow> rows;  // m = 1..m_max
};

/// ||A^m w-hat||_2 / ||A^m 1-hat||_2 through tau(R_m w), exact ratios.
RatioProfile ratio_profile(const PQWord& w, const Rat& alpha, int m_max);

struct LowerBoundRow {
    int m = 0;
    bool skipped = false;  // A^m xi or A^m 1 vanishes at this truncation
    Rat ratio_sq{0};       // ||A^m xi||^2 / ||A^m 1||^2
    double root = 0.0;     // ratio^{1/(2m)}
    bool holds = false;
    double margin = 0.0;   // root - threshold
};

struct LowerBoundReport {
    int r = 0;            // max word length in xi
    double threshold = 0; // (1/sqrt(2)) alpha^r (1 - slack)
    std::vector<LowerBoundRow> rows;
    bool pass = false;    // every non-skipped row holds
};

/// Checks root_m >= (1/sqrt2) alpha^r (1 - slack) for m = 1..m_max, with the
/// comparison done on exact squared quantities. xi is given as an operator
/// sum x (the vector is x-hat); truncation level N. The default slack absorbs
/// the finite-level deficit of the ratios against their infinite-level values.
LowerBoundReport lower_bound_check(const OperatorSum& xi, const Rat& alpha, int m_max, int N,
                                   const Rat& slack = Rat(1, 100));

struct HyperinvarianceReport {
    std::string word;
    bool found = false;
    int n = 0, m = 0;       // witness S(n,m)
    Rat witness_norm2{0};   // ||S p - p S p||_2^2 > 0
    int rank_p = 0;
    int rank_join = 0;      // rank [p | S p]
    bool strict_growth = false;
    std::string detail;
};

/// Finds S(n,m), n < m <= N, under which the projection p_w is not
/// invariant, and verifies range(p_w) v range(S p_w) strictly grows
/// (exact rank comparison in the dense realization).
HyperinvarianceReport hyperinvariance_report(const PQWord& w, const CoefficientSpec& spec, int N,
                                             int cap = kDefaultOracleCap);

}  // namespace qn
