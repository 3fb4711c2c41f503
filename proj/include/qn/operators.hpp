#pragma once

#include "qn/coeffs.hpp"
#include "qn/opsum.hpp"

#include <string>
#include <vector>

namespace qn {

/// A_N = sum_{n<=N} c_n V_n.
OperatorSum build_A(const CoefficientSpec& spec, int N);
/// X_N = sum_{n<=N} c_n R_n.
OperatorSum build_X(const CoefficientSpec& spec, int N);
/// Y_N = sum_{n<=N} c_n T_n.
OperatorSum build_Y(const CoefficientSpec& spec, int N);
/// q_k at truncation: sum_{n<=N} c_n^k Q_n; p_k likewise with P.
OperatorSum build_q_power(const CoefficientSpec& spec, int k, int N);
OperatorSum build_p_power(const CoefficientSpec& spec, int k, int N);
/// v = sum_{n<m<=N} c_n c_m (V_n V*_m + V*_n V_m).
OperatorSum build_v(const CoefficientSpec& spec, int N);
/// S_{n,m} = P_n Q_m + Q_n P_m - (c_n/c_m) V_n V*_m - (c_m/c_n) V*_n V_m.
/// Requires n < m and c_n, c_m nonzero.
OperatorSum build_S(const CoefficientSpec& spec, int n, int m);
/// Projection word over {P,Q}, e.g. "PQ" -> P (x) Q.
OperatorSum proj_word(const std::string& pq);
/// W_n = D_{l1} (x) ... (x) D_{ln} with D_l = P + l Q and l_i = a_i/b_i.
OperatorSum build_W_similarity(const CoefficientSpec& a, const CoefficientSpec& b, int n);
OperatorSum build_W_similarity_inverse(const CoefficientSpec& a, const CoefficientSpec& b, int n);
/// W = sum_{n<=N} (a_n/b_n) P_n for the commutator realization [W,B] = A.
OperatorSum build_W_commutator(const CoefficientSpec& a, const CoefficientSpec& b, int N);

struct CheckReport {
    std::string name;
    bool pass = false;
    Rat residual{0};       // exact; 0 iff the identity holds
    std::string detail;
};

/// tau((xy-yx)* (xy-yx)), exact; zero iff x and y commute.
Rat check_commutes(const OperatorSum& x, const OperatorSum& y);

/// A_N^{N+1} = 0 and A_N^N = N! (prod c_i) V^{(x)N}, exactly.
CheckReport check_nilpotency(const CoefficientSpec& spec, int N);

/// A*A = q2 + v, AA* = p2 + v, A q2 - q2 A = sum c_n^3 V_n, and
/// p2 + q2 = (sum c_n^2) 1, all at truncation N. Real specs.
CheckReport check_generation_identities(const CoefficientSpec& spec, int N);

/// W_n A_N W_n^{-1} = B_n + A_N - A_n, exactly.
CheckReport check_similarity(const CoefficientSpec& a, const CoefficientSpec& b, int n, int N);

/// [W, B] = A_N with W = sum (a_n/b_n) P_n and B = sum b_n V_n.
CheckReport check_commutator_realization(const CoefficientSpec& a, const CoefficientSpec& b, int N);

struct InvarianceVerdict {
    bool invariant = false;
    OperatorSum witness;  // t p - p t p when not invariant
};

/// Rejects (throws std::invalid_argument) when p is not an exact projection.
InvarianceVerdict check_invariance(const OperatorSum& p, const OperatorSum& t);

}  // namespace qn
