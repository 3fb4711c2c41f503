#include "qn/operators.hpp"

#include <sstream>
#include <stdexcept>

namespace qn {

namespace {

RatC pow_ratc(const RatC& c, int k) {
    RatC r(1);
    for (int i = 0; i < k; ++i) r = r * c;
    return r;
}

OperatorSum letter_series(const CoefficientSpec& spec, SiteLetter l, int k, int N) {
    OperatorSum s;
    for (int n = 1; n <= N; ++n) {
        RatC c = pow_ratc(spec.coeff(n), k);
        if (c.is_zero()) continue;
        s = s + OperatorSum::letter(l, n) * c;
    }
    return s;
}

}  // namespace

OperatorSum build_A(const CoefficientSpec& spec, int N) {
    return letter_series(spec, SiteLetter::V, 1, N);
}
OperatorSum build_X(const CoefficientSpec& spec, int N) {
    return letter_series(spec, SiteLetter::R, 1, N);
}
OperatorSum build_Y(const CoefficientSpec& spec, int N) {
    return letter_series(spec, SiteLetter::T, 1, N);
}
OperatorSum build_q_power(const CoefficientSpec& spec, int k, int N) {
    return letter_series(spec, SiteLetter::Q, k, N);
}
OperatorSum build_p_power(const CoefficientSpec& spec, int k, int N) {
    return letter_series(spec, SiteLetter::P, k, N);
}

OperatorSum build_v(const CoefficientSpec& spec, int N) {
    OperatorSum s;
    for (int n = 1; n < N; ++n)
        for (int m = n + 1; m <= N; ++m) {
            RatC c = spec.coeff(n) * spec.coeff(m);
            if (c.is_zero()) continue;
            OperatorSum vnm = OperatorSum::letter(SiteLetter::V, n) *
                                  OperatorSum::letter(SiteLetter::Vstar, m) +
                              OperatorSum::letter(SiteLetter::Vstar, n) *
                                  OperatorSum::letter(SiteLetter::V, m);
            s = s + vnm * c;
        }
    return s;
}

OperatorSum build_S(const CoefficientSpec& spec, int n, int m) {
    if (n >= m) throw std::invalid_argument("build_S: n < m required");
    RatC cn = spec.coeff(n), cm = spec.coeff(m);
    if (cn.is_zero() || cm.is_zero())
        throw std::invalid_argument("build_S: zero coefficient in quotient");
    using L = SiteLetter;
    OperatorSum s = OperatorSum::letter(L::P, n) * OperatorSum::letter(L::Q, m) +
                    OperatorSum::letter(L::Q, n) * OperatorSum::letter(L::P, m);
    s = s - OperatorSum::letter(L::V, n) * OperatorSum::letter(L::Vstar, m) * (cn / cm);
    s = s - OperatorSum::letter(L::Vstar, n) * OperatorSum::letter(L::V, m) * (cm / cn);
    return s;
}

OperatorSum proj_word(const std::string& pq) {
    std::vector<SiteLetter> ls;
    for (char ch : pq) {
        if (ch == 'P' || ch == 'p') ls.push_back(SiteLetter::P);
        else if (ch == 'Q' || ch == 'q') ls.push_back(SiteLetter::Q);
        else throw std::invalid_argument("proj_word: letters must be P or Q");
    }
    return OperatorSum::word(ls);
}

namespace {

OperatorSum diag_product(const CoefficientSpec& a, const CoefficientSpec& b, int n, bool invert) {
    OperatorSum w = OperatorSum::identity();
    for (int i = 1; i <= n; ++i) {
        RatC ai = a.coeff(i), bi = b.coeff(i);
        if (ai.is_zero() || bi.is_zero())
            throw std::invalid_argument("similarity: zero coefficient");
        RatC lam = invert ? bi / ai : ai / bi;
        OperatorSum d = OperatorSum::letter(SiteLetter::P, i) +
                        OperatorSum::letter(SiteLetter::Q, i) * lam;
        w = w * d;
    }
    return w;
}

}  // namespace

OperatorSum build_W_similarity(const CoefficientSpec& a, const CoefficientSpec& b, int n) {
    return diag_product(a, b, n, false);
}
OperatorSum build_W_similarity_inverse(const CoefficientSpec& a, const CoefficientSpec& b, int n) {
    return diag_product(a, b, n, true);
}

OperatorSum build_W_commutator(const CoefficientSpec& a, const CoefficientSpec& b, int N) {
    OperatorSum w;
    for (int n = 1; n <= N; ++n) {
        RatC bn = b.coeff(n);
        if (bn.is_zero()) throw std::invalid_argument("commutator realization: zero b_n");
        RatC f = a.coeff(n) / bn;
        if (f.is_zero()) continue;
        w = w + OperatorSum::letter(SiteLetter::P, n) * f;
    }
    return w;
}

Rat check_commutes(const OperatorSum& x, const OperatorSum& y) {
    return commutator(x, y).norm2_sq();
}

CheckReport check_nilpotency(const CoefficientSpec& spec, int N) {
    CheckReport rep;
    rep.name = "A_" + std::to_string(N) + " nilpotent of order " + std::to_string(N + 1);
    OperatorSum A = build_A(spec, N);
    OperatorSum an = A.pow(N);

    RatC coef(1);
    for (int i = 1; i <= N; ++i) {
        coef = coef * spec.coeff(i);
        coef = coef * RatC(i);  // builds N! prod c_i
    }
    OperatorSum expected = OperatorSum::word(std::vector<SiteLetter>(N, SiteLetter::V)) * coef;

    Rat r1 = (an - expected).norm2_sq();
    Rat r2 = (an * A).norm2_sq();
    rep.residual = r1 + r2;
    rep.pass = sgn(rep.residual) == 0;
    std::ostringstream os;
    os << "A^N residual " << rat_str(r1) << ", A^{N+1} residual " << rat_str(r2);
    rep.detail = os.str();
    return rep;
}

CheckReport check_generation_identities(const CoefficientSpec& spec, int N) {
    CheckReport rep;
    rep.name = "generation identities at N=" + std::to_string(N);
    OperatorSum A = build_A(spec, N);
    OperatorSum q2 = build_q_power(spec, 2, N);
    OperatorSum p2 = build_p_power(spec, 2, N);
    OperatorSum v = build_v(spec, N);

    Rat r = (A.adjoint() * A - q2 - v).norm2_sq();
    r += (A * A.adjoint() - p2 - v).norm2_sq();

    // with QV = 0 and VQ = V the commutator orientation giving sum c_n^3 V_n
    // is A q2 - q2 A
    OperatorSum q6rhs = letter_series(spec, SiteLetter::V, 3, N);
    r += (commutator(A, q2) - q6rhs).norm2_sq();

    RatC sum2(0);
    for (int n = 1; n <= N; ++n) sum2 += pow_ratc(spec.coeff(n), 2);
    r += (p2 + q2 - OperatorSum::scalar(sum2)).norm2_sq();

    rep.residual = r;
    rep.pass = sgn(r) == 0;
    return rep;
}

CheckReport check_similarity(const CoefficientSpec& a, const CoefficientSpec& b, int n, int N) {
    if (N < n) throw std::invalid_argument("check_similarity: N >= n required");
    CheckReport rep;
    rep.name = "W_" + std::to_string(n) + " A_" + std::to_string(N) + " W^-1 = B_" +
               std::to_string(n) + " + A - A_" + std::to_string(n);
    OperatorSum W = build_W_similarity(a, b, n);
    OperatorSum Winv = build_W_similarity_inverse(a, b, n);
    OperatorSum A = build_A(a, N);
    OperatorSum rhs = build_A(b, n) + A - build_A(a, n);
    rep.residual = (W * A * Winv - rhs).norm2_sq();
    rep.pass = sgn(rep.residual) == 0;
    return rep;
}

CheckReport check_commutator_realization(const CoefficientSpec& a, const CoefficientSpec& b,
                                         int N) {
    CheckReport rep;
    rep.name = "[W, B] = A_" + std::to_string(N);
    OperatorSum W = build_W_commutator(a, b, N);
    OperatorSum B = build_A(b, N);
    rep.residual = (commutator(W, B) - build_A(a, N)).norm2_sq();
    rep.pass = sgn(rep.residual) == 0;
    return rep;
}

InvarianceVerdict check_invariance(const OperatorSum& p, const OperatorSum& t) {
    if (!(p * p - p).is_zero() || !(p.adjoint() - p).is_zero())
        throw std::invalid_argument("check_invariance: p is not a projection");
    InvarianceVerdict v;
    v.witness = t * p - p * t * p;
    v.invariant = v.witness.is_zero();
    return v;
}

}  // namespace qn
