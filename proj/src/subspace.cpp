#include "qn/subspace.hpp"

#include "qn/operators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qn {

PQWord PQWord::parse(const std::string& s) {
    PQWord w;
    for (char ch : s) {
        if (ch == 'P' || ch == 'p') w.letters += 'P';
        else if (ch == 'Q' || ch == 'q') w.letters += 'Q';
        else throw std::invalid_argument("word: letters must be P or Q");
    }
    return w;
}

int PQWord::p_count() const {
    int k = 0;
    for (char ch : letters) k += (ch == 'P');
    return k;
}

namespace {

Rat rat_pow(const Rat& x, int k) {
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

void require_alpha(const Rat& alpha) {
    if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("rm_trace: 0 < alpha < 1 required");
}

struct RmMemo {
    const std::string& w;
    Rat a2;  // alpha^2
    std::vector<std::vector<Rat>> val;
    std::vector<std::vector<bool>> has;

    RmMemo(const std::string& word, const Rat& alpha, int mmax)
        : w(word), a2(alpha * alpha),
          val(mmax + 1, std::vector<Rat>(word.size() + 1, Rat(0))),
          has(mmax + 1, std::vector<bool>(word.size() + 1, false)) {}

    // tau(R_m applied to the word suffix starting at i)
    Rat get(int m, int i) {
        if (has[m][i]) return val[m][i];
        Rat r;
        int len = static_cast<int>(w.size());
        if (m == 0) {
            r = Rat(1) / Rat(Int(1) << (len - i));
        } else {
            Rat a2m = rat_pow(a2, m);
            if (i == len) {
                r = Rat(m) * Rat(m) * a2m / (2 * (1 - a2m)) * get(m - 1, len);
            } else if (w[i] == 'P') {
                r = a2m / 2 * get(m, i + 1);
            } else {
                r = a2m / 2 * (Rat(m) * Rat(m) * get(m - 1, i + 1) + get(m, i + 1));
            }
        }
        val[m][i] = r;
        has[m][i] = true;
        return r;
    }
};

}  // namespace

Rat rm_trace(const PQWord& w, const Rat& alpha, int m) {
    require_alpha(alpha);
    if (m < 0) throw std::invalid_argument("rm_trace: m >= 0");
    RmMemo memo(w.letters, alpha, m);
    return memo.get(m, 0);
}

RmDirect rm_trace_direct(const PQWord& w, const Rat& alpha, int m, int N) {
    require_alpha(alpha);
    if (m < 0 || N < m) throw std::invalid_argument("rm_trace_direct: 0 <= m <= N");
    int r = w.length();
    Rat a2 = alpha * alpha;

    // per-site weight of Q_q in the trace: a^{2q}, halved for sites the word
    // does not cover; sites where the word has P kill the term
    std::vector<Rat> e(m + 1, Rat(0));
    e[0] = 1;
    Rat a2q = 1;
    for (int q = 1; q <= N; ++q) {
        a2q *= a2;
        if (q <= r && w.letters[q - 1] == 'P') continue;
        Rat x = (q > r) ? a2q / 2 : a2q;
        for (int k = std::min(m, q); k >= 1; --k) e[k] += e[k - 1] * x;
    }

    Rat mfact2 = 1;
    for (int i = 2; i <= m; ++i) mfact2 *= i;
    mfact2 *= mfact2;
    Rat norm = mfact2 / Rat(Int(1) << r);

    // omitted terms have at least one site beyond N
    Rat t = rat_pow(a2, N + 1) / (2 * (1 - a2));
    Rat om = 0;
    for (int k = 1; k <= m; ++k) om = t * (e[k - 1] + om);

    RmDirect out;
    out.value = norm * e[m];
    out.tail = norm * om;
    return out;
}

RatioProfile ratio_profile(const PQWord& w, const Rat& alpha, int m_max) {
    require_alpha(alpha);
    RatioProfile prof;
    prof.word = w;
    prof.alpha = alpha;
    PQWord empty;
    for (int m = 1; m <= m_max; ++m) {
        RatioRow row;
        row.m = m;
        row.ratio = rm_trace(w, alpha, m) / rm_trace(empty, alpha, m);
        row.root = std::exp(log_rat(row.ratio) / (2.0 * m));
        prof.rows.push_back(row);
    }
    return prof;
}

LowerBoundReport lower_bound_check(const OperatorSum& xi, const Rat& alpha, int m_max, int N,
                                   const Rat& slack) {
    require_alpha(alpha);
    if (xi.is_zero()) throw std::invalid_argument("lower_bound_check: xi = 0");
    if (xi.max_site() > N) throw std::invalid_argument("lower_bound_check: word longer than N");
    LowerBoundReport rep;
    rep.r = xi.max_site();
    Rat th = (1 - slack) * rat_pow(alpha, rep.r);
    rep.threshold = mpq_get_d(th.get_mpq_t()) / std::sqrt(2.0);

    OperatorSum A = build_A(CoefficientSpec::geometric(alpha), N);
    OperatorSum num = xi, den = OperatorSum::identity();
    rep.pass = true;
    for (int m = 1; m <= m_max; ++m) {
        num = A * num;
        den = A * den;
        LowerBoundRow row;
        row.m = m;
        Rat n2 = num.norm2_sq(), d2 = den.norm2_sq();
        if (sgn(n2) == 0 || sgn(d2) == 0) {
            row.skipped = true;  // the truncated A^m annihilated it
            rep.rows.push_back(row);
            continue;
        }
        row.ratio_sq = n2 / d2;
        row.root = std::exp(log_rat(row.ratio_sq) / (2.0 * m));
        // root >= th/sqrt2  <=>  ratio_sq * 2^m >= th^{2m}, exactly
        Rat lhs = row.ratio_sq * Rat(Int(1) << m);
        row.holds = lhs >= rat_pow(th * th, m);
        row.margin = row.root - rep.threshold;
        if (!row.holds) rep.pass = false;
        rep.rows.push_back(row);
    }
    return rep;
}

HyperinvarianceReport hyperinvariance_report(const PQWord& w, const CoefficientSpec& spec, int N,
                                             int cap) {
    if (w.length() == 0) throw std::invalid_argument("hyperinvariance: nonempty word required");
    if (w.length() >= N) throw std::invalid_argument("hyperinvariance: word length < N required");
    HyperinvarianceReport rep;
    rep.word = w.letters;
    OperatorSum p = proj_word(w.letters);

    for (int n = 1; n < N && !rep.found; ++n) {
        if (spec.coeff(n).is_zero()) continue;
        for (int m = n + 1; m <= N && !rep.found; ++m) {
            if (spec.coeff(m).is_zero()) continue;
            OperatorSum S = build_S(spec, n, m);
            InvarianceVerdict v = check_invariance(p, S);
            if (v.invariant) continue;

            DenseExact Dp = dense_exact(p, N, cap);
            DenseExact DSp = dense_exact(S * p, N, cap);
            int rp = rank_exact(Dp.a, Dp.dim(), Dp.dim());
            int rj = range_join_rank(Dp, DSp);

            rep.found = true;
            rep.n = n;
            rep.m = m;
            rep.witness_norm2 = v.witness.norm2_sq();
            rep.rank_p = rp;
            rep.rank_join = rj;
            rep.strict_growth = rj > rp;
            std::ostringstream os;
            os << "S(" << n << "," << m << ") p - p S(" << n << "," << m << ") p = "
               << v.witness.to_string();
            rep.detail = os.str();
        }
    }
    return rep;
}

}  // namespace qn
