#include "qn/moments.hpp"

#include "qn/operators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qn {

std::string moment_target_name(MomentTarget t) {
    switch (t) {
        case MomentTarget::X: return "X";
        case MomentTarget::Y: return "Y";
        case MomentTarget::Re: return "re";
        case MomentTarget::Im: return "im";
        case MomentTarget::AstarA: return "AstarA";
    }
    return "?";
}

ExactWithTail power_sum_abs2(const CoefficientSpec& spec, int m, int N) {
    if (m < 1 || N < 0) throw std::invalid_argument("power_sum_abs2: m >= 1, N >= 0");
    ExactWithTail r;
    if (spec.kind == CoefficientSpec::Kind::Geometric) {
        // x_i = alpha^{2i}, so P_m truncates a geometric series in alpha^{2m}
        Rat beta;
        mpz_pow_ui(beta.get_num_mpz_t(), spec.ratio.get_num().get_mpz_t(), 2 * m);
        mpz_pow_ui(beta.get_den_mpz_t(), spec.ratio.get_den().get_mpz_t(), 2 * m);
        beta.canonicalize();
        Rat bN;
        mpz_pow_ui(bN.get_num_mpz_t(), beta.get_num().get_mpz_t(), N);
        mpz_pow_ui(bN.get_den_mpz_t(), beta.get_den().get_mpz_t(), N);
        bN.canonicalize();
        r.value = beta * (1 - bN) / (1 - beta);
        r.tail = beta * bN / (1 - beta);
        return r;
    }
    int len = std::min(N, spec.explicit_length());
    for (int i = 1; i <= len; ++i) {
        Rat x = spec.coeff(i).abs2();
        Rat xm = 1;
        for (int j = 0; j < m; ++j) xm *= x;
        r.value += xm;
    }
    return r;
}

namespace {

// augmented monomial sum over distinct indices, by the merge recursion:
// m~(l_1..l_k) = m~(l_1..l_{k-1}) P_{l_k} - sum_j m~(.., l_j + l_k, ..)
Rat aug_monomial(std::vector<int> lam, std::map<std::vector<int>, Rat>& memo,
                 const std::function<Rat(int)>& P) {
    if (lam.empty()) return Rat(1);
    std::sort(lam.begin(), lam.end());
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;

    int last = lam.back();
    std::vector<int> rest(lam.begin(), lam.end() - 1);
    Rat r = aug_monomial(rest, memo, P) * P(last);
    for (size_t j = 0; j < rest.size(); ++j) {
        std::vector<int> merged = rest;
        merged[j] += last;
        r -= aug_monomial(merged, memo, P);
    }
    memo.emplace(std::move(lam), r);
    return r;
}

}  // namespace

ExactWithTail distinct_monomial_sum(const PartitionShape& shape, const CoefficientSpec& spec,
                                    int N) {
    if (shape.empty()) throw std::invalid_argument("distinct_monomial_sum: empty shape");
    int maxm = 0;
    for (int n : shape) maxm += n;
    std::vector<ExactWithTail> ps(maxm + 1);
    for (int m = 1; m <= maxm; ++m) ps[m] = power_sum_abs2(spec, m, N);

    std::map<std::vector<int>, Rat> memo;
    ExactWithTail out;
    out.value = aug_monomial(shape, memo, [&](int m) { return ps[m].value; });

    // tuples with some index beyond N are covered by: for each slot j, the
    // full power-sum product with slot j replaced by its tail
    for (size_t j = 0; j < shape.size(); ++j) {
        Rat term = ps[shape[j]].tail;
        if (sgn(term) == 0) continue;
        for (size_t i = 0; i < shape.size(); ++i)
            if (i != j) term *= ps[shape[i]].value + ps[shape[i]].tail;
        out.tail += term;
    }
    return out;
}

namespace {

Rat bruteforce_rec(const PartitionShape& shape, const CoefficientSpec& spec, int N, size_t slot,
                   uint32_t used) {
    if (slot == shape.size()) return Rat(1);
    Rat acc = 0;
    for (int i = 1; i <= N; ++i) {
        if (used & (1u << i)) continue;
        Rat x = spec.coeff(i).abs2();
        Rat xm = 1;
        for (int j = 0; j < shape[slot]; ++j) xm *= x;
        if (sgn(xm) == 0) continue;
        acc += xm * bruteforce_rec(shape, spec, N, slot + 1, used | (1u << i));
    }
    return acc;
}

}  // namespace

Rat distinct_monomial_bruteforce(const PartitionShape& shape, const CoefficientSpec& spec, int N) {
    if (N > 24) throw std::invalid_argument("distinct_monomial_bruteforce: N too large");
    return bruteforce_rec(shape, spec, N, 0, 0);
}

namespace {

MomentReport combinatorial_report(const std::string& target, int N) {
    MomentReport rep;
    rep.target = target;
    rep.route = "combinatorial";
    rep.truncation = N;
    return rep;
}

std::string power_name(const std::string& base, int order) {
    return base + "^" + std::to_string(order);
}

void finish_exact(MomentReport& rep, const Rat& v, const Rat& tail) {
    rep.exact = RatC(v);
    rep.value = mpq_get_d(v.get_mpq_t());
    rep.tail_bound = mpq_get_d(tail.get_mpq_t());
    rep.is_exact = true;
}

}  // namespace

MomentReport moment_X(const CoefficientSpec& spec, int order, int N) {
    if (order < 1) throw std::invalid_argument("moment_X: order >= 1");
    MomentReport rep = combinatorial_report(power_name("X", order), N);
    if (order % 2 == 1) {
        finish_exact(rep, Rat(0), Rat(0));
        return rep;
    }
    int p = order / 2;
    Rat v = 0, tail = 0;
    for (const auto& sh : shapes(p)) {
        Int g = gamma_count(p, sh);
        ExactWithTail s = distinct_monomial_sum(sh, spec, N);
        v += Rat(g) * s.value;
        tail += Rat(g) * s.tail;
    }
    finish_exact(rep, v, tail);
    return rep;
}

MomentReport moment_Y(const CoefficientSpec& spec, int order, int N) {
    MomentReport rep = moment_X(spec, order, N);
    rep.target = power_name("Y", order);
    if (order % 2 == 0 && (order / 2) % 2 == 1) rep.exact = RatC(-rep.exact.re);
    rep.value = mpq_get_d(rep.exact.re.get_mpq_t());
    return rep;
}

MomentReport moment_reim(const CoefficientSpec& spec, int order, int N) {
    MomentReport rep = moment_X(spec, order, N);
    rep.target = power_name("re", order);
    Rat scale = 1;
    for (int i = 0; i < order; ++i) scale /= 2;
    finish_exact(rep, rep.exact.re * scale, Rat(rep.tail_bound) * scale);
    return rep;
}

MomentReport moment_AstarA(const CoefficientSpec& spec, int p, int N, int cap) {
    if (p < 1) throw std::invalid_argument("moment_AstarA: p >= 1");
    MomentReport rep = combinatorial_report("(A*A)^" + std::to_string(p), N);
    Rat v = 0, tail = 0;
    for (const auto& sh : shapes(p)) {
        Int a = alpha_count(p, sh, cap);
        if (a == 0) continue;
        Rat w{Rat(a)};
        for (size_t i = 0; i < sh.size(); ++i) w /= 2;
        ExactWithTail s = distinct_monomial_sum(sh, spec, N);
        v += w * s.value;
        tail += w * s.tail;
    }
    finish_exact(rep, v, tail);
    return rep;
}

OperatorSum target_operator(MomentTarget t, const CoefficientSpec& spec, int N) {
    switch (t) {
        case MomentTarget::X: return build_X(spec, N);
        case MomentTarget::Y: return build_Y(spec, N);
        case MomentTarget::Re: {
            OperatorSum A = build_A(spec, N);
            return (A + A.adjoint()) * RatC(Rat(1, 2));
        }
        case MomentTarget::Im: {
            OperatorSum A = build_A(spec, N);
            return (A - A.adjoint()) * RatC(Rat(0), Rat(-1, 2));
        }
        case MomentTarget::AstarA: {
            OperatorSum A = build_A(spec, N);
            return A.adjoint() * A;
        }
    }
    throw std::invalid_argument("target_operator: bad target");
}

namespace {

Rat dense_tail_bound(const CoefficientSpec& spec, int order, int N) {
    // |tau(M^p) - tau(M_full^p)| <= p * s1^{p-1} * tail, s1 >= ||M||
    Rat t = spec.tail_l1(N);
    if (sgn(t) == 0) return Rat(0);
    Rat s1 = spec.tail_l1(0);
    Rat b = order;
    for (int i = 0; i < order - 1; ++i) b *= s1;
    return b * t;
}

std::string dense_target_name(MomentTarget t, int order) {
    if (t == MomentTarget::AstarA) return "(A*A)^" + std::to_string(order);
    return moment_target_name(t) + "^" + std::to_string(order);
}

}  // namespace

MomentReport moment_dense_exact(MomentTarget t, const CoefficientSpec& spec, int order, int N,
                                int cap) {
    if (order < 1) throw std::invalid_argument("moment_dense_exact: order >= 1");
    MomentReport rep;
    rep.target = dense_target_name(t, order);
    rep.route = "dense_oracle";
    rep.truncation = N;
    DenseExact M = dense_exact(target_operator(t, spec, N), N, cap);
    rep.exact = dense_trace_power(M, order);
    rep.value = mpq_get_d(rep.exact.re.get_mpq_t());
    int pw = (t == MomentTarget::AstarA) ? 2 * order : order;
    rep.tail_bound = mpq_get_d(dense_tail_bound(spec, pw, N).get_mpq_t());
    rep.is_exact = true;
    return rep;
}

MomentReport moment_dense_cd(MomentTarget t, const CoefficientSpec& spec, int order, int N,
                             int cap) {
    if (order < 1) throw std::invalid_argument("moment_dense_cd: order >= 1");
    MomentReport rep;
    rep.target = dense_target_name(t, order);
    rep.route = "dense_oracle_fp";
    rep.truncation = N;
    DenseCd M = dense_cd(target_operator(t, spec, N), N, cap);
    rep.value = dense_trace_power(M, order).real();
    rep.is_exact = false;
    int pw = (t == MomentTarget::AstarA) ? 2 * order : order;
    rep.tail_bound = mpq_get_d(dense_tail_bound(spec, pw, N).get_mpq_t());
    return rep;
}

CharfnMoments charfn_moments(const Rat& alpha, int max_order, int series_N) {
    if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("charfn_moments: 0 < alpha < 1");
    if (max_order < 0 || series_N < 1) throw std::invalid_argument("charfn_moments: bad sizes");
    CharfnMoments out;
    out.series_N = series_N;

    // phi(t) = prod_{n<=series_N} cos(alpha^n t), coefficients up to t^max_order
    std::vector<Rat> coef(max_order + 1, Rat(0));
    coef[0] = 1;
    Rat an = 1;  // alpha^n
    for (int n = 1; n <= series_N; ++n) {
        an *= alpha;
        Rat a2 = an * an;
        std::vector<Rat> next(max_order + 1, Rat(0));
        Rat a2j = 1;  // alpha^{2jn}
        Int fact = 1;
        for (int j = 0; 2 * j <= max_order; ++j) {
            if (j > 0) {
                a2j *= a2;
                fact *= (2 * j - 1) * (2 * j);
            }
            Rat b = a2j / Rat(fact);
            if (j % 2 == 1) b = -b;
            for (int d = 0; d + 2 * j <= max_order; ++d)
                if (sgn(coef[d]) != 0) next[d + 2 * j] += coef[d] * b;
        }
        coef.swap(next);
    }

    // remainder variable T = sum_{n>series_N} eps_n alpha^n
    Rat tail_amp = 1;
    for (int i = 0; i <= series_N; ++i) tail_amp *= alpha;
    tail_amp /= (1 - alpha);
    Rat s1 = alpha / (1 - alpha);

    out.moment.assign(max_order + 1, Rat(0));
    out.tail.assign(max_order + 1, Rat(0));
    Int kfact = 1;
    for (int k = 0; k <= max_order; ++k) {
        if (k > 0) kfact *= k;
        if (k % 2 == 0) {
            Rat m = Rat(kfact) * coef[k];
            if ((k / 2) % 2 == 1) m = -m;  // (1/i)^k
            out.moment[k] = m;
            // |x^k - y^k| <= k s1^{k-1} |x - y| with |x|,|y| <= s1
            Rat b = k;
            for (int i = 0; i < k - 1; ++i) b *= s1;
            out.tail[k] = b * tail_amp;
        }
    }
    return out;
}

MomentReport rademacher_moment(const CoefficientSpec& spec, int order, int depth) {
    if (!spec.all_real()) throw std::invalid_argument("rademacher_moment: real spec required");
    if (order < 1 || depth < 1 || depth > 24)
        throw std::invalid_argument("rademacher_moment: order >= 1, 1 <= depth <= 24");
    MomentReport rep;
    rep.target = power_name("X", order);
    rep.route = "rademacher_exact";
    rep.truncation = depth;

    std::vector<Rat> c(depth + 1);
    for (int k = 1; k <= depth; ++k) c[k] = spec.coeff(k).re;

    // f is constant on each depth-level dyadic cell of [-1,1]; the sign of
    // f_k on cell j is bit (depth-k) of j
    std::size_t cells = std::size_t(1) << depth;
    Rat total = 0;
    for (std::size_t j = 0; j < cells; ++j) {
        Rat f = 0;
        for (int k = 1; k <= depth; ++k) {
            if ((j >> (depth - k)) & 1)
                f += c[k];
            else
                f -= c[k];
        }
        Rat fp = 1;
        for (int i = 0; i < order; ++i) fp *= f;
        total += fp;
    }
    total /= Rat(Int(1) << depth);
    finish_exact(rep, total, dense_tail_bound(spec, order, depth));
    return rep;
}

MixedMomentReport mixed_moment_check(const CoefficientSpec& spec, int n, int m, int N, int cap) {
    if (n < 1 || m < 1) throw std::invalid_argument("mixed_moment_check: n, m >= 1");
    MixedMomentReport rep;
    rep.n = n;
    rep.m = m;
    rep.N = N;
    DenseExact Da = dense_exact(target_operator(MomentTarget::Re, spec, N), N, cap);
    DenseExact Db = dense_exact(target_operator(MomentTarget::Im, spec, N), N, cap);
    DenseExact An = Da;
    for (int i = 1; i < n; ++i) An = dense_mul(An, Da);
    DenseExact Bm = Db;
    for (int i = 1; i < m; ++i) Bm = dense_mul(Bm, Db);
    rep.lhs = dense_trace(dense_mul(An, Bm));
    rep.rhs = dense_trace(An) * dense_trace(Bm);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace qn
