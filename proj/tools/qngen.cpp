// qngen: command-line front end for the truncated tensor-product operator lab.
#include <CLI11.hpp>
#include <json.hpp>

#include "qn/coeffs.hpp"
#include "qn/combinatorics.hpp"
#include "qn/dense.hpp"
#include "qn/moments.hpp"
#include "qn/operators.hpp"
#include "qn/sampler.hpp"
#include "qn/state.hpp"
#include "qn/subspace.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace qn;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Caps {
    int oracle = kDefaultOracleCap;
    int alpha = kDefaultAlphaCap;
    int series = kDefaultSeriesLen;
};

int env_int(const char* name, int dflt) {
    const char* v = std::getenv(name);
    if (!v || !*v) return dflt;
    return std::atoi(v);
}

Caps load_caps() {
    Caps c;
    c.oracle = env_int("QNGEN_ORACLE_CAP", c.oracle);
    c.alpha = env_int("QNGEN_ALPHA_CAP", c.alpha);
    c.series = env_int("QNGEN_SERIES_LEN", c.series);
    return c;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string iso_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << content;
    }
    std::filesystem::rename(tmp, path);
}

struct Emitter {
    std::filesystem::path out;
    json manifest;

    Emitter(const std::string& dir, const std::string& command, int argc, char** argv) {
        out = dir;
        std::filesystem::create_directories(out);
        std::string cmdline;
        for (int i = 0; i < argc; ++i) {
            if (i) cmdline += ' ';
            cmdline += argv[i];
        }
        manifest["command"] = command;
        manifest["command_line"] = cmdline;
        manifest["version"] = kVersion;
        manifest["timestamp"] = iso_now();
        Caps c = load_caps();
        manifest["caps"] = {{"oracle_N", c.oracle}, {"alpha_p", c.alpha}, {"series_len", c.series}};
    }

    void file(const std::string& name, const std::string& content) {
        write_atomic(out / name, content);
    }
    void finish(const std::string& command) {
        file(command + ".manifest.json", manifest.dump(2) + "\n");
    }
};

CoefficientSpec parse_spec(const std::string& s) {
    if (!s.empty() && s.front() == '{') {
        json j = json::parse(s);
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "geometric")
            return CoefficientSpec::geometric(parse_rat(j.at("ratio").get<std::string>()));
        if (kind == "explicit" || kind == "list") {
            std::vector<RatC> vals;
            for (const auto& v : j.at("values")) vals.push_back(parse_ratc(v.get<std::string>()));
            return CoefficientSpec::explicit_list(std::move(vals));
        }
        throw std::invalid_argument("unknown coefficient kind in JSON: " + kind);
    }
    return CoefficientSpec::parse(s);
}

std::string shape_str(const PartitionShape& sh) {
    std::string s;
    for (size_t i = 0; i < sh.size(); ++i) s += (i ? "," : "") + std::to_string(sh[i]);
    return s;
}

// ---------------------------------------------------------------- partitions

int cmd_partitions(int p, Emitter& em) {
    Caps caps = load_caps();
    CountTable t = count_table(p, caps.alpha);

    std::string csv = "p,shape,gamma,alpha\n";
    json rows = json::array();
    for (const auto& r : t.rows) {
        csv += std::to_string(p) + ",\"" + shape_str(r.shape) + "\"," + r.gamma.get_str() + "," +
               r.alpha.get_str() + "\n";
        rows.push_back({{"shape", shape_str(r.shape)},
                        {"gamma", r.gamma.get_str()},
                        {"alpha", r.alpha.get_str()}});
    }
    std::string scsv = "p,k,s\n";
    json srows = json::array();
    for (int k = 1; k <= p; ++k) {
        scsv += std::to_string(p) + "," + std::to_string(k) + "," + t.s[k - 1].get_str() + "\n";
        srows.push_back({{"k", k}, {"s", t.s[k - 1].get_str()}});
    }
    em.manifest["p"] = p;
    em.file("partitions.csv", csv);
    em.file("partitions_s.csv", scsv);
    em.file("partitions.json", json{{"p", p}, {"rows", rows}, {"s", srows}}.dump(2) + "\n");
    std::cout << csv << scsv;
    return 0;
}

// ------------------------------------------------------------------- moments

json report_json(const MomentReport& r) {
    return {{"target", r.target},        {"route", r.route},
            {"exact", ratc_str(r.exact)}, {"value", r.value},
            {"is_exact", r.is_exact},     {"tail_bound", r.tail_bound},
            {"truncation", r.truncation}};
}

std::string report_csv_row(const MomentReport& r) {
    return r.target + "," + r.route + "," + (r.is_exact ? ratc_str(r.exact) : "") + "," +
           fmt_double(r.value) + "," + fmt_double(r.tail_bound) + "," +
           std::to_string(r.truncation) + "\n";
}

int cmd_moments(const std::string& spec_s, const std::string& op, int order, int order2, int N,
                const std::string& method, Emitter& em) {
    Caps caps = load_caps();
    CoefficientSpec spec = parse_spec(spec_s);
    em.manifest["coeffs"] = spec.to_string();
    em.manifest["N"] = N;
    em.manifest["op"] = op;
    em.manifest["order"] = order;
    em.manifest["method"] = method;

    std::string csv = "target,route,exact,value,tail_bound,truncation\n";
    json jrows = json::array();
    std::vector<MomentReport> reports;

    if (op == "mixed") {
        if (order2 < 1) throw std::invalid_argument("mixed needs --order2");
        if (N > caps.oracle) throw std::invalid_argument("N exceeds oracle cap");
        MixedMomentReport r = mixed_moment_check(spec, order, order2, N);
        json jr = {{"n", r.n}, {"m", r.m},       {"N", r.N},
                   {"lhs", ratc_str(r.lhs)},      {"rhs", ratc_str(r.rhs)},
                   {"equal", r.equal}};
        csv += "mixed(" + std::to_string(order) + "," + std::to_string(order2) + "),dense_oracle," +
               ratc_str(r.lhs) + ",,," + std::to_string(N) + "\n";
        em.file("moments.csv", csv);
        em.file("moments.json", jr.dump(2) + "\n");
        std::cout << "tau(a^" << r.n << " b^" << r.m << ") = " << ratc_str(r.lhs)
                  << "  product = " << ratc_str(r.rhs) << "  equal = " << (r.equal ? "yes" : "no")
                  << "\n";
        return r.equal ? 0 : 3;
    }

    MomentTarget tgt;
    if (op == "X") tgt = MomentTarget::X;
    else if (op == "Y") tgt = MomentTarget::Y;
    else if (op == "re") tgt = MomentTarget::Re;
    else if (op == "im") tgt = MomentTarget::Im;
    else if (op == "AstarA") tgt = MomentTarget::AstarA;
    else throw std::invalid_argument("unknown --op: " + op);

    bool all = method == "all";
    if (all || method == "combinatorial") {
        switch (tgt) {
            case MomentTarget::X: reports.push_back(moment_X(spec, order, N)); break;
            case MomentTarget::Y: reports.push_back(moment_Y(spec, order, N)); break;
            case MomentTarget::Re:
            case MomentTarget::Im: reports.push_back(moment_reim(spec, order, N)); break;
            case MomentTarget::AstarA:
                reports.push_back(moment_AstarA(spec, order, N, caps.alpha));
                break;
        }
    }
    if (all || method == "dense") {
        int dn = std::min(N, caps.oracle);
        if (!all && N > caps.oracle) throw std::invalid_argument("N exceeds oracle cap");
        if (dn <= 6)
            reports.push_back(moment_dense_exact(tgt, spec, order, dn, caps.oracle));
        else
            reports.push_back(moment_dense_cd(tgt, spec, order, dn, caps.oracle));
    }
    if ((all || method == "charfn") && tgt == MomentTarget::X) {
        if (spec.kind != CoefficientSpec::Kind::Geometric) {
            if (!all) throw std::invalid_argument("charfn route needs a geometric spec");
        } else {
            CharfnMoments cm = charfn_moments(spec.ratio, order, caps.series);
            MomentReport r;
            r.target = "X^" + std::to_string(order);
            r.route = "charfn";
            r.exact = RatC(cm.moment[order]);
            r.value = mpq_get_d(cm.moment[order].get_mpq_t());
            r.tail_bound = mpq_get_d(cm.tail[order].get_mpq_t());
            r.truncation = cm.series_N;
            reports.push_back(r);
        }
    }
    if ((all || method == "rademacher") && tgt == MomentTarget::X) {
        if (!spec.all_real()) {
            if (!all) throw std::invalid_argument("rademacher route needs a real spec");
        } else {
            reports.push_back(rademacher_moment(spec, order, std::min(N, 20)));
        }
    }
    if (reports.empty()) throw std::invalid_argument("no applicable route for this op/method");

    double lo = reports[0].value, hi = reports[0].value;
    for (const auto& r : reports) {
        csv += report_csv_row(r);
        jrows.push_back(report_json(r));
        lo = std::min(lo, r.value);
        hi = std::max(hi, r.value);
    }
    json out = {{"rows", jrows}};
    if (all) out["max_discrepancy"] = hi - lo;
    em.file("moments.csv", csv);
    em.file("moments.json", out.dump(2) + "\n");
    std::cout << csv;
    if (all) std::cout << "max discrepancy: " << fmt_double(hi - lo) << "\n";
    return 0;
}

// --------------------------------------------------------------------- sigma

int cmd_sigma(const std::string& spec_s, int kmax, int N, Emitter& em) {
    CoefficientSpec spec = parse_spec(spec_s);
    em.manifest["coeffs"] = spec.to_string();
    em.manifest["kmax"] = kmax;
    em.manifest["N"] = N;
    auto prof = decay_profile(spec, kmax, N);
    std::string csv = "k,sigma,sigma_value,root,tail_bound\n";
    for (const auto& d : prof) {
        SigmaValue sv = sigma(spec, d.k, N);
        csv += std::to_string(d.k) + "," + (sv.is_exact ? rat_str(d.sigma_k) : "") + "," +
               fmt_double(d.sigma_d) + "," + fmt_double(d.root) + "," + fmt_double(sv.tail_bound) +
               "\n";
    }
    em.file("sigma.csv", csv);
    std::cout << csv;
    return 0;
}

// --------------------------------------------------------------------- norms

int cmd_norms(const std::string& spec_s, int N, int kmax, double tol, Emitter& em) {
    Caps caps = load_caps();
    if (N > caps.oracle) throw std::invalid_argument("N exceeds oracle cap");
    CoefficientSpec spec = parse_spec(spec_s);
    em.manifest["coeffs"] = spec.to_string();
    em.manifest["N"] = N;
    em.manifest["kmax"] = kmax;
    em.manifest["tol"] = tol;

    int sigN = spec.is_finite() ? spec.explicit_length() : std::max(N, 200);
    auto prof = decay_profile(spec, kmax, sigN);
    OperatorSum A = build_A(spec, N);
    OperatorSum Ak = OperatorSum::identity();

    std::string csv = "k,norm,root,bound,ok\n";
    bool all_ok = true;
    for (int k = 1; k <= kmax; ++k) {
        Ak = Ak * A;
        NormEstimate est = op_norm(Ak, N, 1e-12, 2000);
        double bound = std::exp(std::lgamma(k + 1.0)) * prof[k - 1].sigma_d;
        double root = est.value > 0.0 ? std::pow(est.value, 1.0 / k) : 0.0;
        bool ok = est.value <= bound + tol;
        all_ok = all_ok && ok;
        csv += std::to_string(k) + "," + fmt_double(est.value) + "," + fmt_double(root) + "," +
               fmt_double(bound) + "," + (ok ? "1" : "0") + "\n";
    }
    em.file("norms.csv", csv);
    std::cout << csv;
    return all_ok ? 0 : 3;
}

// --------------------------------------------------------------------- ratio

int cmd_ratio(const std::string& word_s, const std::string& alpha_s, int mmax, Emitter& em) {
    PQWord w = PQWord::parse(word_s);
    Rat alpha = parse_rat(alpha_s);
    em.manifest["word"] = w.letters;
    em.manifest["alpha"] = rat_str(alpha);
    em.manifest["mmax"] = mmax;
    RatioProfile prof = ratio_profile(w, alpha, mmax);
    std::string csv = "m,ratio,root\n";
    for (const auto& r : prof.rows)
        csv += std::to_string(r.m) + "," + rat_str(r.ratio) + "," + fmt_double(r.root) + "\n";
    em.file("ratio.csv", csv);
    std::cout << csv;
    return 0;
}

// -------------------------------------------------------------------- verify

struct VerifyLog {
    json items = json::array();
    bool all_pass = true;
    std::string first_fail;

    void add(const std::string& name, const std::string& formula, bool pass,
             const std::string& detail) {
        items.push_back(
            {{"name", name}, {"formula", formula}, {"pass", pass}, {"detail", detail}});
        std::cout << (pass ? "pass  " : "FAIL  ") << name << (detail.empty() ? "" : "  [" + detail + "]")
                  << "\n";
        if (!pass && all_pass) {
            all_pass = false;
            first_fail = name;
        }
    }
};

void verify_algebra(const CoefficientSpec& spec, int N, VerifyLog& log) {
    OperatorSum A = build_A(spec, N);
    for (int n = 1; n < 4; ++n)
        for (int m = n + 1; m <= 4; ++m) {
            Rat r = check_commutes(build_S(spec, n, m), A);
            log.add("commutant S(" + std::to_string(n) + "," + std::to_string(m) + ")",
                    "[S(n,m), A_N] = 0", sgn(r) == 0, "residual " + rat_str(r));
        }
    for (int k = 3; k <= std::min(N, 5); ++k) {
        CheckReport rep = check_nilpotency(spec, k);
        log.add(rep.name, "A_N^N = N! prod(c_i) V^(xN), A_N^(N+1) = 0", rep.pass, rep.detail);
    }
    CheckReport gen = check_generation_identities(spec, N);
    log.add(gen.name, "A*A = q2+v, AA* = p2+v, A q2 - q2 A = sum c_n^3 V_n, p2+q2 = sum c_n^2",
            gen.pass, "residual " + rat_str(gen.residual));
    for (int n = 1; n <= 3; ++n) {
        OperatorSum p = proj_word(std::string(n, 'P'));
        bool inv_under_A = check_invariance(p, A).invariant;
        InvarianceVerdict v = check_invariance(p, build_S(spec, n, n + 1));
        log.add("P^(x" + std::to_string(n) + ") invariance",
                "invariant under A_N, not under S(n,n+1)", inv_under_A && !v.invariant,
                "witness " + v.witness.to_string());
    }
}

void verify_similarity(const CoefficientSpec& a, const CoefficientSpec& b, VerifyLog& log) {
    for (int n = 2; n <= 3; ++n) {
        CheckReport rep = check_similarity(a, b, n, n + 2);
        log.add(rep.name, "W_n A W_n^-1 = B_n + A - A_n", rep.pass,
                "residual " + rat_str(rep.residual));
    }
    CheckReport rep = check_commutator_realization(a, b, 4);
    log.add(rep.name, "[W, B] = A with W = sum (a_n/b_n) P_n", rep.pass,
            "residual " + rat_str(rep.residual));
}

void verify_subspace(const CoefficientSpec& spec, VerifyLog& log) {
    Rat alpha = spec.kind == CoefficientSpec::Kind::Geometric ? spec.ratio : Rat(1, 2);
    for (const char* ws : {"", "P", "Q", "PQ", "QQ"}) {
        PQWord w = PQWord::parse(ws);
        bool ok = true;
        for (int m = 0; m <= 6 && ok; ++m) {
            Rat rec = rm_trace(w, alpha, m);
            RmDirect dir = rm_trace_direct(w, alpha, m, 60);
            Rat diff = abs(rec - dir.value);
            ok = diff <= dir.tail;
        }
        log.add(std::string("R_m recursion vs direct sum, word \"") + ws + "\"",
                "tau(R_m w): recursion = truncated defining sum within tail", ok, "m <= 6, N = 60");
    }
    {
        bool ok = true;
        for (int m = 1; m <= 20 && ok; ++m) {
            Rat lhs = rm_trace(PQWord::parse("P"), alpha, m);
            Rat a2m = 1;
            for (int i = 0; i < m; ++i) a2m *= alpha * alpha;
            ok = lhs == a2m / 2 * rm_trace(PQWord{}, alpha, m);
        }
        log.add("P-append identity", "tau(R_m (P (x) w)) = (1/2) a^{2m} tau(R_m w)", ok, "m <= 20");
    }
    for (const char* ws : {"P", "Q", "PQ"}) {
        HyperinvarianceReport hr = hyperinvariance_report(PQWord::parse(ws), spec, 5);
        log.add(std::string("hyperinvariance witness, word \"") + ws + "\"",
                "some S(n,m) moves range(p_w): rank grows strictly",
                hr.found && hr.strict_growth,
                hr.found ? "S(" + std::to_string(hr.n) + "," + std::to_string(hr.m) + "), rank " +
                               std::to_string(hr.rank_p) + " -> " + std::to_string(hr.rank_join)
                         : "no witness found");
    }
    {
        LowerBoundReport lb = lower_bound_check(proj_word("P"), alpha, 8, 8);
        log.add("norm-ratio lower bound, xi = P-hat",
                "(||A^m xi|| / ||A^m 1||)^{1/m} >= (1/sqrt2) a^r (1 - slack)", lb.pass,
                "m <= 8, N = 8");
        OperatorSum xi = proj_word("QP") + proj_word("PQ") * RatC(1, 3);
        LowerBoundReport lb2 = lower_bound_check(xi, alpha, 6, 8);
        log.add("norm-ratio lower bound, xi = QP-hat + (1/3) PQ-hat",
                "(||A^m xi|| / ||A^m 1||)^{1/m} >= (1/sqrt2) a^r (1 - slack)", lb2.pass,
                "m <= 6, N = 8");
    }
}

void verify_moments(const CoefficientSpec& spec, VerifyLog& log) {
    Caps caps = load_caps();
    if (spec.kind == CoefficientSpec::Kind::Geometric) {
        for (int order : {2, 4}) {
            MomentReport comb = moment_X(spec, order, 400);
            CharfnMoments cm = charfn_moments(spec.ratio, order, caps.series);
            double diff = std::abs(comb.value - mpq_get_d(cm.moment[order].get_mpq_t()));
            double allowed = comb.tail_bound + mpq_get_d(cm.tail[order].get_mpq_t()) + 1e-10;
            log.add("X^" + std::to_string(order) + ": combinatorial vs charfn",
                    "series product of cos(a^n t) reproduces the partition formula",
                    diff <= allowed, "diff " + fmt_double(diff));
            MomentReport dn = moment_dense_cd(MomentTarget::X, spec, order, caps.oracle);
            double ddiff = std::abs(comb.value - dn.value);
            log.add("X^" + std::to_string(order) + ": combinatorial vs dense oracle",
                    "matrix trace at level N agrees within the geometric tail",
                    ddiff <= comb.tail_bound + dn.tail_bound + 1e-9, "diff " + fmt_double(ddiff));
        }
    }
    CoefficientSpec ex = CoefficientSpec::explicit_list({RatC(1, 2), RatC(1, 3), RatC(-1, 4)});
    for (int order : {2, 4}) {
        MomentReport comb = moment_X(ex, order, 3);
        MomentReport dn = moment_dense_exact(MomentTarget::X, ex, order, 3);
        log.add("explicit X^" + std::to_string(order) + ": exact equality",
                "combinatorial = dense trace as rationals", comb.exact == dn.exact,
                ratc_str(comb.exact));
    }
    for (int p = 1; p <= 3; ++p) {
        MomentReport comb = moment_AstarA(ex, p, 3);
        MomentReport dn = moment_dense_exact(MomentTarget::AstarA, ex, p, 3);
        log.add("explicit (A*A)^" + std::to_string(p) + ": exact equality",
                "alternating-partition formula = dense trace", comb.exact == dn.exact,
                ratc_str(comb.exact));
    }
    {
        MomentReport y = moment_dense_exact(MomentTarget::Y, ex, 4, 3);
        MomentReport x = moment_dense_exact(MomentTarget::X, ex, 4, 3);
        log.add("Y^4 = (-1)^2 X^4 (dense)", "tau(Y^{2p}) = (-1)^p tau(X^{2p})", y.exact == x.exact,
                ratc_str(y.exact));
        MomentReport y2 = moment_dense_exact(MomentTarget::Y, ex, 2, 3);
        MomentReport x2 = moment_dense_exact(MomentTarget::X, ex, 2, 3);
        log.add("Y^2 = -X^2 (dense)", "tau(Y^{2p}) = (-1)^p tau(X^{2p})", y2.exact == -x2.exact,
                ratc_str(y2.exact));
    }
    {
        MixedMomentReport mm = mixed_moment_check(ex, 2, 2, 4);
        log.add("mixed tau(a^2 b^2)", "tau(a^n b^m) = tau(a^n) tau(b^m)", mm.equal,
                ratc_str(mm.lhs));
        MomentReport re = moment_reim(ex, 2, 3);
        MomentReport red = moment_dense_exact(MomentTarget::Re, ex, 2, 3);
        log.add("re^2: scaled X-moment vs dense", "tau(a^{2p}) = (1/2)^{2p} tau(X^{2p})",
                re.exact == red.exact, ratc_str(re.exact));
    }
}

int cmd_verify(const std::string& suite, const std::string& spec_s, const std::string& spec2_s,
               int N, Emitter& em) {
    CoefficientSpec a = parse_spec(spec_s);
    CoefficientSpec b = parse_spec(spec2_s);
    em.manifest["suite"] = suite;
    em.manifest["coeffs"] = a.to_string();
    em.manifest["coeffs2"] = b.to_string();
    em.manifest["N"] = N;

    VerifyLog log;
    if (suite == "algebra" || suite == "all") verify_algebra(a, N, log);
    if (suite == "similarity" || suite == "all") verify_similarity(a, b, log);
    if (suite == "subspace" || suite == "all") verify_subspace(a, log);
    if (suite == "moments-crosscheck" || suite == "all") verify_moments(a, log);
    if (log.items.empty()) throw std::invalid_argument("unknown suite: " + suite);

    json out = {{"suite", suite}, {"pass", log.all_pass}, {"checks", log.items}};
    if (!log.all_pass) out["first_failure"] = log.first_fail;
    em.file("verify.json", out.dump(2) + "\n");
    if (!log.all_pass) {
        std::cerr << "verification failed: " << log.first_fail << "\n";
        return 3;
    }
    return 0;
}

// -------------------------------------------------------------------- sample

int cmd_sample(const std::string& alpha_s, std::uint64_t count, std::uint64_t seed, int bins,
               int N, Emitter& em) {
    Rat alpha = parse_rat(alpha_s);
    if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must lie in (0,1)");
    em.manifest["alpha"] = rat_str(alpha);
    em.manifest["count"] = count;
    em.manifest["seed"] = seed;
    em.manifest["bins"] = bins;
    em.manifest["N"] = N;

    SampleRun run = sample_series(mpq_get_d(alpha.get_mpq_t()), count, seed, N, bins);
    std::string csv = "bin_left,bin_right,count\n";
    for (size_t b = 0; b < run.bin_counts.size(); ++b)
        csv += fmt_double(run.bin_edges[b]) + "," + fmt_double(run.bin_edges[b + 1]) + "," +
               std::to_string(run.bin_counts[b]) + "\n";
    json j = {{"alpha", run.alpha},
              {"count", run.count},
              {"seed", run.seed},
              {"truncation", run.truncation},
              {"mean", run.mean},
              {"sup_cdf_uniform", run.sup_cdf_uniform},
              {"range", run.range}};
    json mom = json::array();
    for (int k = 0; k < 8; ++k) mom.push_back(run.moments[k]);
    j["raw_moments"] = mom;
    em.file("sample_hist.csv", csv);
    em.file("sample.json", j.dump(2) + "\n");
    std::cout << "count " << run.count << "  mean " << fmt_double(run.mean) << "  m2 "
              << fmt_double(run.moments[1]) << "  m4 " << fmt_double(run.moments[3])
              << "  sup-CDF " << fmt_double(run.sup_cdf_uniform) << "\n";
    return 0;
}

// ---------------------------------------------------------------------- gfun

int cmd_gfun(const std::string& spec_s, double zmax, int steps, double im, double tol,
             int series_terms, Emitter& em) {
    CoefficientSpec spec = parse_spec(spec_s);
    em.manifest["coeffs"] = spec.to_string();
    em.manifest["zmax"] = zmax;
    em.manifest["steps"] = steps;
    em.manifest["tol"] = tol;

    int sigN = spec.is_finite() ? spec.explicit_length() : 400;
    auto e = sigma_table_exact(spec, series_terms, sigN);

    std::string csv = "re,im,g_re,g_im,error_estimate,ok,series_re,series_im\n";
    bool all_ok = true;
    for (int i = 0; i <= steps; ++i) {
        double re = steps == 0 ? zmax : -zmax + 2.0 * zmax * i / steps;
        std::complex<double> z(re, im);
        GQuadParams qp;
        qp.tol = tol;
        GEvalResult g = g_eval(spec, z, qp);
        all_ok = all_ok && g.ok;
        std::complex<double> series(0.0, 0.0), zn(1.0, 0.0);
        double nfact = 1.0;
        for (int n = 0; n <= series_terms; ++n) {
            if (n > 0) {
                nfact *= n;
                zn *= z;
            }
            series += nfact * e[n].get_d() * zn;
        }
        csv += fmt_double(re) + "," + fmt_double(im) + "," + fmt_double(g.value.real()) + "," +
               fmt_double(g.value.imag()) + "," + fmt_double(g.error_estimate) + "," +
               (g.ok ? "1" : "0") + "," + fmt_double(series.real()) + "," +
               fmt_double(series.imag()) + "\n";
    }
    em.file("gfun.csv", csv);
    std::cout << csv;
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated tensor-product operator laboratory"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string out = ".";
    app.add_option("--out", out, "artifact directory")->capture_default_str();

    // partitions
    int p_p = 4;
    auto* sc_part = app.add_subcommand("partitions", "alternating-partition count table");
    sc_part->add_option("--p", p_p, "half the number of elements")->required();

    // moments
    std::string m_spec = "geometric:1/2", m_op = "X", m_method = "all";
    int m_order = 2, m_order2 = 0, m_N = 10;
    auto* sc_mom = app.add_subcommand("moments", "trace moments by several routes");
    sc_mom->add_option("--coeffs", m_spec, "coefficient spec")->capture_default_str();
    sc_mom->add_option("--op", m_op, "X | Y | re | im | AstarA | mixed")->capture_default_str();
    sc_mom->add_option("--order", m_order, "moment order")->required();
    sc_mom->add_option("--order2", m_order2, "second order (mixed)");
    sc_mom->add_option("--method", m_method, "combinatorial | dense | charfn | rademacher | all")
        ->capture_default_str();
    sc_mom->add_option("--N", m_N, "truncation level")->capture_default_str();

    // sigma
    std::string s_spec = "geometric:1/2";
    int s_kmax = 40, s_N = 200;
    auto* sc_sig = app.add_subcommand("sigma", "elementary symmetric decay profile");
    sc_sig->add_option("--coeffs", s_spec, "coefficient spec")->capture_default_str();
    sc_sig->add_option("--kmax", s_kmax, "largest k")->capture_default_str();
    sc_sig->add_option("--N", s_N, "truncation level")->capture_default_str();

    // norms
    std::string n_spec = "geometric:1/2";
    int n_N = 8, n_kmax = 8;
    double n_tol = 1e-8;
    auto* sc_norm = app.add_subcommand("norms", "power-iteration norms of A^k vs k! sigma_k");
    sc_norm->add_option("--coeffs", n_spec, "coefficient spec")->capture_default_str();
    sc_norm->add_option("--N", n_N, "truncation level")->capture_default_str();
    sc_norm->add_option("--kmax", n_kmax, "largest power")->capture_default_str();
    sc_norm->add_option("--tol", n_tol, "bound slack")->capture_default_str();

    // ratio
    std::string r_word = "P", r_alpha = "1/2";
    int r_mmax = 20;
    auto* sc_ratio = app.add_subcommand("ratio", "norm-ratio profile tau(R_m w)/tau(R_m)");
    sc_ratio->add_option("--word", r_word, "word over P,Q")->capture_default_str();
    sc_ratio->add_option("--alpha", r_alpha, "geometric ratio")->capture_default_str();
    sc_ratio->add_option("--mmax", r_mmax, "largest m")->capture_default_str();

    // verify
    std::string v_suite = "all", v_spec = "geometric:1/2", v_spec2 = "geometric:1/3";
    int v_N = 6;
    auto* sc_ver = app.add_subcommand("verify", "exact identity suites");
    sc_ver->add_option("--suite", v_suite,
                       "algebra | subspace | similarity | moments-crosscheck | all")
        ->capture_default_str();
    sc_ver->add_option("--coeffs", v_spec, "coefficient spec")->capture_default_str();
    sc_ver->add_option("--coeffs2", v_spec2, "second spec (similarity)")->capture_default_str();
    sc_ver->add_option("--N", v_N, "truncation level")->capture_default_str();

    // sample
    std::string sa_alpha = "1/2";
    std::uint64_t sa_count = 1000000, sa_seed = 1;
    int sa_bins = 64, sa_N = 40;
    auto* sc_sam = app.add_subcommand("sample", "Monte Carlo draws of the random series");
    sc_sam->add_option("--alpha", sa_alpha, "geometric ratio")->capture_default_str();
    sc_sam->add_option("--count", sa_count, "number of samples")->capture_default_str();
    sc_sam->add_option("--seed", sa_seed, "seed")->capture_default_str();
    sc_sam->add_option("--bins", sa_bins, "histogram bins")->capture_default_str();
    sc_sam->add_option("--N", sa_N, "series truncation")->capture_default_str();

    // gfun
    std::string g_spec = "geometric:1/2";
    double g_zmax = 2.0, g_im = 0.0, g_tol = 1e-10;
    int g_steps = 8, g_terms = 20;
    auto* sc_g = app.add_subcommand("gfun", "g(z) = int_0^inf f(tz) e^-t dt table");
    sc_g->add_option("--coeffs", g_spec, "coefficient spec")->capture_default_str();
    sc_g->add_option("--zmax", g_zmax, "real-axis half range")->capture_default_str();
    sc_g->add_option("--steps", g_steps, "grid steps")->capture_default_str();
    sc_g->add_option("--im", g_im, "imaginary part of z")->capture_default_str();
    sc_g->add_option("--tol", g_tol, "quadrature tolerance")->capture_default_str();
    sc_g->add_option("--series-terms", g_terms, "partial-sum comparison terms")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string name = app.get_subcommands().front()->get_name();
        Emitter em(out, name, argc, argv);
        int rc = 2;
        if (sc_part->parsed()) rc = cmd_partitions(p_p, em);
        else if (sc_mom->parsed())
            rc = cmd_moments(m_spec, m_op, m_order, m_order2, m_N, m_method, em);
        else if (sc_sig->parsed()) rc = cmd_sigma(s_spec, s_kmax, s_N, em);
        else if (sc_norm->parsed()) rc = cmd_norms(n_spec, n_N, n_kmax, n_tol, em);
        else if (sc_ratio->parsed()) rc = cmd_ratio(r_word, r_alpha, r_mmax, em);
        else if (sc_ver->parsed()) rc = cmd_verify(v_suite, v_spec, v_spec2, v_N, em);
        else if (sc_sam->parsed()) rc = cmd_sample(sa_alpha, sa_count, sa_seed, sa_bins, sa_N, em);
        else if (sc_g->parsed()) rc = cmd_gfun(g_spec, g_zmax, g_steps, g_im, g_tol, g_terms, em);
        em.finish(name);
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
