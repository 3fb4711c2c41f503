#include "qn/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qn {

double f_eval(const CoefficientSpec& spec, double x, int N) {
    if (!spec.all_real()) throw std::invalid_argument("f_eval: real spec required");
    if (x < -1.0 || x > 1.0) throw std::invalid_argument("f_eval: x in [-1,1]");
    if (N < 1 || N > 52) throw std::invalid_argument("f_eval: 1 <= N <= 52");
    double u = (x + 1.0) / 2.0;
    double acc = 0.0;
    double scale = 1.0;
    for (int n = 1; n <= N; ++n) {
        scale *= 2.0;
        double t = u * scale;
        double j = std::floor(t);
        if (j == t) j -= 1.0;  // left-limit convention at dyadic breakpoints
        if (j < 0.0) j = 0.0;
        int bit = static_cast<int>(std::fmod(j, 2.0));
        double c = mpq_get_d(spec.coeff(n).re.get_mpq_t());
        acc += bit ? c : -c;
    }
    return acc;
}

std::uint64_t sample_stream_word(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + index * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

struct Kahan {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

}  // namespace

SampleRun sample_series(double alpha, std::uint64_t count, std::uint64_t seed, int N, int bins) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("sample_series: 0 < alpha < 1");
    if (count < 1 || N < 1 || bins < 1) throw std::invalid_argument("sample_series: bad sizes");

    SampleRun run;
    run.alpha = alpha;
    run.count = count;
    run.seed = seed;
    run.truncation = N;
    run.range = alpha * (1.0 - std::pow(alpha, N)) / (1.0 - alpha);

    run.bin_edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b)
        run.bin_edges[b] = -run.range + 2.0 * run.range * b / bins;
    run.bin_counts.assign(bins, 0);

    const std::uint64_t blocks = (static_cast<std::uint64_t>(N) + 63) / 64;
    Kahan msum[8];
    std::vector<double> samples(count);

    for (std::uint64_t i = 0; i < count; ++i) {
        double v = 0.0;
        double an = 1.0;
        std::uint64_t word = 0;
        for (int n = 1; n <= N; ++n) {
            int b = (n - 1) % 64;
            if (b == 0) word = sample_stream_word(seed, i * blocks + (n - 1) / 64);
            an *= alpha;
            v += ((word >> b) & 1) ? an : -an;
        }
        samples[i] = v;

        double p = 1.0;
        for (int k = 0; k < 8; ++k) {
            p *= v;
            msum[k].add(p);
        }
        int bin = static_cast<int>((v + run.range) / (2.0 * run.range) * bins);
        bin = std::clamp(bin, 0, bins - 1);
        ++run.bin_counts[bin];
    }

    for (int k = 0; k < 8; ++k) run.moments[k] = msum[k].s / double(count);
    run.mean = run.moments[0];

    // Kolmogorov-Smirnov distance to the uniform law on [-1,1]
    std::sort(samples.begin(), samples.end());
    double d = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) {
        double F = std::clamp((samples[i] + 1.0) / 2.0, 0.0, 1.0);
        d = std::max(d, F - double(i) / double(count));
        d = std::max(d, double(i + 1) / double(count) - F);
    }
    run.sup_cdf_uniform = d;
    return run;
}

}  // namespace qn
