#include "qn/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace qn {

Int factorial_int(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

namespace {

void shapes_rec(int remaining, int maxpart, PartitionShape& cur,
                std::vector<PartitionShape>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, maxpart); part >= 1; --part) {
        cur.push_back(part);
        shapes_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

void validate_shape(int p, const PartitionShape& shape) {
    if (shape.empty()) throw std::invalid_argument("shape: empty");
    int sum = 0;
    for (size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] < 1) throw std::invalid_argument("shape: parts must be positive");
        if (i > 0 && shape[i] > shape[i - 1])
            throw std::invalid_argument("shape: parts must be nonincreasing");
        sum += shape[i];
    }
    if (sum != p) throw std::invalid_argument("shape: parts do not sum to p");
}

}  // namespace

std::vector<PartitionShape> shapes(int p) {
    if (p < 1) throw std::invalid_argument("shapes: p >= 1 required");
    std::vector<PartitionShape> out;
    PartitionShape cur;
    shapes_rec(p, p, cur, out);
    return out;
}

Int gamma_count(int p, const PartitionShape& shape) {
    validate_shape(p, shape);
    Int g = factorial_int(2 * p);
    for (int n : shape) g /= factorial_int(2 * n);
    int run = 1;
    for (size_t i = 1; i <= shape.size(); ++i) {
        if (i < shape.size() && shape[i] == shape[i - 1]) {
            ++run;
        } else {
            g /= factorial_int(run);
            run = 1;
        }
    }
    return g;
}

Int gamma_recursive(int p, const PartitionShape& shape) {
    if (shape.empty()) {
        if (p != 0) throw std::invalid_argument("gamma_recursive: leftover weight");
        return 1;
    }
    validate_shape(p, shape);
    int n1 = shape[0];
    int r = 0;
    while (r < static_cast<int>(shape.size()) && shape[r] == n1) ++r;
    Int g = 1;
    int rem = 2 * p;
    for (int j = 0; j < r; ++j) {
        g *= binomial(rem, 2 * n1);
        rem -= 2 * n1;
    }
    g /= factorial_int(r);
    PartitionShape rest(shape.begin() + r, shape.end());
    return g * gamma_recursive(p - r * n1, rest);
}

namespace {

// DFS over set partitions with a prescribed block-size multiset. Blocks are
// anchored at their smallest element, so unlabeled blocks are counted once.
Int gamma_dfs(uint32_t free_mask, int total, std::map<int, int>& sizes);

Int gamma_extend(uint32_t free_mask, int total, int last, int need, std::map<int, int>& sizes) {
    if (need == 0) return gamma_dfs(free_mask, total, sizes);
    Int acc = 0;
    for (int q = last + 1; q < total; ++q) {
        if (!(free_mask & (1u << q))) continue;
        acc += gamma_extend(free_mask & ~(1u << q), total, q, need - 1, sizes);
    }
    return acc;
}

Int gamma_dfs(uint32_t free_mask, int total, std::map<int, int>& sizes) {
    if (free_mask == 0) return 1;
    int f = __builtin_ctz(free_mask);
    Int acc = 0;
    for (auto& [sz, cnt] : sizes) {
        if (cnt == 0) continue;
        --cnt;
        acc += gamma_extend(free_mask & ~(1u << f), total, f, sz - 1, sizes);
        ++cnt;
    }
    return acc;
}

}  // namespace

Int gamma_bruteforce(int p, const PartitionShape& shape) {
    validate_shape(p, shape);
    if (2 * p > 16) throw std::invalid_argument("gamma_bruteforce: p too large");
    std::map<int, int> sizes;
    for (int n : shape) ++sizes[2 * n];
    uint32_t all = (2 * p == 32) ? ~0u : ((1u << (2 * p)) - 1);
    return gamma_dfs(all, 2 * p, sizes);
}

namespace {

void combos(int lo, int hi_incl, int step, int need, std::vector<int>& cur,
            const std::function<void(const std::vector<int>&)>& fn) {
    if (need == 0) {
        fn(cur);
        return;
    }
    for (int r = lo; r <= hi_incl; r += step) {
        cur.push_back(r);
        combos(r + step, hi_incl, step, need - 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

Int beta_count(int p, int n) {
    if (n < 1 || n > p) throw std::invalid_argument("beta: 1 <= n <= p required");
    // r_i range over the odd (red) positions 1,3,...,2p-1
    Int total = 0;
    std::vector<int> cur;
    combos(1, 2 * p - 1, 2, n, cur, [&](const std::vector<int>& r) {
        Int gaps = 1;
        for (size_t i = 1; i < r.size(); ++i) gaps *= (r[i] - r[i - 1]);
        total += gaps * (2 * p + 1 - r.back());  // block starts with red
        total += gaps * (r.front() - 1);         // block starts with white
    });
    // each of the n gap factors is even, so the division is exact
    Int twoN = 1;
    twoN <<= n;
    Int out;
    mpz_divexact(out.get_mpz_t(), total.get_mpz_t(), twoN.get_mpz_t());
    return out;
}

Int beta_bruteforce(int p, int n) {
    if (n < 1 || n > p) throw std::invalid_argument("beta: 1 <= n <= p required");
    Int count = 0;
    std::vector<int> cur;
    combos(1, 2 * p, 1, 2 * n, cur, [&](const std::vector<int>& pos) {
        for (size_t i = 1; i < pos.size(); ++i)
            if ((pos[i] & 1) == (pos[i - 1] & 1)) return;  // colors must alternate
        count += 1;
    });
    return count;
}

namespace {

Int alpha_dfs(uint32_t free_mask, int total, std::map<int, int>& sizes);

Int alpha_extend(uint32_t free_mask, int total, int last, int need, std::map<int, int>& sizes) {
    if (need == 0) return alpha_dfs(free_mask, total, sizes);
    Int acc = 0;
    for (int q = last + 1; q < total; ++q) {
        if (!(free_mask & (1u << q))) continue;
        if ((q & 1) == (last & 1)) continue;  // alternating colors within the block
        acc += alpha_extend(free_mask & ~(1u << q), total, q, need - 1, sizes);
    }
    return acc;
}

Int alpha_dfs(uint32_t free_mask, int total, std::map<int, int>& sizes) {
    if (free_mask == 0) return 1;
    int f = __builtin_ctz(free_mask);
    Int acc = 0;
    for (auto& [sz, cnt] : sizes) {
        if (cnt == 0) continue;
        --cnt;
        acc += alpha_extend(free_mask & ~(1u << f), total, f, sz - 1, sizes);
        ++cnt;
    }
    return acc;
}

}  // namespace

Int alpha_count(int p, const PartitionShape& shape, int cap) {
    validate_shape(p, shape);
    if (p > cap)
        throw std::invalid_argument("alpha: p=" + std::to_string(p) + " exceeds cap " +
                                    std::to_string(cap) + " (" + std::to_string(2 * p) +
                                    " bicolored elements)");
    // positions 0..2p-1; even index = red (odd 1-based position)
    std::map<int, int> sizes;
    for (int n : shape) ++sizes[2 * n];
    uint32_t all = (1u << (2 * p)) - 1;
    return alpha_dfs(all, 2 * p, sizes);
}

Int s_sum(int p, int k, int cap) {
    if (k < 1 || k > p) throw std::invalid_argument("s_sum: 1 <= k <= p required");
    Int s = 0;
    for (const auto& sh : shapes(p))
        if (static_cast<int>(sh.size()) == k) s += alpha_count(p, sh, cap);
    return s;
}

CountTable count_table(int p, int cap) {
    CountTable t;
    t.p = p;
    t.s.assign(p, Int(0));
    for (const auto& sh : shapes(p)) {
        CountRow row;
        row.shape = sh;
        row.gamma = gamma_count(p, sh);
        row.alpha = alpha_count(p, sh, cap);
        t.s[sh.size() - 1] += row.alpha;
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace qn
