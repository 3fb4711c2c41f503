#pragma once

#include "qn/rational.hpp"

#include <vector>

namespace qn {

/// Nonincreasing positive parts summing to p; the index set of every
/// moment formula.
using PartitionShape = std::vector<int>;

inline constexpr int kDefaultAlphaCap = 8;

/// All integer partitions of p, largest part first, in the standard
/// descending generation order: (p), ..., (1,...,1).
std::vector<PartitionShape> shapes(int p);

/// Number of set partitions of {1..2p} into blocks of sizes 2n_1,...,2n_k:
/// (2p)! / (prod (2n_i)! * prod mult_j!), exact.
Int gamma_count(int p, const PartitionShape& shape);

/// Same number by the recursion gamma(p; n1,...) =
/// (1/r!) C(2p,2n1) ... C(2p-2(r-1)n1, 2n1) gamma(p - r n1; rest).
Int gamma_recursive(int p, const PartitionShape& shape);

/// Brute-force set-partition enumeration (test oracle; p <= ~6).
Int gamma_bruteforce(int p, const PartitionShape& shape);

/// Number of alternating color-balanced blocks of size 2n inside 2p
/// linearly ordered bicolored elements (reds at odd positions), by the
/// closed double sum over the odd red positions.
Int beta_count(int p, int n);

/// Same number by direct subset enumeration.
Int beta_bruteforce(int p, int n);

/// Number of partitions of the 2p bicolored elements into unlabeled
/// alternating color-balanced blocks of sizes 2n_1,...,2n_k. Backtracking
/// enumeration; throws std::invalid_argument beyond the cap.
Int alpha_count(int p, const PartitionShape& shape, int cap = kDefaultAlphaCap);

/// s_p(k) = sum of alpha over all shapes of p with exactly k parts.
Int s_sum(int p, int k, int cap = kDefaultAlphaCap);

struct CountRow {
    PartitionShape shape;
    Int gamma;
    Int alpha;
};

struct CountTable {
    int p = 0;
    std::vector<CountRow> rows;
    std::vector<Int> s;  // s[k-1] = s_p(k)
};

CountTable count_table(int p, int cap = kDefaultAlphaCap);

Int binomial(int n, int k);
Int factorial_int(int n);

}  // namespace qn
