#pragma once

#include "qn/mat2.hpp"

#include <map>
#include <string>
#include <vector>

namespace qn {

/// A tensor word: one 2x2 site matrix per tensor factor, site 1 leftmost.
/// Sites beyond the stored sequence carry the identity. Stored sites are
/// normalized (leading entry 1) and trailing identities are trimmed, so the
/// word is a canonical key; the extracted scalars live in the term weight.
struct TensorWord {
    std::vector<Mat2> sites;

    int length() const { return static_cast<int>(sites.size()); }

    friend bool operator<(const TensorWord& a, const TensorWord& b) { return a.sites < b.sites; }
    friend bool operator==(const TensorWord& a, const TensorWord& b) { return a.sites == b.sites; }
};

/// Normalized trace of a word: product over sites of tr(M_i)/2, exact.
RatC word_trace(const TensorWord& w);

/// Finite weighted sum of tensor words; the exact representation of every
/// operator in this project. Zero-weight terms are never stored.
class OperatorSum {
public:
    std::map<TensorWord, RatC> terms;

    OperatorSum() = default;

    static OperatorSum zero() { return {}; }
    static OperatorSum identity() { return scalar(RatC(1)); }
    static OperatorSum scalar(const RatC& c);
    /// A single letter at the given 1-based site.
    static OperatorSum letter(SiteLetter l, int site);
    /// An explicit word of letters starting at site 1.
    static OperatorSum word(const std::vector<SiteLetter>& ls);

    bool is_zero() const { return terms.empty(); }
    size_t term_count() const { return terms.size(); }

    /// Longest word in the sum (0 for scalars).
    int max_site() const;

    /// Adds weight*w, normalizing sites and dropping the term if annihilated.
    void add_term(std::vector<Mat2> sites, RatC weight);

    OperatorSum operator+(const OperatorSum& o) const;
    OperatorSum operator-(const OperatorSum& o) const;
    OperatorSum operator*(const OperatorSum& o) const;
    OperatorSum operator*(const RatC& c) const;
    OperatorSum adjoint() const;
    OperatorSum pow(int k) const;

    RatC trace() const;

    /// tau(x* x), exact; zero iff the sum is empty.
    Rat norm2_sq() const;

    std::string to_string() const;
};

OperatorSum commutator(const OperatorSum& x, const OperatorSum& y);

}  // namespace qn
