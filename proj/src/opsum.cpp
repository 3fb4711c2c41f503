#include "qn/opsum.hpp"

#include <sstream>

namespace qn {

Mat2 letter_matrix(SiteLetter l) {
    Mat2 m;
    auto set = [&](long a00, long a01, long a10, long a11) {
        m.e[0] = RatC(a00); m.e[1] = RatC(a01); m.e[2] = RatC(a10); m.e[3] = RatC(a11);
    };
    switch (l) {
        case SiteLetter::I: set(1, 0, 0, 1); break;
        case SiteLetter::P: set(1, 0, 0, 0); break;
        case SiteLetter::Q: set(0, 0, 0, 1); break;
        case SiteLetter::V: set(0, 1, 0, 0); break;
        case SiteLetter::Vstar: set(0, 0, 1, 0); break;
        case SiteLetter::R: set(0, 1, 1, 0); break;
        case SiteLetter::T: set(0, 1, -1, 0); break;
    }
    return m;
}

std::string mat2_name(const Mat2& m) {
    static const std::pair<SiteLetter, const char*> names[] = {
        {SiteLetter::I, "I"}, {SiteLetter::P, "P"}, {SiteLetter::Q, "Q"},
        {SiteLetter::V, "V"}, {SiteLetter::Vstar, "V*"}, {SiteLetter::R, "R"},
        {SiteLetter::T, "T"},
    };
    for (auto& [l, n] : names)
        if (m == letter_matrix(l)) return n;
    std::ostringstream os;
    os << "[" << ratc_str(m.e[0]) << "," << ratc_str(m.e[1]) << ";"
       << ratc_str(m.e[2]) << "," << ratc_str(m.e[3]) << "]";
    return os.str();
}

RatC word_trace(const TensorWord& w) {
    RatC t(1);
    for (const auto& m : w.sites) {
        RatC f = m.trace();
        if (f.is_zero()) return RatC(0);
        t = t * f * RatC(1, 2);
    }
    return t;
}

OperatorSum OperatorSum::scalar(const RatC& c) {
    OperatorSum s;
    if (!c.is_zero()) s.terms[TensorWord{}] = c;
    return s;
}

OperatorSum OperatorSum::letter(SiteLetter l, int site) {
    OperatorSum s;
    std::vector<Mat2> sites(site, Mat2::ident());
    sites[site - 1] = letter_matrix(l);
    s.add_term(std::move(sites), RatC(1));
    return s;
}

OperatorSum OperatorSum::word(const std::vector<SiteLetter>& ls) {
    OperatorSum s;
    std::vector<Mat2> sites;
    sites.reserve(ls.size());
    for (auto l : ls) sites.push_back(letter_matrix(l));
    s.add_term(std::move(sites), RatC(1));
    return s;
}

int OperatorSum::max_site() const {
    int n = 0;
    for (const auto& [w, c] : terms) n = std::max(n, w.length());
    return n;
}

void OperatorSum::add_term(std::vector<Mat2> sites, RatC weight) {
    if (weight.is_zero()) return;
    for (auto& m : sites) {
        if (m.is_zero()) return;  // zero site annihilates the term
        weight = weight * m.normalize();
    }
    while (!sites.empty() && sites.back().is_identity()) sites.pop_back();
    TensorWord w{std::move(sites)};
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(std::move(w), std::move(weight));
    } else {
        it->second += weight;
        if (it->second.is_zero()) terms.erase(it);
    }
}

OperatorSum OperatorSum::operator+(const OperatorSum& o) const {
    OperatorSum r = *this;
    for (const auto& [w, c] : o.terms) r.add_term(w.sites, c);
    return r;
}

OperatorSum OperatorSum::operator-(const OperatorSum& o) const {
    OperatorSum r = *this;
    for (const auto& [w, c] : o.terms) r.add_term(w.sites, -c);
    return r;
}

OperatorSum OperatorSum::operator*(const OperatorSum& o) const {
    OperatorSum r;
    for (const auto& [wa, ca] : terms) {
        for (const auto& [wb, cb] : o.terms) {
            size_t n = std::max(wa.sites.size(), wb.sites.size());
            std::vector<Mat2> sites(n);
            for (size_t i = 0; i < n; ++i) {
                const Mat2& a = i < wa.sites.size() ? wa.sites[i] : Mat2::ident();
                const Mat2& b = i < wb.sites.size() ? wb.sites[i] : Mat2::ident();
                sites[i] = a * b;
            }
            r.add_term(std::move(sites), ca * cb);
        }
    }
    return r;
}

OperatorSum OperatorSum::operator*(const RatC& c) const {
    OperatorSum r;
    if (c.is_zero()) return r;
    for (const auto& [w, cw] : terms) r.terms[w] = cw * c;
    return r;
}

OperatorSum OperatorSum::adjoint() const {
    OperatorSum r;
    for (const auto& [w, c] : terms) {
        std::vector<Mat2> sites;
        sites.reserve(w.sites.size());
        for (const auto& m : w.sites) sites.push_back(m.adjoint());
        r.add_term(std::move(sites), c.conj());
    }
    return r;
}

OperatorSum OperatorSum::pow(int k) const {
    OperatorSum r = identity();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

RatC OperatorSum::trace() const {
    RatC t(0);
    for (const auto& [w, c] : terms) t += c * word_trace(w);
    return t;
}

Rat OperatorSum::norm2_sq() const {
    RatC t = (adjoint() * *this).trace();
    // tau(x*x) is real nonnegative by construction
    return t.re;
}

std::string OperatorSum::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << ratc_str(c) << ")";
        if (w.sites.empty()) {
            os << "*1";
        } else {
            for (size_t i = 0; i < w.sites.size(); ++i)
                os << (i == 0 ? "*" : "(x)") << mat2_name(w.sites[i]);
        }
    }
    return os.str();
}

OperatorSum commutator(const OperatorSum& x, const OperatorSum& y) {
    return x * y - y * x;
}

}  // namespace qn
