#pragma once

#include "qn/rational.hpp"

#include <array>
#include <string>

namespace qn {

/// The seven site letters acting on one tensor factor.
enum class SiteLetter { I, P, Q, V, Vstar, R, T };

/// Exact 2x2 complex-rational matrix. The site algebra closes over these,
/// so products of letters never need case analysis.
struct Mat2 {
    // row-major: e[0]=a00, e[1]=a01, e[2]=a10, e[3]=a11
    std::array<RatC, 4> e{};

    static Mat2 zero() { return {}; }
    static Mat2 ident() { Mat2 m; m.e[0] = RatC(1); m.e[3] = RatC(1); return m; }

    bool is_zero() const {
        return e[0].is_zero() && e[1].is_zero() && e[2].is_zero() && e[3].is_zero();
    }
    bool is_identity() const {
        return e[0] == RatC(1) && e[1].is_zero() && e[2].is_zero() && e[3] == RatC(1);
    }

    RatC trace() const { return e[0] + e[3]; }

    Mat2 adjoint() const {
        Mat2 m;
        m.e[0] = e[0].conj(); m.e[1] = e[2].conj();
        m.e[2] = e[1].conj(); m.e[3] = e[3].conj();
        return m;
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        Mat2 m;
        m.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
        m.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
        m.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
        m.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
        return m;
    }
    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        Mat2 m;
        for (int i = 0; i < 4; ++i) m.e[i] = a.e[i] + b.e[i];
        return m;
    }

    /// Divide out the first nonzero entry (row-major scan) and return it.
    /// Afterwards the matrix is canonical up to that scalar; words built
    /// from normalized sites compare equal whenever they are proportional.
    RatC normalize() {
        for (auto& x : e) {
            if (!x.is_zero()) {
                RatC s = x;
                for (auto& y : e) y = y / s;
                return s;
            }
        }
        return RatC(1);  // zero matrix
    }

    friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
    friend bool operator<(const Mat2& a, const Mat2& b) {
        for (int i = 0; i < 4; ++i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        }
        return false;
    }
};

Mat2 letter_matrix(SiteLetter l);

/// Pretty name: one of the seven letters if the (normalized) matrix matches,
/// otherwise an explicit entry list.
std::string mat2_name(const Mat2& m);

}  // namespace qn
