#pragma once

#include <optional>

#include "bianchi/ring.hpp"

namespace bianchi {

/// 2x2 matrix over O_d, row-major entries a11 a12 / a21 a22.
struct Mat2 {
    RingId ring;
    QuadInt a11, a12, a21, a22;

    Mat2(RingId r, QuadInt m11, QuadInt m12, QuadInt m21, QuadInt m22)
        : ring(r), a11(std::move(m11)), a12(std::move(m12)),
          a21(std::move(m21)), a22(std::move(m22)) {}

    static Mat2 identity(RingId r) {
        return {r, QuadInt::one(r), QuadInt::zero(r), QuadInt::zero(r), QuadInt::one(r)};
    }

    // convenience for small integer entries
    static Mat2 from_ints(RingId r, long x11, long y11, long x12, long y12,
                          long x21, long y21, long x22, long y22) {
        return {r, QuadInt(r, x11, y11), QuadInt(r, x12, y12),
                QuadInt(r, x21, y21), QuadInt(r, x22, y22)};
    }

    QuadInt det() const { return a11 * a22 - a12 * a21; }

    // ||M|| = max entry |.|^2
    Int norm_max() const {
        Int n = a11.norm();
        for (const QuadInt* e : {&a12, &a21, &a22}) {
            Int m = e->norm();
            if (m > n) n = m;
        }
        return n;
    }

    Mat2 operator-() const { return {ring, -a11, -a12, -a21, -a22}; }

    Mat2 operator*(const Mat2& o) const {
        require_same_ring(ring, o.ring);
        return {ring,
                a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }

    bool operator==(const Mat2& o) const {
        return ring == o.ring && a11 == o.a11 && a12 == o.a12 &&
               a21 == o.a21 && a22 == o.a22;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
};

/// Generator matrices of PSL(2, O_d).
/// A = [[0,-1],[1,0]], T = [[1,1],[0,1]], U = [[1,omega],[0,1]].
Mat2 gen_a(RingId ring);
Mat2 gen_t(RingId ring);
Mat2 gen_u(RingId ring);

/// L exists only for d = 1 (diag(i,-i), order 4 in SL) and d = 3
/// (diag(w^2, w) with w = omega - 1 a primitive cube root of unity).
std::optional<Mat2> gen_l(RingId ring);

/// T^p * U^q = [[1, p + q*omega],[0, 1]] in closed form.
Mat2 unipotent(RingId ring, const Int& p, const Int& q);

/// Adjugate inverse; requires det(M) to be a unit.
Mat2 inverse(const Mat2& M);

/// Element of PSL(2,O_d): a sign-normalised SL representative.
/// Of {M, -M}, keeps the one whose entry-coordinate 8-tuple is
/// lexicographically larger.
struct PslElement {
    Mat2 rep;

    bool operator==(const PslElement& o) const { return rep == o.rep; }
    bool operator!=(const PslElement& o) const { return !(*this == o); }
};

PslElement psl_canonical(const Mat2& M);

}  // namespace bianchi
