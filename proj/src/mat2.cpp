#include "bianchi/mat2.hpp"

namespace bianchi {

Mat2 gen_a(RingId ring) { return Mat2::from_ints(ring, 0, 0, -1, 0, 1, 0, 0, 0); }

Mat2 gen_t(RingId ring) { return Mat2::from_ints(ring, 1, 0, 1, 0, 0, 0, 1, 0); }

Mat2 gen_u(RingId ring) { return Mat2::from_ints(ring, 1, 0, 0, 1, 0, 0, 1, 0); }

std::optional<Mat2> gen_l(RingId ring) {
    if (ring.d() == 1) {
        // diag(i, -i)
        return Mat2::from_ints(ring, 0, 1, 0, 0, 0, 0, 0, -1);
    }
    if (ring.d() == 3) {
        // w = omega - 1 is a primitive cube root of unity; w^2 = -omega
        return Mat2::from_ints(ring, 0, -1, 0, 0, 0, 0, -1, 1);
    }
    return std::nullopt;
}

Mat2 unipotent(RingId ring, const Int& p, const Int& q) {
    return {ring, QuadInt::one(ring), QuadInt(ring, p, q),
            QuadInt::zero(ring), QuadInt::one(ring)};
}

Mat2 inverse(const Mat2& M) {
    QuadInt d = M.det();
    if (d.norm() != 1) throw std::domain_error("inverse: determinant is not a unit");
    // 1/d = conj(d) since N(d) = 1
    QuadInt di = d.conj();
    return {M.ring, di * M.a22, di * (-M.a12), di * (-M.a21), di * M.a11};
}

static int cmp(const Int& a, const Int& b) { return ::cmp(a, b); }

static int lex_cmp8(const Mat2& m, const Mat2& n) {
    for (auto pick : {&Mat2::a11, &Mat2::a12, &Mat2::a21, &Mat2::a22}) {
        const QuadInt& a = m.*pick;
        const QuadInt& b = n.*pick;
        if (int c = cmp(a.x, b.x)) return c;
        if (int c = cmp(a.y, b.y)) return c;
    }
    return 0;
}

PslElement psl_canonical(const Mat2& M) {
    if (M.det() != QuadInt::one(M.ring))
        throw std::domain_error("psl_canonical: determinant is not 1");
    Mat2 N = -M;
    return {lex_cmp8(M, N) >= 0 ? M : N};
}

}  // namespace bianchi
