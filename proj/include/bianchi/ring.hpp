#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bianchi {

using Int = mpz_class;
using Rat = mpq_class;

/// One of the five Euclidean imaginary quadratic integer rings O_d,
/// d in {1,2,3,7,11}, with integral basis {1, omega}.
class RingId {
public:
    explicit RingId(int d) : d_(d) {
        if (d != 1 && d != 2 && d != 3 && d != 7 && d != 11)
            throw std::invalid_argument("RingId: d must be one of {1,2,3,7,11}");
    }

    int d() const { return d_; }

    // omega = (1+sqrt(-d))/2 exactly when -d = 1 (mod 4), i.e. d in {3,7,11}.
    bool half_integral() const { return d_ != 1 && d_ != 2; }

    // omega^2 = c0 + c1*omega
    std::pair<Int, Int> omega_square_rule() const {
        if (half_integral()) return {Int(-(1 + d_) / 4), Int(1)};
        return {Int(-d_), Int(0)};
    }

    // Euclidean minimum kappa(d)
    Rat euclidean_minimum() const {
        Rat k;
        if (half_integral())
            k = Rat((1 + d_) * (1 + d_), 16 * d_);
        else
            k = Rat(d_ + 1, 4);
        k.canonicalize();
        return k;
    }

    // 1/(1-kappa(d)), the norm bound defining the entry candidate set
    Rat entry_norm_bound() const {
        Rat b = 1 / (1 - euclidean_minimum());
        b.canonicalize();
        return b;
    }

    bool operator==(const RingId& o) const { return d_ == o.d_; }
    bool operator!=(const RingId& o) const { return d_ != o.d_; }

private:
    int d_;
};

inline void require_same_ring(const RingId& a, const RingId& b) {
    if (a != b) throw std::invalid_argument("ring mismatch");
}

/// Element x + y*omega of O_d, arbitrary-precision coordinates.
struct QuadInt {
    RingId ring;
    Int x, y;

    QuadInt(RingId r, Int xx, Int yy) : ring(r), x(std::move(xx)), y(std::move(yy)) {}

    static QuadInt zero(RingId r) { return {r, 0, 0}; }
    static QuadInt one(RingId r) { return {r, 1, 0}; }
    static QuadInt omega(RingId r) { return {r, 0, 1}; }

    bool is_zero() const { return x == 0 && y == 0; }

    QuadInt operator-() const { return {ring, -x, -y}; }

    QuadInt operator+(const QuadInt& o) const {
        require_same_ring(ring, o.ring);
        return {ring, x + o.x, y + o.y};
    }

    QuadInt operator-(const QuadInt& o) const {
        require_same_ring(ring, o.ring);
        return {ring, x - o.x, y - o.y};
    }

    QuadInt operator*(const QuadInt& o) const {
        require_same_ring(ring, o.ring);
        auto [c0, c1] = ring.omega_square_rule();
        Int yy = y * o.y;
        return {ring, x * o.x + c0 * yy, x * o.y + y * o.x + c1 * yy};
    }

    bool operator==(const QuadInt& o) const {
        return ring == o.ring && x == o.x && y == o.y;
    }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }

    // N(x+y*omega) = |.|^2, a nonnegative rational integer
    Int norm() const {
        if (ring.half_integral())
            return x * x + x * y + y * y * ((1 + ring.d()) / 4);
        return x * x + y * y * ring.d();
    }

    // z * conj(z) = norm(z)
    QuadInt conj() const {
        if (ring.half_integral()) return {ring, x + y, -y};
        return {ring, x, -y};
    }

    std::string str() const;
};

/// Element x + y*omega of Q(sqrt(-d)), exact rational coordinates.
struct QuadRat {
    RingId ring;
    Rat x, y;

    QuadRat(RingId r, Rat xx, Rat yy) : ring(r), x(std::move(xx)), y(std::move(yy)) {
        x.canonicalize();
        y.canonicalize();
    }
    explicit QuadRat(const QuadInt& z) : ring(z.ring), x(z.x), y(z.y) {}

    static QuadRat zero(RingId r) { return {r, Rat(0), Rat(0)}; }
    static QuadRat one(RingId r) { return {r, Rat(1), Rat(0)}; }

    bool is_zero() const { return x == 0 && y == 0; }

    QuadRat operator-() const { return {ring, -x, -y}; }

    QuadRat operator+(const QuadRat& o) const {
        require_same_ring(ring, o.ring);
        return {ring, x + o.x, y + o.y};
    }

    QuadRat operator-(const QuadRat& o) const {
        require_same_ring(ring, o.ring);
        return {ring, x - o.x, y - o.y};
    }

    QuadRat operator*(const QuadRat& o) const {
        require_same_ring(ring, o.ring);
        auto [c0, c1] = ring.omega_square_rule();
        Rat yy = y * o.y;
        return {ring, x * o.x + Rat(c0) * yy, x * o.y + y * o.x + Rat(c1) * yy};
    }

    QuadRat operator/(const QuadRat& o) const {
        require_same_ring(ring, o.ring);
        if (o.is_zero()) throw std::domain_error("QuadRat: division by zero");
        QuadRat num = *this * o.conj();
        Rat n = o.norm();
        return {ring, num.x / n, num.y / n};
    }

    bool operator==(const QuadRat& o) const {
        return ring == o.ring && x == o.x && y == o.y;
    }
    bool operator!=(const QuadRat& o) const { return !(*this == o); }

    Rat norm() const {
        Rat n;
        if (ring.half_integral())
            n = x * x + x * y + y * y * Rat((1 + ring.d()) / 4);
        else
            n = x * x + y * y * Rat(ring.d());
        n.canonicalize();
        return n;
    }

    QuadRat conj() const {
        if (ring.half_integral()) return {ring, x + y, -y};
        return {ring, x, -y};
    }
};

/// Nearest integer to a rational, ties rounded down (the window search in
/// nearest_quotient makes the rounding rule immaterial).
Int round_nearest(const Rat& r);

/// Unit group of O_d: {z in O_d : N(z) = 1}.
std::vector<QuadInt> units(RingId ring);

/// Nearest-integer quotient q in O_d minimising N(a/b - q); ties broken by
/// lexicographically smallest (x, y).
QuadInt nearest_quotient(const QuadInt& a, const QuadInt& b);

/// a = q*b + r with q = nearest_quotient(a, b); N(r) <= kappa(d)*N(b) and
/// N(r) < N(b).
std::pair<QuadInt, QuadInt> divmod(const QuadInt& a, const QuadInt& b);

/// {z in O_d : N(z) < 1/(1 - kappa(d))}, sorted lexicographically by (x, y).
std::vector<QuadInt> entry_candidate_set(RingId ring);

}  // namespace bianchi
