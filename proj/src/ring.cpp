#include "bianchi/ring.hpp"

#include <algorithm>

namespace bianchi {

std::string QuadInt::str() const {
    return x.get_str() + (y >= 0 ? "+" : "") + y.get_str() + "w";
}

Int round_nearest(const Rat& r) {
    Rat s = r + Rat(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return q;
}

static bool lex_less(const QuadInt& a, const QuadInt& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

std::vector<QuadInt> units(RingId ring) {
    // Enumerate {|x|,|y| <= 2 : N(x,y) = 1}; the unit groups of these five
    // rings all lie in that box.
    std::vector<QuadInt> out;
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y) {
            QuadInt z(ring, x, y);
            if (z.norm() == 1) out.push_back(z);
        }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

QuadInt nearest_quotient(const QuadInt& a, const QuadInt& b) {
    if (b.is_zero()) throw std::domain_error("nearest_quotient: division by zero");
    QuadRat t = QuadRat(a) / QuadRat(b);
    Int cx = round_nearest(t.x);
    Int cy = round_nearest(t.y);

    // The minimiser lies within one unit of the coordinate-wise rounding;
    // +-2 gives margin. Scanning in lex order keeps the first (smallest)
    // candidate among ties.
    bool have = false;
    QuadInt best = QuadInt::zero(a.ring);
    Rat best_n;
    for (int dx = -2; dx <= 2; ++dx)
        for (int dy = -2; dy <= 2; ++dy) {
            QuadInt q(a.ring, cx + dx, cy + dy);
            Rat n = (t - QuadRat(q)).norm();
            if (!have || n < best_n) {
                have = true;
                best = q;
                best_n = n;
            }
        }
    return best;
}

std::pair<QuadInt, QuadInt> divmod(const QuadInt& a, const QuadInt& b) {
    QuadInt q = nearest_quotient(a, b);
    return {q, a - q * b};
}

std::vector<QuadInt> entry_candidate_set(RingId ring) {
    Rat bound = ring.entry_norm_bound();
    std::vector<QuadInt> out;
    // bound <= 11/2 for all five rings, so coordinates fit in [-4, 4]
    for (int x = -4; x <= 4; ++x)
        for (int y = -4; y <= 4; ++y) {
            QuadInt z(ring, x, y);
            if (Rat(z.norm()) < bound) out.push_back(z);
        }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace bianchi
