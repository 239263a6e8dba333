#include "bianchi/claims.hpp"

#include <algorithm>
#include <chrono>

namespace bianchi {

std::vector<Mat2> candidate_matrices(RingId ring) {
    std::vector<QuadInt> S = entry_candidate_set(ring);
    std::vector<Mat2> out;
    QuadInt one = QuadInt::one(ring);
    for (const QuadInt& a : S)
        for (const QuadInt& b : S)
            for (const QuadInt& c : S) {
                if (c.is_zero()) continue;
                for (const QuadInt& d : S)
                    if (a * d - b * c == one) out.emplace_back(ring, a, b, c, d);
            }
    return out;
}

ClaimReport check_claim(RingId ring) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimReport report(ring);
    for (const Mat2& M : candidate_matrices(ring)) {
        ++report.candidates_examined;
        Mat2 next = reduce_step(M).second;
        if (M.norm_max() < next.norm_max())
            report.counterexamples.emplace_back(M, next);
    }
    auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

bool verify_entry_table(RingId ring) {
    // reference lists, coordinates in the basis {1, omega}
    std::vector<std::pair<int, int>> expect;
    switch (ring.d()) {
        case 1:  // {0, +-1, +-i}
            expect = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
            break;
        case 2:  // {0, +-1, +-sqrt(-2), -1 +- sqrt(-2), 1 +- sqrt(-2)}
            expect = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1},
                      {-1, 1}, {-1, -1}, {1, 1}, {1, -1}};
            break;
        case 3:   // {0, +-1, +-omega, +-conj(omega)}, conj(omega) = 1 - omega
        case 7:
            expect = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
            break;
        case 11:  // {0, +-1, +-2, +-omega, -1 +- omega, 1 +- omega, +-(omega - 2)}
            expect = {{0, 0}, {1, 0}, {-1, 0}, {2, 0}, {-2, 0},
                      {0, 1}, {0, -1}, {-1, 1}, {-1, -1}, {1, 1}, {1, -1},
                      {-2, 1}, {2, -1}};
            break;
    }
    std::vector<QuadInt> want;
    want.reserve(expect.size());
    for (auto [x, y] : expect) want.emplace_back(ring, x, y);
    std::sort(want.begin(), want.end(), [](const QuadInt& a, const QuadInt& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    return entry_candidate_set(ring) == want;
}

}  // namespace bianchi
