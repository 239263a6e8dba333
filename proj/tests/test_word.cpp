#include <doctest.h>

#include "bianchi/word.hpp"
#include "test_util.hpp"

using namespace bianchi;
using namespace bianchi::testutil;

TEST_CASE("reduce_step examples") {
    RingId g(1);

    // M = A: theta = 0, next = A*A = -Id
    auto [theta, next] = reduce_step(gen_a(g));
    CHECK(theta.is_zero());
    CHECK(next == -Mat2::identity(g));

    // M = [[1,0],[2,1]]: delta=1, gamma=2, contraction to N <= 2
    Mat2 M = Mat2::from_ints(g, 1, 0, 0, 0, 2, 0, 1, 0);
    auto [th2, n2] = reduce_step(M);
    CHECK(Rat(n2.a21.norm()) <= g.euclidean_minimum() * Rat(M.a21.norm()));
    CHECK(n2.det() == QuadInt::one(g));

    // M = T*A has gamma = 1: a single step clears it
    for (int d : kAllRings) {
        RingId ring(d);
        Mat2 TA = gen_t(ring) * gen_a(ring);
        auto [th3, n3] = reduce_step(TA);
        CHECK(n3.a21.is_zero());
    }

    CHECK_THROWS_AS(reduce_step(Mat2::identity(g)), std::domain_error);
}

TEST_CASE("reduce_step matches the H-matrix product") {
    std::mt19937_64 rng(37);
    for (int d : kAllRings) {
        RingId ring(d);
        for (int i = 0; i < 200; ++i) {
            Mat2 M = random_word_matrix(rng, ring, 12);
            if (M.a21.is_zero()) continue;
            auto [theta, next] = reduce_step(M);
            Int p = -theta.x, q = -theta.y;
            Mat2 H = inverse(unipotent(ring, 0, q)) * inverse(unipotent(ring, p, 0)) *
                     gen_a(ring);
            REQUIRE(next == M * H);
        }
    }
}

TEST_CASE("triangularize") {
    RingId g(1);

    // upper-triangular input: no blocks
    Mat2 up = unipotent(g, 3, -2);
    auto [b0, m0] = triangularize(up);
    CHECK(b0.empty());
    CHECK(m0 == up);

    auto [b1, m1] = triangularize(gen_a(g));
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == Block{0, 0});
    CHECK(m1 == -Mat2::identity(g));

    CHECK_THROWS_AS(triangularize(Mat2::from_ints(g, 2, 0, 0, 0, 0, 0, 1, 0)),
                    std::domain_error);
}

TEST_CASE("triangularize iteration bound on random words") {
    std::mt19937_64 rng(41);
    for (int d : kAllRings) {
        RingId ring(d);
        for (int i = 0; i < 1000; ++i) {
            Mat2 M = random_word_matrix(rng, ring, 30);
            auto [blocks, mk] = triangularize(M);
            REQUIRE(mk.a21.is_zero());
            REQUIRE(static_cast<long>(blocks.size()) <= iteration_bound(ring, M.norm_max()));
        }
    }
}

TEST_CASE("decompose_upper") {
    RingId g(1);
    auto u0 = decompose_upper(Mat2::identity(g));
    CHECK(u0.epsilon == 0);
    CHECK(u0.p0 == 0);
    CHECK(u0.q0 == 0);
    CHECK(u0.sign == 1);

    auto u1 = decompose_upper(*gen_l(g));
    CHECK(u1.epsilon == 1);
    CHECK(u1.p0 == 0);
    CHECK(u1.q0 == 0);
    CHECK(u1.sign == 1);

    // d=2: [[-1, -1-omega],[0,-1]] = -(T^1 U^1)
    RingId r2(2);
    auto u2 = decompose_upper(Mat2::from_ints(r2, -1, 0, -1, -1, 0, 0, -1, 0));
    CHECK(u2.epsilon == 0);
    CHECK(u2.p0 == 1);
    CHECK(u2.q0 == 1);
    CHECK(u2.sign == -1);

    // d=2: [[-1, -omega],[0,-1]] = -(U^1)
    auto u3 = decompose_upper(Mat2::from_ints(r2, -1, 0, 0, -1, 0, 0, -1, 0));
    CHECK(u3.epsilon == 0);
    CHECK(u3.p0 == 0);
    CHECK(u3.q0 == 1);
    CHECK(u3.sign == -1);

    CHECK_THROWS_AS(decompose_upper(gen_a(g)), std::invalid_argument);
    CHECK_THROWS_AS(decompose_upper(Mat2::from_ints(g, 2, 0, 0, 0, 0, 0, 1, 0)),
                    std::invalid_argument);
}

TEST_CASE("decompose_upper covers all unit pairings") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> exp_dist(-5, 5);
    for (int d : kAllRings) {
        RingId ring(d);
        for (const QuadInt& rho : units(ring)) {
            QuadInt tau = rho.conj();
            Int p = exp_dist(rng), q = exp_dist(rng);
            // rho * (p + q*omega) in the top-right makes diag(rho,tau)*T^p*U^q
            QuadInt sigma = rho * QuadInt(ring, p, q);
            Mat2 Mk(ring, rho, sigma, QuadInt::zero(ring), tau);
            auto u = decompose_upper(Mk);
            Mat2 lhs = Mat2::identity(ring);
            if (u.epsilon > 0) {
                Mat2 L = *gen_l(ring);
                for (int i = 0; i < u.epsilon; ++i) lhs = lhs * L;
            }
            lhs = lhs * unipotent(ring, u.p0, u.q0);
            REQUIRE(lhs == (u.sign == 1 ? Mk : -Mk));
        }
    }
}

TEST_CASE("represent examples") {
    RingId g(1);

    WordRep wt = represent(gen_t(g));
    CHECK(wt.epsilon == 0);
    CHECK(wt.p0 == 1);
    CHECK(wt.q0 == 0);
    CHECK(wt.blocks.empty());
    CHECK(wt.sl_sign == 1);

    WordRep wa = represent(gen_a(g));
    CHECK(wa.epsilon == 0);
    CHECK(wa.p0 == 0);
    CHECK(wa.q0 == 0);
    REQUIRE(wa.blocks.size() == 1);
    CHECK(wa.blocks[0] == Block{0, 0});
    CHECK(evaluate(wa) == gen_a(g));

    CHECK_THROWS_AS(represent(Mat2::from_ints(g, 2, 0, 0, 0, 0, 0, 1, 0)),
                    std::domain_error);
}

TEST_CASE("evaluate examples") {
    RingId r7(7);
    WordRep w(r7);
    CHECK(evaluate(w) == Mat2::identity(r7));
    w.p0 = 3;
    w.q0 = -2;
    CHECK(evaluate(w) == unipotent(r7, 3, -2));
}

TEST_CASE("round-trip with bound checks") {
    std::mt19937_64 rng(47);
    for (int d : kAllRings) {
        RingId ring(d);
        for (int i = 0; i < 1000; ++i) {
            Mat2 M = random_word_matrix(rng, ring, 30);
            WordRep w = represent(M);
            REQUIRE(evaluate(w) == M);

            Int norm = M.norm_max();
            REQUIRE(QuadInt(ring, w.p0, w.q0).norm() <= norm);
            for (const Block& b : w.blocks)
                REQUIRE(QuadInt(ring, b.p, b.q).norm() <= norm);
            REQUIRE(static_cast<long>(w.blocks.size()) <= iteration_bound(ring, norm));
        }
    }
}

TEST_CASE("lift_to_sl") {
    std::mt19937_64 rng(53);
    for (int d : kAllRings) {
        RingId ring(d);
        // -Id lifts to A^2 with an empty head
        WordRep wneg = represent(-Mat2::identity(ring));
        auto toks = lift_to_sl(wneg);
        REQUIRE(toks.size() == 1);
        CHECK(toks[0] == Token{'A', 2});
        CHECK(evaluate_tokens(ring, toks) == -Mat2::identity(ring));

        for (int i = 0; i < 200; ++i) {
            Mat2 M = random_word_matrix(rng, ring, 20);
            REQUIRE(evaluate_tokens(ring, lift_to_sl(represent(M))) == M);
        }
    }
}

TEST_CASE("word text format round-trips") {
    std::mt19937_64 rng(59);
    for (int d : kAllRings) {
        RingId ring(d);
        for (int i = 0; i < 200; ++i) {
            Mat2 M = random_word_matrix(rng, ring, 15);
            WordRep w = represent(M);
            WordRep parsed = parse_word(ring, format_word(w));
            REQUIRE(evaluate(parsed) == M);
            REQUIRE(parsed.epsilon == w.epsilon);
            REQUIRE(parsed.blocks == w.blocks);
        }
    }

    RingId g(1);
    WordRep w = parse_word(g, "- L^1 T^3 U^-2 A T^0 U^1");
    CHECK(w.sl_sign == -1);
    CHECK(w.epsilon == 1);
    CHECK(w.p0 == 3);
    CHECK(w.q0 == -2);
    REQUIRE(w.blocks.size() == 1);
    CHECK(w.blocks[0] == Block{0, 1});

    CHECK_THROWS_AS(parse_word(g, "T^1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(g, "+ T^x U^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(RingId(2), "+ L^1 T^0 U^0"), std::invalid_argument);
}

TEST_CASE("iteration bound arithmetic") {
    RingId g(1);  // kappa = 1/2
    CHECK(iteration_bound(g, 1) == 1);
    CHECK(iteration_bound(g, 2) == 2);
    CHECK(iteration_bound(g, 3) == 2);
    CHECK(iteration_bound(g, 4) == 3);

    // strict bound fails exactly at the degenerate ||M|| = 1, k = 1 case
    CHECK(strict_iteration_bound_holds(g, 0, 1));
    CHECK_FALSE(strict_iteration_bound_holds(g, 1, 1));
    CHECK(strict_iteration_bound_holds(g, 1, 2));
}

TEST_CASE("monotone norms along the reduction") {
    std::mt19937_64 rng(61);
    for (int d : kAllRings) {
        RingId ring(d);
        for (int i = 0; i < 300; ++i) {
            Mat2 M = random_word_matrix(rng, ring, 25);
            Mat2 cur = M;
            while (!cur.a21.is_zero()) {
                auto [theta, next] = reduce_step(cur);
                REQUIRE(next.a21.norm() < cur.a21.norm());
                REQUIRE(next.norm_max() <= cur.norm_max());
                REQUIRE(next.det() == QuadInt::one(ring));
                cur = next;
            }
        }
    }
}
