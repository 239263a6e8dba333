#pragma once

#include <string>
#include <vector>

#include "bianchi/mat2.hpp"

namespace bianchi {

/// One factor A * T^p * U^q of a word representation.
struct Block {
    Int p, q;

    bool operator==(const Block& o) const { return p == o.p && q == o.q; }
};

/// Canonical decomposition (L^eps T^p0 U^q0) * A T^p_k U^q_k ... A T^p_1 U^q_1
/// with an explicit scalar sign for the SL lift. blocks[0] = (p_k, q_k),
/// blocks.back() = (p_1, q_1), i.e. stored in evaluation (left-to-right) order.
struct WordRep {
    RingId ring;
    int epsilon = 0;   // 0 unless d in {1,3}
    Int p0, q0;
    std::vector<Block> blocks;
    int sl_sign = 1;   // +1 or -1

    explicit WordRep(RingId r) : ring(r), p0(0), q0(0) {}
};

/// One Euclidean reduction step. Requires det(M) = 1 and M.a21 != 0.
/// Returns theta = -p - q*omega and M * U^-q * T^-p * A.
std::pair<QuadInt, Mat2> reduce_step(const Mat2& M);

/// Loop reduce_step until the bottom-left entry vanishes. Blocks are returned
/// in discovery order (p_1,q_1), ..., (p_k,q_k).
std::pair<std::vector<Block>, Mat2> triangularize(const Mat2& M);

struct UpperDecomp {
    int epsilon;
    Int p0, q0;
    int sign;  // L^eps T^p0 U^q0 == sign * Mk
};

/// Decompose an upper-triangular SL matrix as sign * L^eps T^p0 U^q0.
UpperDecomp decompose_upper(const Mat2& Mk);

/// The full procedure: evaluate(represent(M)) == M exactly.
WordRep represent(const Mat2& M);

/// Exact product of the word, sl_sign applied.
Mat2 evaluate(const WordRep& w);

/// One generator with an integer exponent.
struct Token {
    char gen;  // 'A', 'T', 'U', or 'L'
    Int exp;

    bool operator==(const Token& o) const { return gen == o.gen && exp == o.exp; }
};

/// Flat SL-generator word whose product equals the source matrix with no
/// external sign; a trailing A^2 (= -Id) absorbs sl_sign = -1.
/// Zero exponents are dropped.
std::vector<Token> lift_to_sl(const WordRep& w);

/// Exact product of a token sequence.
Mat2 evaluate_tokens(RingId ring, const std::vector<Token>& tokens);

/// Word text grammar: `[+|-] [L^e] T^p0 U^q0 ( A T^p U^q )*`,
/// whitespace-separated, e.g. `- L^1 T^3 U^-2 A T^0 U^1`.
std::string format_word(const WordRep& w);
WordRep parse_word(RingId ring, const std::string& text);

/// 1 + floor(-log_kappa(d) n) for n >= 1, by exact rational comparison.
long iteration_bound(RingId ring, const Int& norm_max);

/// The strict bound k < 1 - log_kappa(d) n; fails only in the documented
/// degenerate case (n = 1 needing one step).
bool strict_iteration_bound_holds(RingId ring, long k, const Int& norm_max);

}  // namespace bianchi
