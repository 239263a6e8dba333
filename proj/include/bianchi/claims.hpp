#pragma once

#include <cstdint>
#include <vector>

#include "bianchi/word.hpp"

namespace bianchi {

/// Result of the exhaustive norm-monotonicity search over small SL matrices.
struct ClaimReport {
    RingId ring;
    std::uint64_t candidates_examined = 0;
    std::vector<std::pair<Mat2, Mat2>> counterexamples;
    double elapsed_ms = 0.0;

    explicit ClaimReport(RingId r) : ring(r) {}
};

/// All matrices with entries in entry_candidate_set(d), bottom-left != 0 and
/// det = 1, in lexicographic enumeration order over entry coordinates.
std::vector<Mat2> candidate_matrices(RingId ring);

/// Runs reduce_step on every candidate and records any pair with
/// ||M|| < ||M'||. Zero counterexamples for all five rings.
ClaimReport check_claim(RingId ring);

/// Entry candidate set matches the hard-coded reference list for d.
bool verify_entry_table(RingId ring);

}  // namespace bianchi
