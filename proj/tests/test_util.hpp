#pragma once

#include <random>

#include "bianchi/mat2.hpp"

namespace bianchi::testutil {

inline const int kAllRings[] = {1, 2, 3, 7, 11};

inline Int random_int_bits(std::mt19937_64& rng, int bits) {
    std::uniform_int_distribution<std::uint64_t> dist;
    Int v = 0;
    for (int b = 0; b < bits; b += 64) {
        v <<= 64;
        v += Int(static_cast<unsigned long>(dist(rng)));
    }
    v >>= (64 - bits % 64) % 64;
    return rng() % 2 == 0 ? v : -v;
}

inline QuadInt random_quadint(std::mt19937_64& rng, RingId ring, int bits = 64) {
    return {ring, random_int_bits(rng, bits), random_int_bits(rng, bits)};
}

/// Available SL generators and their inverses for random word sampling.
inline std::vector<Mat2> generator_pool(RingId ring) {
    std::vector<Mat2> pool{gen_a(ring), inverse(gen_a(ring)),
                           gen_t(ring), inverse(gen_t(ring)),
                           gen_u(ring), inverse(gen_u(ring))};
    if (auto L = gen_l(ring)) {
        pool.push_back(*L);
        pool.push_back(inverse(*L));
    }
    return pool;
}

inline Mat2 random_word_matrix(std::mt19937_64& rng, RingId ring, int max_len) {
    auto pool = generator_pool(ring);
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    Mat2 m = Mat2::identity(ring);
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) m = m * pool[pick(rng)];
    return m;
}

inline Mat2 random_word_matrix_exact_len(std::mt19937_64& rng, RingId ring, int len) {
    auto pool = generator_pool(ring);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    Mat2 m = Mat2::identity(ring);
    for (int i = 0; i < len; ++i) m = m * pool[pick(rng)];
    return m;
}

}  // namespace bianchi::testutil
