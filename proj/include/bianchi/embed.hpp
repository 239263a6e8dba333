#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bianchi/ring.hpp"

namespace bianchi {

// ---------------------------------------------------------------------------
// Words

/// One signed letter: alphabet index plus exponent sign (+1, or -1 for group
/// alphabets only).
struct Letter {
    int idx;
    int sign;

    bool operator==(const Letter& o) const { return idx == o.idx && sign == o.sign; }
};

using Word = std::vector<Letter>;

enum class WordKind { none, semigroup, group };

struct ComponentShape {
    WordKind kind = WordKind::none;
    int alphabet = 0;
};

/// Free reduction: cancel adjacent a a^-1 / a^-1 a pairs; idempotent.
Word reduce_word(const Word& raw);

/// Reduced concatenation (free-group product for group components).
Word concat(const ComponentShape& shape, const Word& u, const Word& v);

/// All words of the component with length <= max_len (reduced words for group
/// components), in deterministic order of increasing length.
std::vector<Word> enumerate_words(const ComponentShape& shape, int max_len);

std::uint64_t count_words(const ComponentShape& shape, int max_len);

/// The alphabet-reduction morphism sg(Sigma_k) -> sg(Sigma_2), a_i |-> a b^i a
/// (indices 0-based in the input, image over {a=0, b=1}).
Word alphabet_encode(const Word& w);

/// Unique factorisation at the a-delimiters; nullopt if the input is not in
/// the image of alphabet_encode.
std::optional<Word> alphabet_decode(const Word& image);

// ---------------------------------------------------------------------------
// Exact small matrices over a per-spec scalar kind

/// n x n matrix (n <= 3), row-major, exact scalar entries.
template <typename S>
struct MatN {
    int n;
    std::vector<S> e;

    MatN(int nn, std::vector<S> entries) : n(nn), e(std::move(entries)) {}

    const S& at(int i, int j) const { return e[i * n + j]; }

    static MatN identity_like(const MatN& m);

    MatN operator*(const MatN& o) const;
    bool operator==(const MatN& o) const { return n == o.n && e == o.e; }
    bool operator!=(const MatN& o) const { return !(*this == o); }

    S det() const;

    /// Canonical serialisation, usable as an exact hash key.
    std::string key() const;
};

using MatZ = MatN<Int>;
using MatQ = MatN<Rat>;
using MatQi = MatN<QuadRat>;  // Q(i), as QuadRat with d = 1

// ---------------------------------------------------------------------------
// Embedding specs

/// An element of a product of word structures: one word per component
/// (empty word for an absent component).
struct ElementWords {
    Word first, second;
};

/// Generator images for both components of one spec, over scalar S.
template <typename S>
struct TypedEmbedding {
    // gen[c][i] = image of letter i of component c; inv[c][i] its inverse
    // (group components only, empty otherwise).
    std::array<std::vector<MatN<S>>, 2> gen;
    std::array<std::vector<MatN<S>>, 2> inv;

    MatN<S> eval_word(int comp, const Word& w) const;
    MatN<S> eval(const ElementWords& el) const;
};

struct EmbeddingSpec {
    std::string name;
    std::array<ComponentShape, 2> shape;
    std::variant<TypedEmbedding<Int>, TypedEmbedding<Rat>, TypedEmbedding<QuadRat>> impl;

    /// Canonical key of the exact image matrix.
    std::string eval_key(const ElementWords& el) const;
};

/// The six catalogued embeddings:
///   E1  fg(S2) -> Z^2x2            E2  fg(S2) -> Q(i)^2x2
///   P1  sg(S1) x sg(S1) -> UT(2,N) P2  fg(S2) x fg(S1) -> Q^2x2
///   P3  sg(S2) x fg(S1) -> Z^3x3   P4  fg(S2) x sg(S1) -> Z^2x2
std::vector<EmbeddingSpec> catalog();

const EmbeddingSpec& find_spec(const std::string& name);

struct ScanBudgetExceeded : std::runtime_error {
    std::uint64_t would_enumerate;

    explicit ScanBudgetExceeded(std::uint64_t n)
        : std::runtime_error("injectivity_scan: enumeration budget exceeded"),
          would_enumerate(n) {}
};

/// Enumerates all domain elements with component word lengths <= max_len,
/// hashes exact images, returns the first collision (verified by full word
/// inequality) or nullopt.
std::optional<std::pair<ElementWords, ElementWords>> injectivity_scan(
    const EmbeddingSpec& spec, int max_len, std::uint64_t budget = 1000000);

/// Component word grammar: lowercase letters, uppercase for inverses;
/// component 1 uses a, b, ..., component 2 uses c, d, ....
Word parse_component_word(const ComponentShape& shape, const std::string& text,
                          char base_letter);
std::string format_component_word(const Word& w, char base_letter);

}  // namespace bianchi
