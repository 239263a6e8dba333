#include "bianchi/embed.hpp"

#include <sstream>
#include <unordered_map>

namespace bianchi {

// ---------------------------------------------------------------------------
// Words

Word reduce_word(const Word& raw) {
    Word out;
    for (const Letter& l : raw) {
        if (!out.empty() && out.back().idx == l.idx && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word concat(const ComponentShape& shape, const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return shape.kind == WordKind::group ? reduce_word(w) : w;
}

static std::vector<Letter> letter_order(const ComponentShape& shape) {
    std::vector<Letter> ls;
    for (int i = 0; i < shape.alphabet; ++i) {
        ls.push_back({i, 1});
        if (shape.kind == WordKind::group) ls.push_back({i, -1});
    }
    return ls;
}

std::vector<Word> enumerate_words(const ComponentShape& shape, int max_len) {
    std::vector<Word> out{Word{}};
    if (shape.kind == WordKind::none) return out;
    auto letters = letter_order(shape);
    std::vector<Word> frontier{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (const Letter& l : letters) {
                if (shape.kind == WordKind::group && !w.empty() &&
                    w.back().idx == l.idx && w.back().sign == -l.sign)
                    continue;
                Word e = w;
                e.push_back(l);
                next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::uint64_t count_words(const ComponentShape& shape, int max_len) {
    if (shape.kind == WordKind::none) return 1;
    std::uint64_t total = 1;
    std::uint64_t layer = 1;
    std::uint64_t k = static_cast<std::uint64_t>(shape.alphabet);
    for (int len = 1; len <= max_len; ++len) {
        if (shape.kind == WordKind::semigroup)
            layer *= k;
        else
            layer = (len == 1) ? 2 * k : layer * (2 * k - 1);
        total += layer;
    }
    return total;
}

Word alphabet_encode(const Word& w) {
    Word out;
    for (const Letter& l : w) {
        out.push_back({0, 1});
        for (int i = 0; i <= l.idx; ++i) out.push_back({1, 1});
        out.push_back({0, 1});
    }
    return out;
}

std::optional<Word> alphabet_decode(const Word& image) {
    Word out;
    size_t i = 0;
    while (i < image.size()) {
        if (image[i].idx != 0) return std::nullopt;
        ++i;
        int bs = 0;
        while (i < image.size() && image[i].idx == 1) {
            ++bs;
            ++i;
        }
        if (bs == 0 || i >= image.size() || image[i].idx != 0) return std::nullopt;
        ++i;
        out.push_back({bs - 1, 1});
    }
    return out;
}

// ---------------------------------------------------------------------------
// MatN

namespace {

std::string scalar_str(const Int& v) { return v.get_str(); }
std::string scalar_str(const Rat& v) { return v.get_str(); }
std::string scalar_str(const QuadRat& v) {
    return v.x.get_str() + "w" + v.y.get_str();
}

template <typename S>
S scalar_one(const S& like);

template <>
Int scalar_one(const Int&) { return Int(1); }
template <>
Rat scalar_one(const Rat&) { return Rat(1); }
template <>
QuadRat scalar_one(const QuadRat& like) { return QuadRat::one(like.ring); }

template <typename S>
S scalar_zero(const S& like);

template <>
Int scalar_zero(const Int&) { return Int(0); }
template <>
Rat scalar_zero(const Rat&) { return Rat(0); }
template <>
QuadRat scalar_zero(const QuadRat& like) { return QuadRat::zero(like.ring); }

}  // namespace

template <typename S>
MatN<S> MatN<S>::identity_like(const MatN& m) {
    std::vector<S> e;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            e.push_back(i == j ? scalar_one(m.e[0]) : scalar_zero(m.e[0]));
    return {m.n, std::move(e)};
}

template <typename S>
MatN<S> MatN<S>::operator*(const MatN& o) const {
    std::vector<S> r;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            S acc = at(i, 0) * o.at(0, j);
            for (int l = 1; l < n; ++l) acc = acc + at(i, l) * o.at(l, j);
            r.push_back(std::move(acc));
        }
    return {n, std::move(r)};
}

template <typename S>
S MatN<S>::det() const {
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

template <typename S>
std::string MatN<S>::key() const {
    std::ostringstream os;
    os << n;
    for (const S& v : e) os << '|' << scalar_str(v);
    return os.str();
}

template struct MatN<Int>;
template struct MatN<Rat>;
template struct MatN<QuadRat>;

// ---------------------------------------------------------------------------
// TypedEmbedding

template <typename S>
MatN<S> TypedEmbedding<S>::eval_word(int comp, const Word& w) const {
    MatN<S> m = MatN<S>::identity_like(gen[0].at(0));
    for (const Letter& l : w) {
        const auto& images = l.sign == 1 ? gen[comp] : inv[comp];
        if (static_cast<size_t>(l.idx) >= images.size())
            throw std::invalid_argument("eval_word: letter has no image");
        m = m * images[l.idx];
    }
    return m;
}

template <typename S>
MatN<S> TypedEmbedding<S>::eval(const ElementWords& el) const {
    return eval_word(0, el.first) * eval_word(1, el.second);
}

template struct TypedEmbedding<Int>;
template struct TypedEmbedding<Rat>;
template struct TypedEmbedding<QuadRat>;

std::string EmbeddingSpec::eval_key(const ElementWords& el) const {
    return std::visit([&](const auto& t) { return t.eval(el).key(); }, impl);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

MatZ mz2(long a, long b, long c, long d) {
    return {2, {Int(a), Int(b), Int(c), Int(d)}};
}

MatQ mq2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return {2, {a, b, c, d}};
}

MatZ mz3(std::array<long, 9> v) {
    std::vector<Int> e(v.begin(), v.end());
    return {3, std::move(e)};
}

QuadRat qi(long xn, long xd, long yn, long yd) {
    return {RingId(1), Rat(xn, xd), Rat(yn, yd)};
}

EmbeddingSpec make_e1() {
    TypedEmbedding<Int> t;
    t.gen[0] = {mz2(1, 2, 0, 1), mz2(1, 0, 2, 1)};
    t.inv[0] = {mz2(1, -2, 0, 1), mz2(1, 0, -2, 1)};
    return {"E1", {{{WordKind::group, 2}, {WordKind::none, 0}}}, std::move(t)};
}

EmbeddingSpec make_e2() {
    TypedEmbedding<QuadRat> t;
    QuadRat z = QuadRat::zero(RingId(1));
    t.gen[0] = {MatQi{2, {qi(3, 5, 4, 5), z, z, qi(3, 5, -4, 5)}},
                MatQi{2, {qi(3, 5, 0, 1), qi(4, 5, 0, 1), qi(-4, 5, 0, 1), qi(3, 5, 0, 1)}}};
    t.inv[0] = {MatQi{2, {qi(3, 5, -4, 5), z, z, qi(3, 5, 4, 5)}},
                MatQi{2, {qi(3, 5, 0, 1), qi(-4, 5, 0, 1), qi(4, 5, 0, 1), qi(3, 5, 0, 1)}}};
    return {"E2", {{{WordKind::group, 2}, {WordKind::none, 0}}}, std::move(t)};
}

EmbeddingSpec make_p1() {
    TypedEmbedding<Int> t;
    t.gen[0] = {mz2(2, 0, 0, 1)};
    t.gen[1] = {mz2(1, 0, 0, 2)};
    return {"P1", {{{WordKind::semigroup, 1}, {WordKind::semigroup, 1}}}, std::move(t)};
}

EmbeddingSpec make_p2() {
    TypedEmbedding<Rat> t;
    t.gen[0] = {mq2(1, 2, 0, 1), mq2(1, 0, 2, 1)};
    t.inv[0] = {mq2(1, -2, 0, 1), mq2(1, 0, -2, 1)};
    t.gen[1] = {mq2(2, 0, 0, 2)};
    t.inv[1] = {mq2(Rat(1, 2), 0, 0, Rat(1, 2))};
    return {"P2", {{{WordKind::group, 2}, {WordKind::group, 1}}}, std::move(t)};
}

EmbeddingSpec make_p3() {
    TypedEmbedding<Int> t;
    // b uses the lower-triangular variant of the classical sg(S2) embedding
    // (w -> image of the reversed word, transposed) so that both first-component
    // images commute with the unary shear in coordinates 2-3.
    t.gen[0] = {mz3({2, 0, 0, 0, 1, 0, 0, 0, 1}), mz3({2, 0, 0, 1, 1, 0, 0, 0, 1})};
    t.gen[1] = {mz3({1, 0, 0, 0, 1, 2, 0, 0, 1})};
    t.inv[1] = {mz3({1, 0, 0, 0, 1, -2, 0, 0, 1})};
    return {"P3", {{{WordKind::semigroup, 2}, {WordKind::group, 1}}}, std::move(t)};
}

EmbeddingSpec make_p4() {
    TypedEmbedding<Int> t;
    t.gen[0] = {mz2(1, 2, 0, 1), mz2(1, 0, 2, 1)};
    t.inv[0] = {mz2(1, -2, 0, 1), mz2(1, 0, -2, 1)};
    t.gen[1] = {mz2(2, 0, 0, 2)};
    return {"P4", {{{WordKind::group, 2}, {WordKind::semigroup, 1}}}, std::move(t)};
}

}  // namespace

std::vector<EmbeddingSpec> catalog() {
    std::vector<EmbeddingSpec> out;
    out.push_back(make_e1());
    out.push_back(make_e2());
    out.push_back(make_p1());
    out.push_back(make_p2());
    out.push_back(make_p3());
    out.push_back(make_p4());
    return out;
}

const EmbeddingSpec& find_spec(const std::string& name) {
    static const std::vector<EmbeddingSpec> specs = catalog();
    for (const auto& s : specs)
        if (s.name == name) return s;
    throw std::invalid_argument("unknown embedding spec '" + name + "'");
}

std::optional<std::pair<ElementWords, ElementWords>> injectivity_scan(
    const EmbeddingSpec& spec, int max_len, std::uint64_t budget) {
    std::uint64_t total =
        count_words(spec.shape[0], max_len) * count_words(spec.shape[1], max_len);
    if (total > budget) throw ScanBudgetExceeded(total);

    auto words1 = enumerate_words(spec.shape[0], max_len);
    auto words2 = enumerate_words(spec.shape[1], max_len);

    std::unordered_map<std::string, ElementWords> seen;
    seen.reserve(total);
    for (const Word& u : words1)
        for (const Word& v : words2) {
            ElementWords el{u, v};
            std::string k = spec.eval_key(el);
            auto [it, inserted] = seen.emplace(std::move(k), el);
            if (!inserted) {
                // keys are full canonical serialisations, so a hit is a real
                // matrix equality; the element pair differs by construction
                return std::make_pair(it->second, el);
            }
        }
    return std::nullopt;
}

Word parse_component_word(const ComponentShape& shape, const std::string& text,
                          char base_letter) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() != 1)
            throw std::invalid_argument("bad letter token '" + tok + "'");
        char ch = tok[0];
        bool inverse = ch >= 'A' && ch <= 'Z';
        char lower = inverse ? static_cast<char>(ch - 'A' + 'a') : ch;
        int idx = lower - base_letter;
        if (idx < 0 || idx >= shape.alphabet)
            throw std::invalid_argument("letter '" + tok + "' outside the component alphabet");
        if (inverse && shape.kind != WordKind::group)
            throw std::invalid_argument("inverse letter '" + tok + "' in a semigroup component");
        w.push_back({idx, inverse ? -1 : 1});
    }
    return shape.kind == WordKind::group ? reduce_word(w) : w;
}

std::string format_component_word(const Word& w, char base_letter) {
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += ' ';
        char ch = static_cast<char>(base_letter + l.idx);
        out += l.sign == 1 ? ch : static_cast<char>(ch - 'a' + 'A');
    }
    return out;
}

}  // namespace bianchi
