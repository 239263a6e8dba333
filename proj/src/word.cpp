#include "bianchi/word.hpp"

#include <cassert>
#include <sstream>

namespace bianchi {

std::pair<QuadInt, Mat2> reduce_step(const Mat2& M) {
    if (M.a21.is_zero()) throw std::domain_error("reduce_step: bottom-left entry is zero");
    if (M.det() != QuadInt::one(M.ring))
        throw std::domain_error("reduce_step: determinant is not 1");
    // delta = -theta*gamma + r, so theta = -nearest_quotient(delta, gamma)
    QuadInt theta = -nearest_quotient(M.a22, M.a21);
    Mat2 next(M.ring, theta * M.a11 + M.a12, -M.a11,
              theta * M.a21 + M.a22, -M.a21);
    assert(next.a21.norm() < M.a21.norm());
    assert(next.norm_max() <= M.norm_max());
    return {theta, next};
}

std::pair<std::vector<Block>, Mat2> triangularize(const Mat2& M) {
    if (M.det() != QuadInt::one(M.ring))
        throw std::domain_error("triangularize: determinant is not 1");
    std::vector<Block> blocks;
    Mat2 cur = M;
    while (!cur.a21.is_zero()) {
        auto [theta, next] = reduce_step(cur);
        blocks.push_back({-theta.x, -theta.y});
        cur = next;
    }
    return {blocks, cur};
}

// L^eps = diag(lambda, conj(lambda)); top-left entries per epsilon
static std::vector<QuadInt> lambda_table(RingId ring) {
    std::vector<QuadInt> t{QuadInt::one(ring)};
    if (ring.d() == 1) {
        t.push_back(QuadInt(ring, 0, 1));  // i
    } else if (ring.d() == 3) {
        t.push_back(QuadInt(ring, 0, -1));   // w^2 where w = omega - 1
        t.push_back(QuadInt(ring, -1, 1));   // w^4 = w
    }
    return t;
}

UpperDecomp decompose_upper(const Mat2& Mk) {
    if (!Mk.a21.is_zero())
        throw std::invalid_argument("decompose_upper: matrix is not upper-triangular");
    if (Mk.det() != QuadInt::one(Mk.ring))
        throw std::invalid_argument("decompose_upper: determinant is not 1");
    const QuadInt& rho = Mk.a11;
    if (rho.norm() != 1)
        throw std::invalid_argument("decompose_upper: diagonal is not a unit");

    auto lambdas = lambda_table(Mk.ring);
    for (int sign : {1, -1})
        for (size_t eps = 0; eps < lambdas.size(); ++eps) {
            QuadInt target = sign == 1 ? rho : -rho;
            if (lambdas[eps] != target) continue;
            // sigma' = sign * sigma * conj(lambda)
            QuadInt sp = (sign == 1 ? Mk.a12 : -Mk.a12) * lambdas[eps].conj();
            return {static_cast<int>(eps), sp.x, sp.y, sign};
        }
    throw std::invalid_argument("decompose_upper: no unit pairing found");
}

WordRep represent(const Mat2& M) {
    auto [blocks, Mk] = triangularize(M);
    UpperDecomp ud = decompose_upper(Mk);

    WordRep w(M.ring);
    w.epsilon = ud.epsilon;
    w.p0 = ud.p0;
    w.q0 = ud.q0;
    // H_l^-1 = (-A) T^p_l U^q_l; the k sign flips fold into sl_sign
    w.sl_sign = ud.sign * (blocks.size() % 2 == 0 ? 1 : -1);
    w.blocks.assign(blocks.rbegin(), blocks.rend());
    return w;
}

Mat2 evaluate(const WordRep& w) {
    Mat2 m = Mat2::identity(w.ring);
    if (w.epsilon > 0) {
        Mat2 L = *gen_l(w.ring);
        for (int i = 0; i < w.epsilon; ++i) m = m * L;
    }
    m = m * unipotent(w.ring, w.p0, w.q0);
    Mat2 A = gen_a(w.ring);
    for (const Block& b : w.blocks) m = m * A * unipotent(w.ring, b.p, b.q);
    return w.sl_sign == 1 ? m : -m;
}

std::vector<Token> lift_to_sl(const WordRep& w) {
    std::vector<Token> out;
    if (w.epsilon != 0) out.push_back({'L', Int(w.epsilon)});
    if (w.p0 != 0) out.push_back({'T', w.p0});
    if (w.q0 != 0) out.push_back({'U', w.q0});
    for (const Block& b : w.blocks) {
        out.push_back({'A', Int(1)});
        if (b.p != 0) out.push_back({'T', b.p});
        if (b.q != 0) out.push_back({'U', b.q});
    }
    if (w.sl_sign == -1) out.push_back({'A', Int(2)});
    return out;
}

Mat2 evaluate_tokens(RingId ring, const std::vector<Token>& tokens) {
    Mat2 m = Mat2::identity(ring);
    for (const Token& t : tokens) {
        switch (t.gen) {
            case 'T': m = m * unipotent(ring, t.exp, 0); break;
            case 'U': m = m * unipotent(ring, 0, t.exp); break;
            case 'A':
            case 'L': {
                Mat2 g = t.gen == 'A' ? gen_a(ring) : *gen_l(ring);
                long order = (t.gen == 'A' || ring.d() == 1) ? 4 : 3;
                Int e = t.exp % order;
                if (e < 0) e += order;
                for (long i = 0; i < e.get_si(); ++i) m = m * g;
                break;
            }
            default:
                throw std::invalid_argument("evaluate_tokens: unknown generator");
        }
    }
    return m;
}

std::string format_word(const WordRep& w) {
    std::ostringstream os;
    os << (w.sl_sign == 1 ? '+' : '-');
    if (w.epsilon != 0) os << " L^" << w.epsilon;
    os << " T^" << w.p0.get_str() << " U^" << w.q0.get_str();
    for (const Block& b : w.blocks)
        os << " A T^" << b.p.get_str() << " U^" << b.q.get_str();
    return os.str();
}

namespace {

struct TokenStream {
    std::vector<std::string> toks;
    size_t pos = 0;

    explicit TokenStream(const std::string& text) {
        std::istringstream is(text);
        std::string t;
        while (is >> t) toks.push_back(t);
    }

    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const {
        if (done()) throw std::invalid_argument("parse_word: unexpected end of word");
        return toks[pos];
    }
    std::string next() {
        std::string t = peek();
        ++pos;
        return t;
    }
};

Int parse_exp(const std::string& tok, char gen) {
    if (tok.size() < 3 || tok[0] != gen || tok[1] != '^')
        throw std::invalid_argument("parse_word: expected " + std::string(1, gen) +
                                    "^<int>, got '" + tok + "'");
    try {
        return Int(tok.substr(2));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_word: bad exponent in '" + tok + "'");
    }
}

}  // namespace

WordRep parse_word(RingId ring, const std::string& text) {
    TokenStream ts(text);
    WordRep w(ring);

    if (!ts.done() && (ts.peek() == "+" || ts.peek() == "-")) {
        w.sl_sign = ts.next() == "+" ? 1 : -1;
    }
    if (!ts.done() && ts.peek()[0] == 'L') {
        Int e = parse_exp(ts.next(), 'L');
        if (e < 0 || e > (ring.d() == 1 ? 1 : 2) || (ring.d() != 1 && ring.d() != 3 && e != 0))
            throw std::invalid_argument("parse_word: L exponent out of range for this ring");
        w.epsilon = static_cast<int>(e.get_si());
    }
    w.p0 = parse_exp(ts.next(), 'T');
    w.q0 = parse_exp(ts.next(), 'U');
    while (!ts.done()) {
        if (ts.next() != "A") throw std::invalid_argument("parse_word: expected 'A'");
        Int p = parse_exp(ts.next(), 'T');
        Int q = parse_exp(ts.next(), 'U');
        w.blocks.push_back({p, q});
    }
    return w;
}

long iteration_bound(RingId ring, const Int& norm_max) {
    if (norm_max < 1) throw std::invalid_argument("iteration_bound: ||M|| must be >= 1");
    Rat kappa = ring.euclidean_minimum();
    // largest j >= 0 with kappa^j * ||M|| >= 1
    long j = 0;
    Rat val(norm_max);
    while (true) {
        val *= kappa;
        val.canonicalize();
        if (val < 1) break;
        ++j;
    }
    return 1 + j;
}

bool strict_iteration_bound_holds(RingId ring, long k, const Int& norm_max) {
    // k < 1 - log_kappa ||M||  <=>  kappa^(k-1) * ||M|| > 1
    Rat kappa = ring.euclidean_minimum();
    Rat val(norm_max);
    if (k == 0) {
        val /= kappa;
    } else {
        for (long i = 0; i < k - 1; ++i) val *= kappa;
    }
    val.canonicalize();
    return val > 1;
}

}  // namespace bianchi
