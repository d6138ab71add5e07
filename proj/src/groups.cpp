#include "bca/groups.hpp"

#include <algorithm>

#include "bca/errors.hpp"
#include "bca/rational_linalg.hpp"

namespace bca {

FiniteGroupTable FiniteGroupTable::trivial() { return cyclic(1); }

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t order) {
    FiniteGroupTable f;
    f.size = order;
    f.mult.assign(order, std::vector<int>(order));
    f.inverse.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b)
            f.mult[a][b] = static_cast<int>((a + b) % order);
        f.inverse[a] = static_cast<int>((order - a) % order);
    }
    f.identity = 0;
    return f;
}

void validate(const FiniteGroupTable& f) {
    const std::size_t n = f.size;
    if (n == 0) throw ValidationError("finite group must be nonempty");
    if (f.mult.size() != n || f.inverse.size() != n)
        throw ValidationError("finite group table has wrong shape");
    auto in_range = [&](int x) { return x >= 0 && static_cast<std::size_t>(x) < n; };
    if (!in_range(f.identity)) throw ValidationError("finite group identity out of range");
    for (const auto& row : f.mult) {
        if (row.size() != n) throw ValidationError("finite group table has wrong shape");
        for (int x : row)
            if (!in_range(x)) throw ValidationError("finite group table entry out of range");
    }
    for (int x : f.inverse)
        if (!in_range(x)) throw ValidationError("finite group inverse out of range");
    for (std::size_t a = 0; a < n; ++a) {
        if (f.mult[f.identity][a] != static_cast<int>(a) ||
            f.mult[a][f.identity] != static_cast<int>(a))
            throw ValidationError("finite group identity law fails");
        if (f.mult[a][f.inverse[a]] != f.identity || f.mult[f.inverse[a]][a] != f.identity)
            throw ValidationError("finite group inverse law fails");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (f.mult[f.mult[a][b]][c] != f.mult[a][f.mult[b][c]])
                    throw ValidationError("finite group associativity fails");
}

void validate(const VAGroup& g) {
    validate(g.F);
    if (g.action.size() != g.F.size)
        throw ValidationError("need one action matrix per finite-group element");
    for (const auto& m : g.action) {
        if (m.size() != g.n) throw ValidationError("action matrix has wrong shape");
        for (const auto& row : m)
            if (row.size() != g.n) throw ValidationError("action matrix has wrong shape");
        Int det = integer_determinant(m);
        if (det != 1 && det != -1)
            throw ValidationError("action matrices must have determinant +-1");
    }
    // identity acts trivially, and the action is a homomorphism
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            if (g.action[g.F.identity][i][j] != Int(i == j ? 1 : 0))
                throw ValidationError("identity must act as the identity matrix");
    for (std::size_t a = 0; a < g.F.size; ++a)
        for (std::size_t b = 0; b < g.F.size; ++b)
            if (integer_matrix_multiply(g.action[a], g.action[b]) !=
                g.action[static_cast<std::size_t>(g.F.mult[a][b])])
                throw ValidationError("action is not a homomorphism");
}

GroupElement identity_element(const VAGroup& g) {
    return {zero_vector(g.n), g.F.identity};
}

GroupElement multiply(const VAGroup& g, const GroupElement& a, const GroupElement& b) {
    return {add(a.vec, apply_matrix(g.action[static_cast<std::size_t>(a.f)], b.vec)),
            g.F.multiply(a.f, b.f)};
}

GroupElement inverse(const VAGroup& g, const GroupElement& a) {
    int fi = g.F.inverse[static_cast<std::size_t>(a.f)];
    return {negated(apply_matrix(g.action[static_cast<std::size_t>(fi)], a.vec)), fi};
}

void validate(const VAGroup& g, const GenMap& gens) {
    for (const auto& l : gens.alphabet.letters()) {
        auto it = gens.images.find(l.symbol);
        if (it == gens.images.end())
            throw ValidationError("letter '" + l.symbol + "' has no image");
        if (it->second.vec.size() != g.n ||
            it->second.f < 0 || static_cast<std::size_t>(it->second.f) >= g.F.size)
            throw ValidationError("generator image outside the group");
        auto inv = gens.images.find(l.inverse);
        if (inv == gens.images.end())
            throw ValidationError("letter '" + l.inverse + "' has no image");
        if (!(inv->second == inverse(g, it->second)))
            throw ValidationError("image of '" + l.inverse + "' must invert image of '" +
                                  l.symbol + "'");
    }
}

GroupElement evaluate(const VAGroup& g, const GenMap& gens, const Word& w) {
    GroupElement acc = identity_element(g);
    for (const auto& x : w) {
        auto it = gens.images.find(x);
        if (it == gens.images.end()) throw ValidationError("unknown letter '" + x + "'");
        acc = multiply(g, acc, it->second);
    }
    return acc;
}

bool wp_member(const VAGroup& g, const GenMap& gens, const Word& w) {
    return evaluate(g, gens, w) == identity_element(g);
}

BlindAutomaton build_wp_automaton(const VAGroup& g, const GenMap& gens) {
    validate(g);
    validate(g, gens);
    BlindAutomaton a;
    a.dim = g.n;
    a.alphabet = gens.alphabet;
    for (std::size_t f = 0; f < g.F.size; ++f) a.states.push_back(std::to_string(f));
    a.initial = g.F.identity;
    a.terminals = {g.F.identity};
    // The run state carries the finite part of the prefix product and the
    // counters its vector part: from state f, letter x with image (v, h)
    // moves to f*h and adds action(f) v.
    for (const auto& l : gens.alphabet.letters()) {
        const GroupElement& image = gens.images.at(l.symbol);
        for (std::size_t f = 0; f < g.F.size; ++f) {
            a.edges.push_back({static_cast<int>(f), apply_matrix(g.action[f], image.vec),
                               l.symbol, g.F.mult[f][static_cast<std::size_t>(image.f)]});
        }
    }
    validate(a);
    return a;
}

Int exchange_index(const Word& w, const std::string& x, const std::string& y) {
    Int pairs = 0;
    Int ys_seen = 0;
    for (const auto& letter : w) {
        if (letter == y) {
            ++ys_seen;
        } else if (letter == x) {
            pairs += ys_seen;
        } else {
            throw ValidationError("exchange index is defined over {" + x + "," + y +
                                  "} only; saw '" + letter + "'");
        }
    }
    return pairs;
}

Word build_t1(std::size_t n, const std::string& x, const std::string& y) {
    if (n < 1) throw ValidationError("block word needs n >= 1");
    Word w;
    for (std::size_t k = 1; k <= n; ++k) {
        w.push_back(x);
        for (std::size_t i = 0; i < k; ++i) w.push_back(y);
    }
    return w;
}

Word Factorization::concatenated() const {
    Word w;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        w.insert(w.end(), separators[i].begin(), separators[i].end());
        w.insert(w.end(), factors[i].begin(), factors[i].end());
    }
    if (!separators.empty())
        w.insert(w.end(), separators.back().begin(), separators.back().end());
    return w;
}

void validate_factorization(const Factorization& f, const Word& w) {
    if (f.separators.size() != f.factors.size() + 1)
        throw ValidationError("factorization needs one more separator than factors");
    for (const auto& factor : f.factors)
        if (factor.empty()) throw ValidationError("designated factors must be nonempty");
    if (f.concatenated() != w)
        throw ValidationError("factorization does not concatenate to the word");
}

Word swap_blocks(const Factorization& f, std::size_t r, std::size_t s) {
    if (r < 1 || r >= s || s > f.factors.size())
        throw ValidationError("swap indices must satisfy 1 <= r < s <= p");
    Factorization g = f;
    std::swap(g.factors[r - 1], g.factors[s - 1]);
    return g.concatenated();
}

std::optional<std::pair<std::size_t, std::size_t>> interchange_search(
    const std::function<bool(const Word&)>& accept_fn, const Word& w, const Factorization& f) {
    validate_factorization(f, w);
    if (f.factors.empty()) throw ValidationError("interchange search needs at least one factor");
    if (!accept_fn(w))
        throw ValidationError("interchange search requires an accepted word");
    for (std::size_t r = 1; r <= f.factors.size(); ++r)
        for (std::size_t s = r + 1; s <= f.factors.size(); ++s)
            if (accept_fn(swap_blocks(f, r, s))) return std::make_pair(r, s);
    return std::nullopt;
}

}  // namespace bca
