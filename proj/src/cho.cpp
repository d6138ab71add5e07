#include "bca/cho.hpp"

#include <algorithm>
#include <set>

#include "bca/errors.hpp"

namespace bca {

namespace {

bool all_nonnegative(const IntVector& v) {
    for (const Int& x : v)
        if (x < 0) return false;
    return true;
}

}  // namespace

void validate(const ChoAutomaton& b) {
    std::set<std::string> seen;
    for (const auto& s : b.states)
        if (!seen.insert(s).second) throw ValidationError("duplicate state name '" + s + "'");
    auto check_state = [&](int q, const char* role) {
        if (q < 0 || static_cast<std::size_t>(q) >= b.states.size())
            throw ValidationError(std::string("invalid ") + role + " state index");
    };
    check_state(b.initial, "initial");
    for (const auto& e : b.edges) {
        check_state(e.src, "edge source");
        check_state(e.dst, "edge target");
        if (e.inc.size() != b.k)
            throw ValidationError("edge increment dimension differs from counter count");
        if (!all_nonnegative(e.inc))
            throw ValidationError("counter increments must be nonnegative");
        if (!b.alphabet.contains(e.input))
            throw ValidationError("edge reads unknown letter '" + e.input + "'");
    }
    if (b.accept_sets.size() != b.states.size())
        throw ValidationError("each state needs an accept set (possibly empty)");
    for (const auto& s : b.accept_sets) {
        if (s.dim != b.k) throw ValidationError("accept set dimension differs from counter count");
        for (const auto& c : s.components) {
            if (!all_nonnegative(c.offset()))
                throw ValidationError("accept set offsets must be nonnegative");
            for (const auto& p : c.periods())
                if (!all_nonnegative(p))
                    throw ValidationError("accept set periods must be nonnegative");
        }
    }
}

bool cho_accept(const ChoAutomaton& b, const Word& w, const ChoLimits& limits) {
    for (const auto& x : w)
        if (!b.alphabet.contains(x)) throw ValidationError("word contains unknown letter '" + x + "'");
    std::vector<std::set<IntVector>> row(b.states.size());
    row[static_cast<std::size_t>(b.initial)].insert(zero_vector(b.k));
    for (const auto& letter : w) {
        std::vector<std::set<IntVector>> next(b.states.size());
        std::size_t total = 0;
        for (const auto& e : b.edges) {
            if (e.input != letter) continue;
            for (const auto& g : row[static_cast<std::size_t>(e.src)]) {
                if (next[static_cast<std::size_t>(e.dst)].insert(add(g, e.inc)).second) ++total;
                if (total > limits.max_vectors)
                    throw ResourceLimitError("reachable counter-vector cap exceeded");
            }
        }
        row = std::move(next);
    }
    for (std::size_t v = 0; v < b.states.size(); ++v)
        for (const auto& g : row[v])
            if (member(b.accept_sets[v], g)) return true;
    return false;
}

bool is_deterministic_cho(const ChoAutomaton& b) {
    std::set<std::pair<int, std::string>> seen;
    for (const auto& e : b.edges)
        if (!seen.insert({e.src, e.input}).second) return false;
    return true;
}

BlindAutomaton cho_to_blind(const ChoAutomaton& b) {
    validate(b);
    BlindAutomaton a;
    a.dim = b.k;
    a.alphabet = b.alphabet;
    a.states = b.states;
    a.initial = b.initial;
    for (const auto& e : b.edges)
        a.edges.push_back({e.src, e.inc, e.input, e.dst});

    std::set<std::string> names(a.states.begin(), a.states.end());
    for (std::size_t p = 0; p < b.states.size(); ++p) {
        const SemilinearSet& s = b.accept_sets[p];
        for (std::size_t i = 0; i < s.components.size(); ++i) {
            std::string name = b.states[p] + "#" + std::to_string(i);
            while (names.count(name)) name += "#";
            names.insert(name);
            int fresh = static_cast<int>(a.states.size());
            a.states.push_back(name);
            a.terminals.push_back(fresh);
            const LinearSet& comp = s.components[i];
            a.edges.push_back({static_cast<int>(p), negated(comp.offset()), std::nullopt, fresh});
            for (const auto& period : comp.periods())
                a.edges.push_back({fresh, negated(period), std::nullopt, fresh});
        }
    }
    std::sort(a.terminals.begin(), a.terminals.end());
    validate(a);
    return a;
}

ChoAutomaton blind_det_to_cho(const BlindAutomaton& a) {
    validate(a);
    if (!is_deterministic_blind(a))
        throw ValidationError("conversion requires a deterministic automaton without epsilon edges");
    ChoAutomaton b;
    b.k = 2 * a.dim;
    b.alphabet = a.alphabet;
    b.states = a.states;
    b.initial = a.initial;
    for (const auto& e : a.edges) {
        IntVector lifted(2 * a.dim, Int(0));
        for (std::size_t i = 0; i < a.dim; ++i) {
            if (e.inc[i] > 0)
                lifted[i] = e.inc[i];
            else
                lifted[a.dim + i] = -e.inc[i];
        }
        b.edges.push_back({e.src, std::move(lifted), *e.input, e.dst});
    }
    // accepted counters: equal positive and negative parts per coordinate
    std::vector<IntVector> diagonal;
    for (std::size_t i = 0; i < a.dim; ++i) {
        IntVector p(2 * a.dim, Int(0));
        p[i] = 1;
        p[a.dim + i] = 1;
        diagonal.push_back(std::move(p));
    }
    SemilinearSet accept{2 * a.dim, {LinearSet(zero_vector(2 * a.dim), diagonal)}};
    for (std::size_t q = 0; q < a.states.size(); ++q)
        b.accept_sets.push_back(a.is_terminal(static_cast<int>(q))
                                    ? accept
                                    : SemilinearSet::empty(2 * a.dim));
    validate(b);
    return b;
}

}  // namespace bca
