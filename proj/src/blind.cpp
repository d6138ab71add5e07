#include "bca/blind.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "bca/errors.hpp"

namespace bca {

int BlindAutomaton::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return static_cast<int>(i);
    return -1;
}

bool BlindAutomaton::is_terminal(int q) const {
    return std::binary_search(terminals.begin(), terminals.end(), q);
}

void validate(const BlindAutomaton& a) {
    std::set<std::string> seen;
    for (const auto& s : a.states)
        if (!seen.insert(s).second) throw ValidationError("duplicate state name '" + s + "'");
    auto check_state = [&](int q, const char* role) {
        if (q < 0 || static_cast<std::size_t>(q) >= a.states.size())
            throw ValidationError(std::string("invalid ") + role + " state index");
    };
    check_state(a.initial, "initial");
    for (int t : a.terminals) check_state(t, "terminal");
    if (!std::is_sorted(a.terminals.begin(), a.terminals.end()) ||
        std::adjacent_find(a.terminals.begin(), a.terminals.end()) != a.terminals.end())
        throw ValidationError("terminal list must be ascending and duplicate-free");
    for (const auto& e : a.edges) {
        check_state(e.src, "edge source");
        check_state(e.dst, "edge target");
        if (e.inc.size() != a.dim)
            throw ValidationError("edge increment dimension differs from automaton dimension");
        if (e.input && !a.alphabet.contains(*e.input))
            throw ValidationError("edge reads unknown letter '" + *e.input + "'");
    }
}

BlindAutomaton normalize(const RawAutomaton& raw) {
    BlindAutomaton a;
    a.dim = raw.dim;
    a.alphabet = raw.alphabet;
    a.states = raw.states;
    std::set<std::string> names(a.states.begin(), a.states.end());
    if (names.size() != a.states.size()) throw ValidationError("duplicate state name");
    auto require_state = [&](const std::string& s) {
        if (!names.count(s)) throw ValidationError("unknown state '" + s + "'");
    };
    require_state(raw.initial);
    for (const auto& t : raw.terminals) require_state(t);

    auto fresh_state = [&](const std::string& base) {
        std::string name = base;
        while (names.count(name)) name += "_";
        names.insert(name);
        a.states.push_back(name);
        return name;
    };

    std::vector<std::tuple<std::string, IntVector, std::optional<std::string>, std::string>> flat;
    for (std::size_t ei = 0; ei < raw.edges.size(); ++ei) {
        const RawEdge& e = raw.edges[ei];
        require_state(e.src);
        require_state(e.dst);
        if (e.inc.size() != raw.dim)
            throw ValidationError("edge increment dimension differs from automaton dimension");
        for (const auto& x : e.input)
            if (!raw.alphabet.contains(x))
                throw ValidationError("edge reads unknown letter '" + x + "'");
        if (e.input.size() <= 1) {
            std::optional<std::string> in;
            if (e.input.size() == 1) in = e.input[0];
            flat.emplace_back(e.src, e.inc, in, e.dst);
            continue;
        }
        // chain through fresh states; increment rides on the first edge
        std::string prev = e.src;
        for (std::size_t k = 0; k < e.input.size(); ++k) {
            std::string next =
                k + 1 == e.input.size()
                    ? e.dst
                    : fresh_state(e.src + "#" + std::to_string(ei) + "." + std::to_string(k));
            flat.emplace_back(prev, k == 0 ? e.inc : zero_vector(raw.dim),
                              std::optional<std::string>(e.input[k]), next);
            prev = next;
        }
    }

    a.initial = a.state_index(raw.initial);
    for (const auto& t : raw.terminals) a.terminals.push_back(a.state_index(t));
    std::sort(a.terminals.begin(), a.terminals.end());
    a.terminals.erase(std::unique(a.terminals.begin(), a.terminals.end()), a.terminals.end());
    for (auto& [src, inc, in, dst] : flat)
        a.edges.push_back({a.state_index(src), std::move(inc), std::move(in), a.state_index(dst)});
    validate(a);
    return a;
}

ReachTable epsilon_reach(const BlindAutomaton& a, const Limits& limits) {
    const std::size_t n = a.states.size();
    ReachTable r(n, std::vector<SemilinearSet>(n, SemilinearSet::empty(a.dim)));
    for (std::size_t p = 0; p < n; ++p)
        r[p][p] = SemilinearSet::singleton(zero_vector(a.dim));
    for (const auto& e : a.edges) {
        if (e.input) continue;
        r[e.src][e.dst] =
            unite(r[e.src][e.dst], SemilinearSet::singleton(e.inc), limits);
    }
    // All-pairs closure, eliminating states in ascending index order.
    for (std::size_t k = 0; k < n; ++k) {
        SemilinearSet loop = star(r[k][k], limits);
        std::vector<SemilinearSet> row = r[k];
        std::vector<SemilinearSet> col(n, SemilinearSet::empty(a.dim));
        for (std::size_t p = 0; p < n; ++p) col[p] = r[p][k];
        for (std::size_t p = 0; p < n; ++p) {
            if (col[p].is_empty()) continue;
            SemilinearSet through = sum(col[p], loop, limits);
            for (std::size_t q = 0; q < n; ++q) {
                if (row[q].is_empty()) continue;
                r[p][q] = unite(r[p][q], sum(through, row[q], limits), limits);
            }
        }
    }
    return r;
}

BlindAutomaton reverse_automaton(const BlindAutomaton& a) {
    BlindAutomaton r = a;
    r.edges.clear();
    for (const auto& e : a.edges) {
        std::optional<std::string> in;
        if (e.input) in = a.alphabet.inverse_of(*e.input);
        r.edges.push_back({e.dst, negated(e.inc), std::move(in), e.src});
    }
    return r;
}

AutomatonContext::AutomatonContext(BlindAutomaton a, Limits limits)
    : automaton_(std::move(a)), limits_(limits) {
    validate(automaton_);
}

const ReachTable& AutomatonContext::reach() {
    if (!reach_) reach_ = epsilon_reach(automaton_, limits_);
    return *reach_;
}

const BlindAutomaton& AutomatonContext::reversed() {
    if (!reversed_) reversed_ = reverse_automaton(automaton_);
    return *reversed_;
}

const ReachTable& AutomatonContext::reversed_reach() {
    if (!reversed_reach_) reversed_reach_ = epsilon_reach(reversed(), limits_);
    return *reversed_reach_;
}

namespace {

void check_word(const Alphabet& alphabet, const Word& w) {
    for (const auto& x : w)
        if (!alphabet.contains(x)) throw ValidationError("word contains unknown letter '" + x + "'");
}

RegisterSets dp_from(const BlindAutomaton& a, const ReachTable& reach, RegisterSets row,
                     const Word& w, const Limits& limits) {
    const std::size_t n = a.states.size();
    for (const auto& letter : w) {
        RegisterSets mid(n, SemilinearSet::empty(a.dim));
        for (const auto& e : a.edges) {
            if (!e.input || *e.input != letter) continue;
            if (row[e.src].is_empty()) continue;
            mid[e.dst] = unite(mid[e.dst],
                               sum(row[e.src], SemilinearSet::singleton(e.inc), limits), limits);
        }
        RegisterSets next(n, SemilinearSet::empty(a.dim));
        for (std::size_t p = 0; p < n; ++p) {
            if (mid[p].is_empty()) continue;
            for (std::size_t q = 0; q < n; ++q) {
                if (reach[p][q].is_empty()) continue;
                next[q] = unite(next[q], sum(mid[p], reach[p][q], limits), limits);
            }
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

RegisterSets reachable_register_set(AutomatonContext& ctx, const Word& w) {
    const BlindAutomaton& a = ctx.automaton();
    check_word(a.alphabet, w);
    const ReachTable& reach = ctx.reach();
    RegisterSets start = reach[static_cast<std::size_t>(a.initial)];
    return dp_from(a, reach, std::move(start), w, ctx.limits());
}

RegisterSets reachable_register_set(const BlindAutomaton& a, const Word& w) {
    AutomatonContext ctx(a);
    return reachable_register_set(ctx, w);
}

RegisterSets coreachable_register_set(AutomatonContext& ctx, const Word& w) {
    const BlindAutomaton& a = ctx.automaton();
    check_word(a.alphabet, w);
    const BlindAutomaton& rev = ctx.reversed();
    const ReachTable& reach = ctx.reversed_reach();
    const std::size_t n = a.states.size();
    // start row: epsilon reach from any terminal, in the reversed automaton
    RegisterSets start(n, SemilinearSet::empty(a.dim));
    for (int t : a.terminals)
        for (std::size_t q = 0; q < n; ++q)
            start[q] = unite(start[q], reach[static_cast<std::size_t>(t)][q], ctx.limits());
    RegisterSets sets =
        dp_from(rev, reach, std::move(start), inverse_word(a.alphabet, w), ctx.limits());
    for (auto& s : sets) s = negate(s);
    return sets;
}

bool accept(AutomatonContext& ctx, const Word& w) {
    RegisterSets row = reachable_register_set(ctx, w);
    const IntVector zero = zero_vector(ctx.automaton().dim);
    for (int t : ctx.automaton().terminals)
        if (member(row[static_cast<std::size_t>(t)], zero)) return true;
    return false;
}

bool accept(const BlindAutomaton& a, const Word& w) {
    AutomatonContext ctx(a);
    return accept(ctx, w);
}

bool run_accepts(const BlindAutomaton& a, const Run& run, const Word& w) {
    if (run.trace.size() != run.edge_indices.size() + 1) return false;
    if (!run.trace.empty() && !is_zero(run.trace.front())) return false;
    int state = a.initial;
    IntVector counter = zero_vector(a.dim);
    Word read;
    for (std::size_t i = 0; i < run.edge_indices.size(); ++i) {
        if (run.edge_indices[i] >= a.edges.size()) return false;
        const BlindEdge& e = a.edges[run.edge_indices[i]];
        if (e.src != state) return false;
        state = e.dst;
        add_in_place(counter, e.inc);
        if (counter != run.trace[i + 1]) return false;
        if (e.input) read.push_back(*e.input);
    }
    return read == w && is_zero(counter) && a.is_terminal(state);
}

namespace {

struct RunSearch {
    const BlindAutomaton& a;
    const Word& w;
    const std::vector<int>& targets;
    const IntVector& total;
    Int eps_budget;
    std::size_t node_cap;
    std::size_t nodes = 0;
    bool exhausted = false;
    std::vector<std::size_t> path;
    std::set<std::tuple<std::size_t, int, Int, IntVector>> failed;

    bool dfs(std::size_t pos, int state, Int eps_used, IntVector counter) {
        if (nodes++ > node_cap) {
            exhausted = true;
            return false;
        }
        if (pos == w.size() && counter == total &&
            std::find(targets.begin(), targets.end(), state) != targets.end())
            return true;
        auto key = std::make_tuple(pos, state, eps_used, counter);
        if (failed.count(key)) return false;
        for (std::size_t i = 0; i < a.edges.size(); ++i) {
            const BlindEdge& e = a.edges[i];
            if (e.src != state) continue;
            if (e.input) {
                if (pos == w.size() || *e.input != w[pos]) continue;
                path.push_back(i);
                if (dfs(pos + 1, e.dst, 0, add(counter, e.inc))) return true;
                path.pop_back();
            } else {
                if (eps_used >= eps_budget) continue;
                path.push_back(i);
                if (dfs(pos, e.dst, eps_used + 1, add(counter, e.inc))) return true;
                path.pop_back();
            }
        }
        failed.insert(std::move(key));
        return false;
    }
};

Run make_run(const BlindAutomaton& a, const std::vector<std::size_t>& edges) {
    Run run;
    run.edge_indices = edges;
    run.trace.push_back(zero_vector(a.dim));
    IntVector counter = zero_vector(a.dim);
    for (std::size_t i : edges) {
        add_in_place(counter, a.edges[i].inc);
        run.trace.push_back(counter);
    }
    return run;
}

}  // namespace

std::optional<Run> find_run(const BlindAutomaton& a, const Word& w, int from,
                            const std::vector<int>& targets, const IntVector& total,
                            const Int& epsilon_budget, std::size_t node_cap) {
    check_word(a.alphabet, w);
    RunSearch search{a, w, targets, total, epsilon_budget, node_cap, 0, false, {}, {}};
    if (!search.dfs(0, from, 0, zero_vector(a.dim))) return std::nullopt;
    return make_run(a, search.path);
}

CertificateResult accept_with_certificate(AutomatonContext& ctx, const Word& w) {
    const BlindAutomaton& a = ctx.automaton();
    RegisterSets row = reachable_register_set(ctx, w);
    const IntVector zero = zero_vector(a.dim);
    Int max_coeff = 0;
    bool accepted = false;
    for (int t : a.terminals) {
        auto witness = member_witness(row[static_cast<std::size_t>(t)], zero);
        if (!witness) continue;
        accepted = true;
        for (const Int& c : witness->coefficients) max_coeff = std::max(max_coeff, c);
    }
    if (!accepted) return {CertificateStatus::rejected, std::nullopt};
    Int budget = Int(a.states.size()) * (1 + max_coeff);
    auto run = find_run(a, w, a.initial, a.terminals, zero, budget);
    if (!run) return {CertificateStatus::budget_exceeded, std::nullopt};
    return {CertificateStatus::found, std::move(run)};
}

AutomatonConstants automaton_constants(AutomatonContext& ctx) {
    const BlindAutomaton& a = ctx.automaton();
    const ReachTable& reach = ctx.reach();
    AutomatonConstants k;
    k.R = a.states.size();
    k.F = 0;
    k.K = 0;
    for (const auto& e : a.edges) k.F = std::max(k.F, norm(e.inc));
    std::set<IntVector> period_set;
    for (const auto& row : reach) {
        for (const auto& s : row) {
            k.F = std::max(k.F, constant_bound(s));
            k.K = std::max(k.K, generator_bound(s));
            for (const auto& comp : s.components)
                for (const auto& p : comp.periods()) {
                    period_set.insert(p);
                    period_set.insert(negated(p));
                }
        }
    }
    // One dominating bound-constant computation covers every sub-map whose
    // images are drawn from the period set: currying only shrinks L and M.
    if (period_set.size() > 16)
        throw ResourceLimitError("too many distinct reach-table periods for constants");
    LinearMap full;
    full.codomain_dim = a.dim;
    full.images.assign(period_set.begin(), period_set.end());
    full.domain_dim = full.images.size();
    BoundConstants lm = compute_LM(full);
    k.C = Rational(2) * (lm.L * Rational(k.K) + 1);
    k.D = Rational(k.K) * lm.M + 1;  // strictly exceeds every per-pair value
    k.P = Rational(2) * k.C * Rational(k.F);
    k.Q = k.C * Rational(k.F) + k.D;
    return k;
}

ShortWitnessResult short_witness(AutomatonContext& ctx, const Word& w) {
    const BlindAutomaton& a = ctx.automaton();
    check_word(a.alphabet, w);
    Word wbar = inverse_word(a.alphabet, w);
    Word round_trip = w;
    round_trip.insert(round_trip.end(), wbar.begin(), wbar.end());
    if (!accept(ctx, round_trip)) return {ShortWitnessStatus::not_word_problem, std::nullopt};

    RegisterSets forward = reachable_register_set(ctx, w);
    RegisterSets backward = coreachable_register_set(ctx, wbar);

    std::optional<ShortWitness> best;
    Int best_norm = 0;
    for (std::size_t q = 0; q < a.states.size(); ++q) {
        if (forward[q].is_empty() || backward[q].is_empty()) continue;
        auto result = intersect(forward[q], negate(backward[q]));
        if (!result.witness) continue;
        Int n = norm(*result.witness);
        if (!best || n < best_norm) {
            best = ShortWitness{static_cast<int>(q), *result.witness};
            best_norm = n;
        }
    }
    if (!best) throw std::logic_error("accepted round trip but no witness state found");
    return {ShortWitnessStatus::found, std::move(best)};
}

bool is_deterministic_blind(const BlindAutomaton& a) {
    std::set<std::pair<int, std::string>> seen;
    for (const auto& e : a.edges) {
        if (!e.input) return false;
        if (!seen.insert({e.src, *e.input}).second) return false;
    }
    return true;
}

}  // namespace bca
