#include "bca/selftest.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "bca/experiments.hpp"
#include "bca/heisenberg.hpp"
#include "bca/oracles.hpp"
#include "bca/samples.hpp"

namespace bca {

namespace {

// Coefficient budget that makes enumeration complete for members of norm
// <= cap: any member v has coefficients summing to at most L|v - s0| + M.
Int complete_budget(const LinearSet& s, const Int& cap) {
    if (s.periods().empty()) return 0;
    LinearMap sigma{s.periods().size(), s.dim(), s.periods()};
    BoundConstants lm = compute_LM(sigma);
    return ceil_rational(lm.L * Rational(cap + norm(s.offset())) + lm.M) + 5;
}

std::set<IntVector> members_up_to(const SemilinearSet& s, const Int& cap) {
    std::set<IntVector> out;
    for (const auto& c : s.components) {
        auto all = oracle_linear_members(c, complete_budget(c, cap));
        for (const auto& v : all)
            if (norm(v) <= cap) out.insert(v);
    }
    return out;
}

Int complete_budget_set(const SemilinearSet& s, const Int& cap) {
    Int budget = 0;
    for (const auto& c : s.components) budget = std::max(budget, complete_budget(c, cap));
    return budget;
}

bool suite_linear_map_bounds(Rng& rng) {
    // fixed cases first
    LinearMap identity{2, 2, {IntVector{1, 0}, IntVector{0, 1}}};
    BoundConstants id_lm = compute_LM(identity);
    if (id_lm.L != 1 || id_lm.M != 0) return false;

    LinearMap plus_minus{2, 1, {IntVector{Int(1)}, IntVector{Int(-1)}}};
    BoundConstants pm = compute_LM(plus_minus);
    for (long long v = -20; v <= 20; ++v) {
        auto u = bounded_preimage(plus_minus, IntVector{Int(v)}, pm);
        if (!u) return false;
        if (apply_map(plus_minus, *u) != IntVector{Int(v)}) return false;
        if (Rational(norm(*u)) > pm.L * Rational(abs_int(Int(v))) + pm.M) return false;
    }

    for (int trial = 0; trial < 30; ++trial) {
        LinearMap sigma = random_linear_map(rng, 3, 3, 3);
        BoundConstants lm = compute_LM(sigma);
        Int cap = 6;
        Int budget = ceil_rational(lm.L * Rational(cap) + lm.M) + 5;
        auto table = oracle_image_table(sigma, budget, cap);
        for (const auto& [v, best] : table) {
            auto u = bounded_preimage(sigma, v, lm);
            if (!u) return false;
            if (apply_map(sigma, *u) != v) return false;
            if (Rational(norm(*u)) > lm.L * Rational(norm(v)) + lm.M) return false;
        }
        // absent values stay absent
        bool ok = true;
        enumerate_norm_ball(sigma.codomain_dim, 3, [&](const IntVector& v) {
            if (!ok || table.count(v)) return;
            if (bounded_preimage(sigma, v, lm)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool suite_membership(Rng& rng) {
    for (int trial = 0; trial < 40; ++trial) {
        SemilinearSet s = random_semilinear(rng, 2, 2, 2, 3, 4);
        auto expected = members_up_to(s, 6);
        bool ok = true;
        enumerate_norm_ball(2, 6, [&](const IntVector& v) {
            if (!ok) return;
            if (member(s, v) != (expected.count(v) > 0)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool suite_set_algebra(Rng& rng) {
    for (int trial = 0; trial < 25; ++trial) {
        SemilinearSet s = random_semilinear(rng, 1, 2, 2, 3, 3);
        SemilinearSet t = random_semilinear(rng, 1, 2, 2, 3, 3);
        if (!(negate(negate(s)) == s)) return false;

        auto s_members = members_up_to(s, 12);
        auto t_members = members_up_to(t, 12);

        // sum membership against pairwise enumeration, on a small ball
        SemilinearSet st = sum(s, t);
        bool ok = true;
        enumerate_norm_ball(1, 6, [&](const IntVector& v) {
            if (!ok) return;
            bool expected = false;
            for (const auto& a : s_members) {
                for (const auto& b : t_members)
                    if (add(a, b) == v) {
                        expected = true;
                        break;
                    }
                if (expected) break;
            }
            if (member(st, v) != expected) ok = false;
        });
        if (!ok) return false;

        // union is extensionally the disjunction
        SemilinearSet u = unite(s, t);
        enumerate_norm_ball(1, 6, [&](const IntVector& v) {
            if (!ok) return;
            if (member(u, v) != (member(s, v) || member(t, v))) ok = false;
        });
        if (!ok) return false;

        // star against bounded-sum closure
        SemilinearSet small = random_semilinear(rng, 1, 2, 1, 2, 2);
        SemilinearSet closed = star(small);
        auto closure = oracle_star_members(small, complete_budget_set(small, 30), 6, 30);
        enumerate_norm_ball(1, 5, [&](const IntVector& v) {
            if (!ok) return;
            bool expected = closure.count(v) > 0;
            if (member(closed, v) != expected) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool suite_intersection(Rng& rng) {
    {
        SemilinearSet evens{1, {LinearSet(IntVector{Int(0)}, {IntVector{Int(2)}})}};
        SemilinearSet threes{1, {LinearSet(IntVector{Int(3)}, {IntVector{Int(3)}})}};
        auto r = intersect(evens, threes);
        if (!r.witness || *r.witness != IntVector{Int(6)}) return false;
        SemilinearSet odds{1, {LinearSet(IntVector{Int(1)}, {IntVector{Int(2)}})}};
        if (intersect(evens, odds).witness) return false;
    }
    for (int trial = 0; trial < 25; ++trial) {
        SemilinearSet s = random_semilinear(rng, 2, 2, 2, 3, 4);
        SemilinearSet t = random_semilinear(rng, 2, 2, 2, 3, 4);
        auto r = intersect(s, t);
        Int cap = ceil_rational(r.bound);
        auto s_members = members_up_to(s, cap);
        std::optional<IntVector> expected;
        Int expected_norm = 0;
        for (const auto& v : s_members) {
            if (!member(t, v)) continue;
            if (!expected || norm(v) < expected_norm) {
                expected = v;
                expected_norm = norm(v);
            }
        }
        if (expected.has_value() != r.witness.has_value()) return false;
        if (r.witness) {
            if (norm(*r.witness) != expected_norm) return false;
            if (Rational(norm(*r.witness)) >= r.bound) return false;
            if (!member(s, *r.witness) || !member(t, *r.witness)) return false;
        }
    }
    return true;
}

bool suite_blind_accept(Rng& rng) {
    BlindAutomaton z = wp_z_automaton();
    AutomatonContext ctx(z);
    if (!accept(ctx, parse_word("a a'"))) return false;
    if (accept(ctx, parse_word("a a"))) return false;
    if (!accept(ctx, parse_word("a' a a a' a' a"))) return false;
    if (!accept(ctx, {})) return false;

    for (int trial = 0; trial < 40; ++trial) {
        BlindAutomaton a = random_blind_automaton(rng, 2, 3, 6, 0.3);
        AutomatonContext actx(a);
        bool ok = true;
        for_each_word(a.alphabet, 3, [&](const Word& w) {
            if (!ok) return;
            if (accept(actx, w) != oracle_accept_paths(a, w, 15)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool suite_epsilon_reach(Rng& rng) {
    for (int trial = 0; trial < 30; ++trial) {
        BlindAutomaton a = random_blind_automaton(rng, 2, 3, 5, 0.8);
        ReachTable table = epsilon_reach(a);
        for (std::size_t p = 0; p < a.states.size(); ++p) {
            if (!member(table[p][p], zero_vector(2))) return false;
            for (std::size_t q = 0; q < a.states.size(); ++q) {
                auto values =
                    oracle_epsilon_values(a, static_cast<int>(p), static_cast<int>(q), 6);
                for (const auto& v : values)
                    if (!member(table[p][q], v)) return false;
            }
        }
    }
    return true;
}

bool suite_cho(Rng& rng) {
    ChoAutomaton even = sample_cho_even();
    if (!cho_accept(even, parse_word("a a"))) return false;
    if (cho_accept(even, parse_word("a"))) return false;
    BlindAutomaton blind_even = cho_to_blind(even);
    AutomatonContext even_ctx(blind_even);
    for (std::size_t len = 0; len <= 8; ++len) {
        Word w(len, "a");
        bool expected = len >= 2 && len % 2 == 0;
        if (cho_accept(even, w) != expected) return false;
        if (accept(even_ctx, w) != expected) return false;
    }

    for (int trial = 0; trial < 15; ++trial) {
        ChoAutomaton b = random_cho_automaton(rng, 2, 3, 5);
        BlindAutomaton a = cho_to_blind(b);
        AutomatonContext ctx(a);
        bool ok = true;
        for_each_word(b.alphabet, 4, [&](const Word& w) {
            if (!ok) return;
            if (cho_accept(b, w) != accept(ctx, w)) ok = false;
        });
        if (!ok) return false;
    }
    for (int trial = 0; trial < 15; ++trial) {
        BlindAutomaton a = random_deterministic_blind(rng, 2, 3);
        ChoAutomaton b = blind_det_to_cho(a);
        if (!is_deterministic_cho(b)) return false;
        AutomatonContext ctx(a);
        bool ok = true;
        for_each_word(a.alphabet, 4, [&](const Word& w) {
            if (!ok) return;
            if (accept(ctx, w) != cho_accept(b, w)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool suite_word_problem(Rng&) {
    struct Case {
        VAGroup g;
        GenMap gens;
    };
    std::vector<Case> cases;
    {
        VAGroup g = make_free_abelian(2);
        GenMap gens = standard_generators(g);
        cases.push_back({std::move(g), std::move(gens)});
    }
    {
        VAGroup g = make_infinite_dihedral();
        GenMap gens = dihedral_generators(g);
        cases.push_back({std::move(g), std::move(gens)});
    }
    for (const auto& c : cases) {
        BlindAutomaton a = build_wp_automaton(c.g, c.gens);
        AutomatonContext ctx(a);
        bool ok = true;
        for_each_word(c.gens.alphabet, 5, [&](const Word& w) {
            if (!ok) return;
            if (accept(ctx, w) != wp_member(c.g, c.gens, w)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool suite_interchange(Rng&) {
    if (build_t1(3) != parse_word("x y x y y x y y y")) return false;
    if (exchange_index(build_t1(3)) != 4) return false;
    InterchangeReport r = heisenberg_interchange_experiment(3);
    if (!r.ok() || r.pairs.size() != 3) return false;
    std::vector<Int> deltas;
    for (const auto& p : r.pairs) deltas.push_back(p.index_delta);
    if (deltas != std::vector<Int>{1, 4, 1}) return false;

    // same-element iff same exchange index, for words with equal counts
    for (std::size_t len = 0; len <= 6; ++len) {
        std::vector<Word> words;
        for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
            Word w;
            for (std::size_t i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? "y" : "x");
            words.push_back(std::move(w));
        }
        auto count_x = [](const Word& w) {
            return std::count(w.begin(), w.end(), std::string("x"));
        };
        for (const auto& u : words) {
            for (const auto& v : words) {
                if (count_x(u) != count_x(v)) continue;
                bool same_elem = heisenberg_evaluate(u) == heisenberg_evaluate(v);
                bool same_index = exchange_index(u) == exchange_index(v);
                if (same_elem != same_index) return false;
            }
        }
    }
    return true;
}

bool suite_growth(Rng&) {
    VAGroup z2 = make_free_abelian(2);
    GenMap gens2 = standard_generators(z2);
    GrowthTable t2 = ball_sizes(z2, gens2, 8);
    for (std::size_t r = 0; r <= 8; ++r)
        if (t2.sizes[r] != 2 * r * r + 2 * r + 1) return false;

    VAGroup z1 = make_free_abelian(1);
    GenMap gens1 = standard_generators(z1);
    GrowthTable t1 = ball_sizes(z1, gens1, 20);
    if (t1.degree_estimate < Rational(9, 10) || t1.degree_estimate > Rational(11, 10))
        return false;

    BlindAutomaton a = wp_z_automaton();
    AutomatonContext ctx(a);
    WitnessReport w = witness_map_experiment(ctx, z1, gens1, 4);
    return w.ok();
}

}  // namespace

bool run_selftest(std::uint64_t seed, std::ostream& out) {
    struct Suite {
        const char* name;
        std::function<bool(Rng&)> fn;
    };
    const std::vector<Suite> suites = {
        {"linear-map-bounds", suite_linear_map_bounds},
        {"membership", suite_membership},
        {"set-algebra", suite_set_algebra},
        {"intersection", suite_intersection},
        {"blind-accept", suite_blind_accept},
        {"epsilon-reach", suite_epsilon_reach},
        {"cho-conversions", suite_cho},
        {"word-problem", suite_word_problem},
        {"interchange", suite_interchange},
        {"growth", suite_growth},
    };
    bool all_ok = true;
    for (const auto& suite : suites) {
        Rng rng(seed ^ std::hash<std::string>{}(suite.name));
        bool ok = suite.fn(rng);
        out << (ok ? "[ok]   " : "[FAIL] ") << suite.name << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok;
}

}  // namespace bca
