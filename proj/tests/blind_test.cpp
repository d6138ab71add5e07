#include <doctest.h>

#include <set>

#include "bca/blind.hpp"
#include "bca/json_io.hpp"
#include "bca/oracles.hpp"
#include "bca/rng.hpp"
#include "bca/samples.hpp"

using namespace bca;

namespace {

IntVector iv(std::initializer_list<long long> xs) {
    IntVector v;
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

RawAutomaton as_raw(const BlindAutomaton& a) {
    RawAutomaton raw;
    raw.dim = a.dim;
    raw.alphabet = a.alphabet;
    raw.states = a.states;
    raw.initial = a.states[static_cast<std::size_t>(a.initial)];
    for (int t : a.terminals) raw.terminals.push_back(a.states[static_cast<std::size_t>(t)]);
    for (const auto& e : a.edges) {
        Word input;
        if (e.input) input.push_back(*e.input);
        raw.edges.push_back({a.states[static_cast<std::size_t>(e.src)], e.inc, input,
                             a.states[static_cast<std::size_t>(e.dst)]});
    }
    return raw;
}

// Acceptance for raw automata where an edge consumes its whole label,
// independent of normalize(); epsilon budget bounds loop use.
bool raw_accept(const RawAutomaton& a, const Word& w, std::size_t eps_budget) {
    using State = std::tuple<std::size_t, std::string, std::size_t, IntVector>;
    std::set<State> seen;
    std::vector<State> stack{{0, a.initial, 0, zero_vector(a.dim)}};
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        if (!seen.insert(s).second) continue;
        const auto& [pos, state, eps, counter] = s;
        if (pos == w.size() && is_zero(counter))
            for (const auto& t : a.terminals)
                if (t == state) return true;
        for (const auto& e : a.edges) {
            if (e.src != state) continue;
            if (e.input.empty()) {
                if (eps >= eps_budget) continue;
                stack.push_back({pos, e.dst, eps + 1, add(counter, e.inc)});
                continue;
            }
            if (pos + e.input.size() > w.size()) continue;
            bool match = true;
            for (std::size_t i = 0; i < e.input.size(); ++i)
                if (w[pos + i] != e.input[i]) match = false;
            if (!match) continue;
            stack.push_back({pos + e.input.size(), e.dst, eps, add(counter, e.inc)});
        }
    }
    return false;
}

}  // namespace

TEST_CASE("normalize keeps single-letter automata unchanged") {
    BlindAutomaton a = wp_z_automaton();
    BlindAutomaton b = normalize(as_raw(a));
    CHECK(automaton_to_json(a) == automaton_to_json(b));
}

TEST_CASE("normalize splits a two-letter edge through a fresh state") {
    RawAutomaton raw;
    raw.dim = 2;
    raw.alphabet.add_pair("a", "a'");
    raw.alphabet.add_pair("b", "b'");
    raw.states = {"p", "q"};
    raw.initial = "p";
    raw.terminals = {"q"};
    raw.edges.push_back({"p", iv({1, 0}), parse_word("a b"), "q"});
    BlindAutomaton a = normalize(raw);
    REQUIRE(a.states.size() == 3);
    REQUIRE(a.edges.size() == 2);
    CHECK(a.edges[0].inc == iv({1, 0}));
    CHECK(*a.edges[0].input == "a");
    CHECK(a.edges[1].inc == iv({0, 0}));
    CHECK(*a.edges[1].input == "b");
    CHECK(a.edges[0].dst == a.edges[1].src);
    // the split reaches q only through the full word, carrying (1,0)
    RegisterSets row = reachable_register_set(a, parse_word("a b"));
    CHECK(member(row[1], iv({1, 0})));
    CHECK(!accept(a, parse_word("a")));
    CHECK(!accept(a, parse_word("a b")));  // counter (1,0) never returns to zero
}

TEST_CASE("normalize preserves the language of word-labelled automata") {
    Rng rng(8001);
    for (int trial = 0; trial < 25; ++trial) {
        RawAutomaton raw;
        raw.dim = 1;
        raw.alphabet.add_pair("a", "a'");
        std::size_t states = static_cast<std::size_t>(rng.range(1, 3));
        for (std::size_t i = 0; i < states; ++i) raw.states.push_back("s" + std::to_string(i));
        raw.initial = "s0";
        raw.terminals = {raw.states[static_cast<std::size_t>(rng.range(0, states - 1))]};
        std::size_t edges = static_cast<std::size_t>(rng.range(1, 5));
        for (std::size_t i = 0; i < edges; ++i) {
            Word label;
            std::size_t len = static_cast<std::size_t>(rng.range(0, 3));
            for (std::size_t k = 0; k < len; ++k)
                label.push_back(rng.chance(0.5) ? "a" : "a'");
            raw.edges.push_back(
                {raw.states[static_cast<std::size_t>(rng.range(0, states - 1))],
                 iv({rng.range(-1, 1)}), label,
                 raw.states[static_cast<std::size_t>(rng.range(0, states - 1))]});
        }
        BlindAutomaton a = normalize(raw);
        AutomatonContext ctx(a);
        bool ok = true;
        for_each_word(raw.alphabet, 5, [&](const Word& w) {
            if (!ok) return;
            if (accept(ctx, w) != raw_accept(raw, w, 12)) ok = false;
        });
        CHECK(ok);
    }
}

TEST_CASE("epsilon reach without epsilon edges is the identity table") {
    BlindAutomaton a = wp_z2_automaton();
    ReachTable t = epsilon_reach(a);
    CHECK(t[0][0] == SemilinearSet::singleton(zero_vector(2)));
}

TEST_CASE("epsilon reach of a single loop pumps its increment") {
    RawAutomaton raw;
    raw.dim = 2;
    raw.alphabet.add_pair("a", "a'");
    raw.states = {"p"};
    raw.initial = "p";
    raw.terminals = {"p"};
    raw.edges.push_back({"p", iv({1, -1}), {}, "p"});
    BlindAutomaton a = normalize(raw);
    ReachTable t = epsilon_reach(a);
    for (long long k = 0; k <= 6; ++k) CHECK(member(t[0][0], iv({k, -k})));
    CHECK(!member(t[0][0], iv({1, 0})));
    CHECK(!member(t[0][0], iv({-1, 1})));
}

TEST_CASE("epsilon reach through opposite transfers pins the value") {
    RawAutomaton raw;
    raw.dim = 1;
    raw.alphabet.add_pair("a", "a'");
    raw.states = {"p", "q"};
    raw.initial = "p";
    raw.terminals = {"q"};
    raw.edges.push_back({"p", iv({1}), {}, "q"});
    raw.edges.push_back({"q", iv({-1}), {}, "p"});
    BlindAutomaton a = normalize(raw);
    ReachTable t = epsilon_reach(a);
    auto oracle = oracle_epsilon_values(a, 0, 1, 8);
    CHECK(oracle == std::set<IntVector>{iv({1})});
    for (long long v = -4; v <= 4; ++v)
        CHECK(member(t[0][1], iv({v})) == (v == 1));
}

TEST_CASE("every bounded epsilon path value lands in the reach table") {
    Rng rng(8002);
    for (int trial = 0; trial < 30; ++trial) {
        BlindAutomaton a = random_blind_automaton(rng, 2, 3, 5, 0.7);
        ReachTable t = epsilon_reach(a);
        for (std::size_t p = 0; p < a.states.size(); ++p) {
            CHECK(member(t[p][p], zero_vector(2)));
            for (std::size_t q = 0; q < a.states.size(); ++q)
                for (const auto& v :
                     oracle_epsilon_values(a, static_cast<int>(p), static_cast<int>(q), 6))
                    CHECK(member(t[p][q], v));
        }
    }
}

TEST_CASE("reversed reach table is the negated transpose") {
    Rng rng(8003);
    for (int trial = 0; trial < 25; ++trial) {
        BlindAutomaton a = random_blind_automaton(rng, 2, 3, 6, 0.6);
        ReachTable fwd = epsilon_reach(a);
        ReachTable bwd = epsilon_reach(reverse_automaton(a));
        for (std::size_t p = 0; p < a.states.size(); ++p)
            for (std::size_t q = 0; q < a.states.size(); ++q)
                CHECK(bwd[q][p] == negate(fwd[p][q]));
    }
}

TEST_CASE("register sets for the empty word are the initial reach row") {
    BlindAutomaton a = wp_z_automaton();
    AutomatonContext ctx(a);
    RegisterSets row = reachable_register_set(ctx, {});
    CHECK(row[0] == ctx.reach()[0][0]);
}

TEST_CASE("register sets track the counter on the free group of rank one") {
    BlindAutomaton a = wp_z_automaton();
    AutomatonContext ctx(a);
    RegisterSets row = reachable_register_set(ctx, parse_word("a a'"));
    CHECK(member(row[0], iv({0})));
    for (long long v = 1; v <= 3; ++v) {
        CHECK(!member(row[0], iv({v})));
        CHECK(!member(row[0], iv({-v})));
    }
}

TEST_CASE("register sets agree with bounded path enumeration") {
    Rng rng(8004);
    for (int trial = 0; trial < 25; ++trial) {
        BlindAutomaton a = random_blind_automaton(rng, 2, 4, 6, 0.4);
        AutomatonContext ctx(a);
        Word w = random_word(rng, a.alphabet, 3);
        RegisterSets row;
        try {
            row = reachable_register_set(ctx, w);
        } catch (const ResourceLimitError&) {
            continue;
        }
        auto oracle = oracle_register_values(a, w, w.size() + 4);
        for (std::size_t q = 0; q < a.states.size(); ++q) {
            // every path value is claimed
            for (const auto& v : oracle[q]) CHECK(member(row[q], v));
            // small claimed values are realized by explicit runs
            for (const auto& comp : row[q].components) {
                std::vector<IntVector> probes = {comp.offset()};
                if (!comp.periods().empty()) probes.push_back(add(comp.offset(), comp.periods()[0]));
                for (const auto& v : probes) {
                    auto run = find_run(a, w, a.initial, {static_cast<int>(q)}, v,
                                        Int((a.states.size() + 1) * 4));
                    REQUIRE(run.has_value());
                    CHECK(run->trace.back() == v);
                }
            }
        }
    }
}

TEST_CASE("acceptance on the rank-one word problem") {
    BlindAutomaton a = wp_z_automaton();
    AutomatonContext ctx(a);
    CHECK(accept(ctx, parse_word("a a'")));
    CHECK(!accept(ctx, parse_word("a a")));
    CHECK(accept(ctx, parse_word("a' a a a' a' a")));
    CHECK(accept(ctx, {}));
}

TEST_CASE("acceptance matches bounded path search on random automata") {
    Rng rng(8005);
    for (int trial = 0; trial < 60; ++trial) {
        BlindAutomaton a = random_blind_automaton(rng, 2, 3, 6, 0.3);
        AutomatonContext ctx(a);
        bool ok = true;
        for_each_word(a.alphabet, 4, [&](const Word& w) {
            if (!ok) return;
            if (accept(ctx, w) != oracle_accept_paths(a, w, 15)) ok = false;
        });
        CHECK(ok);
    }
}

TEST_CASE("certificates replay and rejections are reported") {
    BlindAutomaton a = wp_z_automaton();
    AutomatonContext ctx(a);
    CertificateResult r = accept_with_certificate(ctx, parse_word("a a'"));
    REQUIRE(r.status == CertificateStatus::found);
    REQUIRE(r.run.has_value());
    CHECK(r.run->edge_indices.size() == 2);
    CHECK(r.run->trace == std::vector<IntVector>{iv({0}), iv({1}), iv({0})});
    CHECK(run_accepts(a, *r.run, parse_word("a a'")));

    CertificateResult rejected = accept_with_certificate(ctx, parse_word("a a"));
    CHECK(rejected.status == CertificateStatus::rejected);
    CHECK(!rejected.run.has_value());
}

TEST_CASE("certificates replay on random accepted words") {
    Rng rng(8006);
    int found = 0;
    for (int trial = 0; trial < 400 && found < 100; ++trial) {
        BlindAutomaton a = random_blind_automaton(rng, 1, 3, 6, 0.3);
        AutomatonContext ctx(a);
        Word w = random_word(rng, a.alphabet, 4);
        CertificateResult r = accept_with_certificate(ctx, w);
        if (r.status != CertificateStatus::found) continue;
        ++found;
        CHECK(run_accepts(a, *r.run, w));
    }
    CHECK(found >= 100);
}

TEST_CASE("constants of epsilon-free automata with unit increments") {
    Rng rng(8007);
    for (int trial = 0; trial < 20; ++trial) {
        BlindAutomaton a = random_blind_automaton(rng, 2, 3, 6, 0.0);
        bool has_nonzero = false;
        for (const auto& e : a.edges)
            if (!is_zero(e.inc)) has_nonzero = true;
        if (!has_nonzero) continue;
        AutomatonContext ctx(a);
        AutomatonConstants k = automaton_constants(ctx);
        CHECK(k.K == 0);
        CHECK(k.F >= 1);
        CHECK(k.F <= 2);  // coordinatewise unit increments in dimension 2
        CHECK(k.R == a.states.size());
    }
}

TEST_CASE("constants identities hold exactly") {
    Rng rng(8008);
    for (int trial = 0; trial < 20; ++trial) {
        BlindAutomaton a = random_blind_automaton(rng, 2, 3, 5, 0.5);
        AutomatonContext ctx(a);
        AutomatonConstants k = automaton_constants(ctx);
        CHECK(k.P == Rational(2) * k.C * Rational(k.F));
        CHECK(k.Q == k.C * Rational(k.F) + k.D);
    }

    BlindAutomaton z = wp_z_automaton();
    AutomatonContext ctx(z);
    AutomatonConstants k = automaton_constants(ctx);
    CHECK(k.R == 1);
    CHECK(k.F == 1);
}

TEST_CASE("short witness examples on the rank-one word problem") {
    BlindAutomaton a = wp_z_automaton();
    AutomatonContext ctx(a);
    AutomatonConstants k = automaton_constants(ctx);

    auto empty = short_witness(ctx, {});
    REQUIRE(empty.status == ShortWitnessStatus::found);
    CHECK(empty.witness->value == iv({0}));

    auto one = short_witness(ctx, parse_word("a"));
    REQUIRE(one.status == ShortWitnessStatus::found);
    CHECK(one.witness->value == iv({1}));
    CHECK(Rational(1) < k.P + k.Q);
}

TEST_CASE("short witness reports words outside the word problem") {
    // accepts only the empty word: 'a' comes back with no zero return
    RawAutomaton raw;
    raw.dim = 1;
    raw.alphabet.add_pair("a", "a'");
    raw.states = {"p"};
    raw.initial = "p";
    raw.terminals = {"p"};
    raw.edges.push_back({"p", iv({1}), parse_word("a"), "p"});
    raw.edges.push_back({"p", iv({1}), parse_word("a'"), "p"});
    BlindAutomaton a = normalize(raw);
    AutomatonContext ctx(a);
    auto r = short_witness(ctx, parse_word("a"));
    CHECK(r.status == ShortWitnessStatus::not_word_problem);
}

TEST_CASE("short witness halves replay as runs") {
    Rng rng(8009);
    std::vector<BlindAutomaton> automata = {wp_z_automaton(), wp_z2_automaton()};
    int checked = 0;
    for (auto& a : automata) {
        AutomatonContext ctx(a);
        for (int trial = 0; trial < 25; ++trial) {
            Word w = random_word(rng, a.alphabet, 4);
            auto r = short_witness(ctx, w);
            REQUIRE(r.status == ShortWitnessStatus::found);  // word problems accept w w^-1
            ++checked;
            int q = r.witness->state;
            const IntVector& g = r.witness->value;
            auto first = find_run(a, w, a.initial, {q}, g, Int(8));
            REQUIRE(first.has_value());
            auto second =
                find_run(a, inverse_word(a.alphabet, w), q, a.terminals, negated(g), Int(8));
            REQUIRE(second.has_value());
        }
    }
    CHECK(checked == 50);
}

TEST_CASE("determinism recognizer") {
    BlindAutomaton a = wp_z_automaton();
    CHECK(is_deterministic_blind(a));
    BlindAutomaton b = a;
    b.edges.push_back(b.edges[0]);
    CHECK(!is_deterministic_blind(b));
    BlindAutomaton c = a;
    c.edges.push_back({0, iv({0}), std::nullopt, 0});
    CHECK(!is_deterministic_blind(c));
}

TEST_CASE("validation rejects malformed automata") {
    BlindAutomaton a = wp_z_automaton();
    BlindAutomaton bad = a;
    bad.initial = 5;
    CHECK_THROWS_AS(validate(bad), ValidationError);
    bad = a;
    bad.edges[0].inc = iv({1, 2});
    CHECK_THROWS_AS(validate(bad), ValidationError);
    bad = a;
    bad.edges[0].input = "zz";
    CHECK_THROWS_AS(validate(bad), ValidationError);
}
