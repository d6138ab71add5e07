#include <doctest.h>

#include <algorithm>

#include "bca/heisenberg.hpp"
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

GroupElement random_element(Rng& rng, const VAGroup& g) {
    return {random_vector(rng, g.n, -5, 5),
            static_cast<int>(rng.range(0, static_cast<long long>(g.F.size) - 1))};
}

}  // namespace

TEST_CASE("finite group table validation") {
    CHECK_NOTHROW(validate(FiniteGroupTable::cyclic(4)));
    FiniteGroupTable bad = FiniteGroupTable::cyclic(3);
    bad.mult[1][1] = 1;  // breaks the group laws
    CHECK_THROWS_AS(validate(bad), ValidationError);
    bad = FiniteGroupTable::cyclic(3);
    bad.inverse[1] = 1;
    CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("group validation checks unimodularity and the action law") {
    VAGroup g = make_infinite_dihedral();
    CHECK_NOTHROW(validate(g));
    VAGroup bad = g;
    bad.action[1] = {{Int(2)}};
    CHECK_THROWS_AS(validate(bad), ValidationError);
    bad = g;
    bad.action[0] = {{Int(-1)}};  // identity no longer acts trivially
    CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("group element algebra") {
    Rng rng(10001);
    VAGroup g = make_infinite_dihedral();
    for (int trial = 0; trial < 1000; ++trial) {
        GroupElement a = random_element(rng, g);
        GroupElement b = random_element(rng, g);
        GroupElement c = random_element(rng, g);
        CHECK(multiply(g, multiply(g, a, b), c) == multiply(g, a, multiply(g, b, c)));
        CHECK(multiply(g, a, inverse(g, a)) == identity_element(g));
        CHECK(multiply(g, inverse(g, a), a) == identity_element(g));
    }
}

TEST_CASE("evaluation examples") {
    VAGroup g = make_free_abelian(2);
    GenMap gens = standard_generators(g);
    CHECK(evaluate(g, gens, {}) == identity_element(g));
    GroupElement e = evaluate(g, gens, parse_word("a b a'"));
    CHECK(e.vec == iv({0, 1}));
    CHECK(e.f == g.F.identity);
    CHECK_THROWS_AS(evaluate(g, gens, parse_word("zz")), ValidationError);

    Rng rng(10002);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = random_word(rng, gens.alphabet, 6);
        Word round = w;
        Word back = inverse_word(gens.alphabet, w);
        round.insert(round.end(), back.begin(), back.end());
        CHECK(evaluate(g, gens, round) == identity_element(g));
    }
}

TEST_CASE("word problem oracle") {
    VAGroup g = make_free_abelian(1);
    GenMap gens = standard_generators(g);
    CHECK(wp_member(g, gens, {}));
    CHECK(wp_member(g, gens, parse_word("a a'")));
    CHECK(!wp_member(g, gens, parse_word("a a")));
}

TEST_CASE("word-problem automaton for the free abelian group of rank two") {
    VAGroup g = make_free_abelian(2);
    GenMap gens = standard_generators(g);
    BlindAutomaton a = build_wp_automaton(g, gens);
    CHECK(a.states.size() == 1);
    CHECK(a.edges.size() == 4);
    CHECK(is_deterministic_blind(a));
    AutomatonContext ctx(a);
    CHECK(accept(ctx, parse_word("a b a' b'")));
    CHECK(accept(ctx, {}));
}

TEST_CASE("word-problem automaton for the infinite dihedral group") {
    VAGroup g = make_infinite_dihedral();
    GenMap gens = dihedral_generators(g);
    BlindAutomaton a = build_wp_automaton(g, gens);
    AutomatonContext ctx(a);
    CHECK(accept(ctx, parse_word("r r")));
    CHECK(accept(ctx, parse_word("r t r t")));
    CHECK(!accept(ctx, parse_word("t t")));
    CHECK(accept(ctx, {}));
}

TEST_CASE("word-problem automata agree with evaluation exhaustively") {
    struct Case {
        VAGroup g;
        GenMap gens;
    };
    std::vector<Case> cases;
    {
        VAGroup g = make_free_abelian(1);
        cases.push_back({g, standard_generators(g)});
    }
    {
        VAGroup g = make_free_abelian(2);
        cases.push_back({g, standard_generators(g)});
    }
    {
        VAGroup g = make_infinite_dihedral();
        cases.push_back({g, dihedral_generators(g)});
    }
    for (const auto& c : cases) {
        BlindAutomaton a = build_wp_automaton(c.g, c.gens);
        AutomatonContext ctx(a);
        bool ok = true;
        for_each_word(c.gens.alphabet, 6, [&](const Word& w) {
            if (!ok) return;
            if (accept(ctx, w) != wp_member(c.g, c.gens, w)) ok = false;
        });
        CHECK(ok);
    }
}

TEST_CASE("exchange index") {
    CHECK(exchange_index(parse_word("x y")) == 0);
    CHECK(exchange_index(parse_word("y x")) == 1);
    CHECK(exchange_index(build_t1(3)) == 4);
    CHECK(exchange_index(parse_word("x x x y y")) == 0);
    CHECK_THROWS_AS(exchange_index(parse_word("x z")), ValidationError);
}

TEST_CASE("block word construction") {
    CHECK(build_t1(1) == parse_word("x y"));
    CHECK(build_t1(3) == parse_word("x y x y y x y y y"));
    CHECK(build_t1(10).size() == 65);
    CHECK_THROWS_AS(build_t1(0), ValidationError);
}

TEST_CASE("block swaps") {
    Factorization f;
    f.separators = {{"x"}, {"x"}, {"x"}, {}};
    f.factors = {parse_word("y"), parse_word("y y"), parse_word("y y y")};
    Word t1 = build_t1(3);
    validate_factorization(f, t1);

    CHECK(swap_blocks(f, 1, 2) == parse_word("x y y x y x y y y"));
    CHECK(swap_blocks(f, 1, 2).size() == t1.size());
    CHECK_THROWS_AS(swap_blocks(f, 0, 2), ValidationError);
    CHECK_THROWS_AS(swap_blocks(f, 2, 2), ValidationError);
    CHECK_THROWS_AS(swap_blocks(f, 1, 4), ValidationError);

    Factorization same;
    same.separators = {{}, {}, {}};
    same.factors = {parse_word("y"), parse_word("y")};
    CHECK(swap_blocks(same, 1, 2) == parse_word("y y"));
}

TEST_CASE("unitriangular matrix arithmetic") {
    CHECK(heisenberg_evaluate(parse_word("x' y' x y")) == HeisenbergElement{0, 0, 1});
    CHECK(heisenberg_evaluate(parse_word("x y")) == HeisenbergElement{1, 1, 1});
    CHECK(heisenberg_evaluate(parse_word("y x")) == HeisenbergElement{1, 1, 0});
    CHECK(heisenberg_evaluate({}) == heisenberg_identity());

    Rng rng(10003);
    HeisenbergElement c{0, 0, 1};
    for (int trial = 0; trial < 100; ++trial) {
        HeisenbergElement m{Int(rng.range(-9, 9)), Int(rng.range(-9, 9)), Int(rng.range(-9, 9))};
        CHECK(heisenberg_multiply(c, m) == heisenberg_multiply(m, c));
        CHECK(heisenberg_multiply(m, heisenberg_inverse(m)) == heisenberg_identity());
        HeisenbergElement a{Int(rng.range(-9, 9)), Int(rng.range(-9, 9)), Int(rng.range(-9, 9))};
        HeisenbergElement b{Int(rng.range(-9, 9)), Int(rng.range(-9, 9)), Int(rng.range(-9, 9))};
        CHECK(heisenberg_multiply(heisenberg_multiply(a, b), m) ==
              heisenberg_multiply(a, heisenberg_multiply(b, m)));
    }
}

TEST_CASE("equal letter counts, equal element exactly for equal exchange index") {
    for (std::size_t len = 0; len <= 7; ++len) {
        std::vector<Word> words;
        for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
            Word w;
            for (std::size_t i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? "y" : "x");
            words.push_back(std::move(w));
        }
        auto xs = [](const Word& w) { return std::count(w.begin(), w.end(), std::string("x")); };
        for (const auto& u : words)
            for (const auto& v : words) {
                if (xs(u) != xs(v)) continue;
                CHECK((heisenberg_evaluate(u) == heisenberg_evaluate(v)) ==
                      (exchange_index(u) == exchange_index(v)));
            }
    }
}

TEST_CASE("swapping blocks shifts the exchange index by a square") {
    for (std::size_t n = 2; n <= 8; ++n) {
        Word t1 = build_t1(n);
        Int base = exchange_index(t1);
        Factorization f;
        for (std::size_t k = 1; k <= n; ++k) {
            f.separators.push_back({"x"});
            f.factors.push_back(Word(k, "y"));
        }
        f.separators.push_back({});
        for (std::size_t r = 1; r <= n; ++r)
            for (std::size_t s = r + 1; s <= n; ++s)
                CHECK(exchange_index(swap_blocks(f, r, s)) - base == Int(s - r) * Int(s - r));
    }
}

TEST_CASE("interchange search finds commuting swaps in the abelian case") {
    VAGroup g = make_free_abelian(2);
    GenMap gens = standard_generators(g);
    BlindAutomaton a = build_wp_automaton(g, gens);
    AutomatonContext ctx(a);
    auto accept_fn = [&](const Word& w) { return accept(ctx, w); };

    Word w = parse_word("a b a' b'");
    Factorization f;
    f.separators = {{}, {}, parse_word("a' b'")};
    f.factors = {parse_word("a"), parse_word("b")};
    auto found = interchange_search(accept_fn, w, f);
    REQUIRE(found.has_value());
    CHECK(*found == std::make_pair(std::size_t{1}, std::size_t{2}));
}

TEST_CASE("interchange search accepts equal-factor swaps trivially") {
    auto always = [](const Word& w) { return w.size() == 4; };
    Word w = parse_word("u u u u");
    Factorization f;
    f.separators = {{}, {}, {}};
    f.factors = {parse_word("u u"), parse_word("u u")};
    auto found = interchange_search(always, w, f);
    REQUIRE(found.has_value());
    CHECK(*found == std::make_pair(std::size_t{1}, std::size_t{2}));
}

TEST_CASE("no block swap stays in the nilpotent word problem") {
    for (std::size_t n = 2; n <= 8; ++n) {
        Word t1 = build_t1(n);
        Word tail = inverse_word(heisenberg_alphabet(), t1);
        Word w = t1;
        w.insert(w.end(), tail.begin(), tail.end());
        Factorization f;
        for (std::size_t k = 1; k <= n; ++k) {
            f.separators.push_back({"x"});
            f.factors.push_back(Word(k, "y"));
        }
        f.separators.push_back(tail);
        CHECK(!interchange_search(heisenberg_wp_member, w, f).has_value());
    }
}

TEST_CASE("generator maps validate inverse compatibility") {
    VAGroup g = make_free_abelian(1);
    GenMap gens = standard_generators(g);
    CHECK_NOTHROW(validate(g, gens));
    gens.images["a'"] = GroupElement{iv({1}), 0};
    CHECK_THROWS_AS(validate(g, gens), ValidationError);
}
