#include "bca/samples.hpp"

#include "bca/errors.hpp"

namespace bca {

VAGroup make_free_abelian(std::size_t n) {
    VAGroup g;
    g.n = n;
    g.F = FiniteGroupTable::trivial();
    std::vector<IntVector> id(n, IntVector(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    g.action = {id};
    return g;
}

GenMap standard_generators(const VAGroup& g) {
    static const char* kNames[] = {"a", "b", "c", "d"};
    if (g.n > 4) throw ValidationError("standard generators cover at most four coordinates");
    GenMap gens;
    for (std::size_t i = 0; i < g.n; ++i) {
        std::string base = kNames[i];
        gens.alphabet.add_pair(base, base + "'");
        IntVector v = zero_vector(g.n);
        v[i] = 1;
        gens.images.emplace(base, GroupElement{v, g.F.identity});
        v[i] = -1;
        gens.images.emplace(base + "'", GroupElement{v, g.F.identity});
    }
    return gens;
}

VAGroup make_infinite_dihedral() {
    VAGroup g;
    g.n = 1;
    g.F = FiniteGroupTable::cyclic(2);
    g.action = {{{Int(1)}}, {{Int(-1)}}};
    return g;
}

GenMap dihedral_generators(const VAGroup& g) {
    GenMap gens;
    gens.alphabet.add_pair("r", "r'");
    gens.alphabet.add_pair("t", "t'");
    gens.images.emplace("r", GroupElement{zero_vector(1), 1});
    gens.images.emplace("r'", GroupElement{zero_vector(1), 1});
    gens.images.emplace("t", GroupElement{IntVector{Int(1)}, 0});
    gens.images.emplace("t'", GroupElement{IntVector{Int(-1)}, 0});
    (void)g;
    return gens;
}

BlindAutomaton wp_z_automaton() {
    VAGroup g = make_free_abelian(1);
    return build_wp_automaton(g, standard_generators(g));
}

BlindAutomaton wp_z2_automaton() {
    VAGroup g = make_free_abelian(2);
    return build_wp_automaton(g, standard_generators(g));
}

ChoAutomaton sample_cho_even() {
    ChoAutomaton b;
    b.k = 1;
    b.alphabet.add_pair("a", "a'");
    b.states = {"s"};
    b.initial = 0;
    b.edges.push_back({0, IntVector{Int(1)}, "a", 0});
    b.accept_sets = {SemilinearSet{1, {LinearSet(IntVector{Int(2)}, {IntVector{Int(2)}})}}};
    validate(b);
    return b;
}

IntVector random_vector(Rng& rng, std::size_t dim, long long lo, long long hi) {
    IntVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Int(rng.range(lo, hi));
    return v;
}

LinearMap random_linear_map(Rng& rng, std::size_t max_domain, std::size_t max_codomain,
                            long long entry_range) {
    LinearMap sigma;
    sigma.domain_dim = static_cast<std::size_t>(rng.range(0, static_cast<long long>(max_domain)));
    sigma.codomain_dim =
        static_cast<std::size_t>(rng.range(1, static_cast<long long>(max_codomain)));
    for (std::size_t i = 0; i < sigma.domain_dim; ++i)
        sigma.images.push_back(random_vector(rng, sigma.codomain_dim, -entry_range, entry_range));
    return sigma;
}

namespace {

// A vector with norm at most `cap`, spread across coordinates.
IntVector random_bounded_norm(Rng& rng, std::size_t dim, long long cap) {
    IntVector v = zero_vector(dim);
    long long remaining = rng.range(0, cap);
    for (std::size_t i = 0; i + 1 < dim && remaining > 0; ++i) {
        long long part = rng.range(0, remaining);
        v[i] = Int(rng.chance(0.5) ? part : -part);
        remaining -= part;
    }
    if (dim > 0) v[dim - 1] = Int(rng.chance(0.5) ? remaining : -remaining);
    return v;
}

}  // namespace

SemilinearSet random_semilinear(Rng& rng, std::size_t dim, std::size_t max_components,
                                std::size_t max_periods, long long gen_bound,
                                long long const_bound) {
    SemilinearSet s = SemilinearSet::empty(dim);
    std::size_t count = static_cast<std::size_t>(rng.range(0, static_cast<long long>(max_components)));
    for (std::size_t i = 0; i < count; ++i) {
        IntVector offset = random_bounded_norm(rng, dim, const_bound);
        std::vector<IntVector> periods;
        std::size_t pcount =
            static_cast<std::size_t>(rng.range(0, static_cast<long long>(max_periods)));
        for (std::size_t p = 0; p < pcount; ++p)
            periods.push_back(random_bounded_norm(rng, dim, gen_bound));
        s.components.emplace_back(std::move(offset), std::move(periods));
    }
    return simplify(std::move(s));
}

BlindAutomaton random_blind_automaton(Rng& rng, std::size_t dim, std::size_t max_states,
                                      std::size_t max_edges, double epsilon_ratio) {
    BlindAutomaton a;
    a.dim = dim;
    a.alphabet.add_pair("a", "a'");
    std::size_t states = static_cast<std::size_t>(rng.range(1, static_cast<long long>(max_states)));
    for (std::size_t i = 0; i < states; ++i) a.states.push_back("q" + std::to_string(i));
    a.initial = 0;
    for (std::size_t i = 0; i < states; ++i)
        if (rng.chance(0.5)) a.terminals.push_back(static_cast<int>(i));
    if (a.terminals.empty()) a.terminals.push_back(static_cast<int>(rng.range(0, states - 1)));
    std::size_t edges = static_cast<std::size_t>(rng.range(1, static_cast<long long>(max_edges)));
    for (std::size_t i = 0; i < edges; ++i) {
        BlindEdge e;
        e.src = static_cast<int>(rng.range(0, states - 1));
        e.dst = static_cast<int>(rng.range(0, states - 1));
        e.inc = random_vector(rng, dim, -1, 1);
        if (!rng.chance(epsilon_ratio))
            e.input = rng.chance(0.5) ? "a" : "a'";
        a.edges.push_back(std::move(e));
    }
    validate(a);
    return a;
}

ChoAutomaton random_cho_automaton(Rng& rng, std::size_t k, std::size_t max_states,
                                  std::size_t max_edges) {
    ChoAutomaton b;
    b.k = k;
    b.alphabet.add_pair("a", "a'");
    std::size_t states = static_cast<std::size_t>(rng.range(1, static_cast<long long>(max_states)));
    for (std::size_t i = 0; i < states; ++i) b.states.push_back("q" + std::to_string(i));
    b.initial = 0;
    std::size_t edges = static_cast<std::size_t>(rng.range(1, static_cast<long long>(max_edges)));
    for (std::size_t i = 0; i < edges; ++i) {
        ChoEdge e;
        e.src = static_cast<int>(rng.range(0, states - 1));
        e.dst = static_cast<int>(rng.range(0, states - 1));
        e.inc = random_vector(rng, k, 0, 2);
        e.input = rng.chance(0.5) ? "a" : "a'";
        b.edges.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < states; ++i) {
        SemilinearSet s = SemilinearSet::empty(k);
        std::size_t comps = static_cast<std::size_t>(rng.range(0, 2));
        for (std::size_t c = 0; c < comps; ++c) {
            IntVector offset = random_vector(rng, k, 0, 3);
            std::vector<IntVector> periods;
            std::size_t pcount = static_cast<std::size_t>(rng.range(0, 2));
            for (std::size_t p = 0; p < pcount; ++p)
                periods.push_back(random_vector(rng, k, 0, 2));
            s.components.emplace_back(std::move(offset), std::move(periods));
        }
        b.accept_sets.push_back(simplify(std::move(s)));
    }
    validate(b);
    return b;
}

BlindAutomaton random_deterministic_blind(Rng& rng, std::size_t dim, std::size_t max_states) {
    BlindAutomaton a;
    a.dim = dim;
    a.alphabet.add_pair("a", "a'");
    std::size_t states = static_cast<std::size_t>(rng.range(1, static_cast<long long>(max_states)));
    for (std::size_t i = 0; i < states; ++i) a.states.push_back("q" + std::to_string(i));
    a.initial = 0;
    for (std::size_t i = 0; i < states; ++i)
        if (rng.chance(0.5)) a.terminals.push_back(static_cast<int>(i));
    if (a.terminals.empty()) a.terminals.push_back(0);
    for (std::size_t i = 0; i < states; ++i) {
        for (const char* letter : {"a", "a'"}) {
            if (rng.chance(0.25)) continue;  // leave some transitions undefined
            BlindEdge e;
            e.src = static_cast<int>(i);
            e.dst = static_cast<int>(rng.range(0, states - 1));
            e.inc = random_vector(rng, dim, -1, 1);
            e.input = letter;
            a.edges.push_back(std::move(e));
        }
    }
    validate(a);
    return a;
}

Word random_word(Rng& rng, const Alphabet& alphabet, std::size_t max_len) {
    std::size_t len = static_cast<std::size_t>(rng.range(0, static_cast<long long>(max_len)));
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
        std::size_t pick =
            static_cast<std::size_t>(rng.range(0, static_cast<long long>(alphabet.size()) - 1));
        w.push_back(alphabet.letters()[pick].symbol);
    }
    return w;
}

}  // namespace bca
