#include "bca/json_io.hpp"

#include <fstream>

#include "bca/errors.hpp"

namespace bca {

namespace {

const Int kJsonNumberLimit = Int(1) << 53;

Json rational_to_json(const Rational& r) { return rational_to_string(r); }

void require(bool cond, const std::string& message) {
    if (!cond) throw ValidationError(message);
}

const Json& field(const Json& j, const char* key) {
    require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    require(v.is_string(), std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

Json int_to_json(const Int& x) {
    if (x < kJsonNumberLimit && x > -kJsonNumberLimit) return Json(x.convert_to<std::int64_t>());
    return Json(x.str());
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        require(!s.empty(), "empty integer literal");
        std::size_t start = s[0] == '-' ? 1 : 0;
        require(start < s.size(), "bad integer literal '" + s + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            require(s[i] >= '0' && s[i] <= '9', "bad integer literal '" + s + "'");
        return Int(s);
    }
    throw ValidationError("expected an integer (number or decimal string)");
}

Json vector_to_json(const IntVector& v) {
    Json j = Json::array();
    for (const Int& x : v) j.push_back(int_to_json(x));
    return j;
}

IntVector json_to_vector(const Json& j) {
    require(j.is_array(), "expected an integer array");
    IntVector v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(json_to_int(x));
    return v;
}

Json linear_set_to_json(const LinearSet& s) {
    Json j;
    j["offset"] = vector_to_json(s.offset());
    Json periods = Json::array();
    for (const auto& p : s.periods()) periods.push_back(vector_to_json(p));
    j["periods"] = periods;
    return j;
}

LinearSet json_to_linear_set(const Json& j) {
    IntVector offset = json_to_vector(field(j, "offset"));
    std::vector<IntVector> periods;
    for (const auto& p : field(j, "periods")) periods.push_back(json_to_vector(p));
    return LinearSet(std::move(offset), std::move(periods));
}

Json semilinear_to_json(const SemilinearSet& s) {
    Json j;
    j["dim"] = s.dim;
    Json comps = Json::array();
    for (const auto& c : s.components) comps.push_back(linear_set_to_json(c));
    j["components"] = comps;
    return j;
}

SemilinearSet json_to_semilinear(const Json& j) {
    SemilinearSet s;
    const Json& d = field(j, "dim");
    require(d.is_number_unsigned() || (d.is_number_integer() && d.get<std::int64_t>() >= 0),
            "dim must be a nonnegative integer");
    s.dim = d.get<std::uint64_t>();
    for (const auto& c : field(j, "components")) {
        LinearSet comp = json_to_linear_set(c);
        require(comp.dim() == s.dim, "component dimension differs from set dimension");
        s.components.push_back(std::move(comp));
    }
    return s;
}

namespace {

Json alphabet_to_json(const Alphabet& alphabet) {
    Json letters = Json::array();
    std::set<std::string> emitted;
    for (const auto& l : alphabet.letters()) {
        if (emitted.count(l.symbol)) continue;
        emitted.insert(l.symbol);
        emitted.insert(l.inverse);
        letters.push_back(Json{{"symbol", l.symbol}, {"inverse", l.inverse}});
    }
    return letters;
}

Alphabet json_to_alphabet(const Json& j) {
    require(j.is_array(), "alphabet must be an array of letter pairs");
    Alphabet a;
    for (const auto& l : j) a.add_pair(string_field(l, "symbol"), string_field(l, "inverse"));
    return a;
}

}  // namespace

Json automaton_to_json(const BlindAutomaton& a) {
    Json j;
    j["dim"] = a.dim;
    j["alphabet"] = alphabet_to_json(a.alphabet);
    j["states"] = a.states;
    j["initial"] = a.states[static_cast<std::size_t>(a.initial)];
    Json terminals = Json::array();
    for (int t : a.terminals) terminals.push_back(a.states[static_cast<std::size_t>(t)]);
    j["terminals"] = terminals;
    Json edges = Json::array();
    for (const auto& e : a.edges) {
        Json edge;
        edge["src"] = a.states[static_cast<std::size_t>(e.src)];
        edge["inc"] = vector_to_json(e.inc);
        edge["input"] = e.input ? Json(*e.input) : Json(nullptr);
        edge["dst"] = a.states[static_cast<std::size_t>(e.dst)];
        edges.push_back(std::move(edge));
    }
    j["edges"] = edges;
    return j;
}

RawAutomaton json_to_raw_automaton(const Json& j) {
    RawAutomaton a;
    const Json& d = field(j, "dim");
    require(d.is_number_unsigned() || (d.is_number_integer() && d.get<std::int64_t>() >= 0),
            "dim must be a nonnegative integer");
    a.dim = d.get<std::uint64_t>();
    a.alphabet = json_to_alphabet(field(j, "alphabet"));
    for (const auto& s : field(j, "states")) {
        require(s.is_string(), "state names must be strings");
        a.states.push_back(s.get<std::string>());
    }
    a.initial = string_field(j, "initial");
    for (const auto& t : field(j, "terminals")) {
        require(t.is_string(), "terminal names must be strings");
        a.terminals.push_back(t.get<std::string>());
    }
    for (const auto& e : field(j, "edges")) {
        RawEdge edge;
        edge.src = string_field(e, "src");
        edge.dst = string_field(e, "dst");
        edge.inc = json_to_vector(field(e, "inc"));
        const Json& input = field(e, "input");
        if (input.is_null()) {
            // epsilon
        } else if (input.is_string()) {
            edge.input = parse_word(input.get<std::string>());
        } else {
            throw ValidationError("edge input must be a letter string or null");
        }
        a.edges.push_back(std::move(edge));
    }
    return a;
}

bool json_is_cho(const Json& j) {
    return j.is_object() && j.contains("kind") && j.at("kind") == "cho";
}

Json cho_to_json(const ChoAutomaton& b) {
    Json j;
    j["kind"] = "cho";
    j["dim"] = b.k;
    j["alphabet"] = alphabet_to_json(b.alphabet);
    j["states"] = b.states;
    j["initial"] = b.states[static_cast<std::size_t>(b.initial)];
    Json edges = Json::array();
    for (const auto& e : b.edges) {
        Json edge;
        edge["src"] = b.states[static_cast<std::size_t>(e.src)];
        edge["inc"] = vector_to_json(e.inc);
        edge["input"] = e.input;
        edge["dst"] = b.states[static_cast<std::size_t>(e.dst)];
        edges.push_back(std::move(edge));
    }
    j["edges"] = edges;
    Json accept = Json::object();
    for (std::size_t q = 0; q < b.states.size(); ++q)
        accept[b.states[q]] = semilinear_to_json(b.accept_sets[q]);
    j["accept_sets"] = accept;
    return j;
}

ChoAutomaton json_to_cho(const Json& j) {
    require(json_is_cho(j), "expected a counter automaton with kind 'cho'");
    ChoAutomaton b;
    const Json& d = field(j, "dim");
    require(d.is_number_unsigned() || (d.is_number_integer() && d.get<std::int64_t>() >= 0),
            "dim must be a nonnegative integer");
    b.k = d.get<std::uint64_t>();
    b.alphabet = json_to_alphabet(field(j, "alphabet"));
    for (const auto& s : field(j, "states")) {
        require(s.is_string(), "state names must be strings");
        b.states.push_back(s.get<std::string>());
    }
    auto state_index = [&b](const std::string& name) {
        for (std::size_t i = 0; i < b.states.size(); ++i)
            if (b.states[i] == name) return static_cast<int>(i);
        throw ValidationError("unknown state '" + name + "'");
    };
    b.initial = state_index(string_field(j, "initial"));
    for (const auto& e : field(j, "edges")) {
        ChoEdge edge;
        edge.src = state_index(string_field(e, "src"));
        edge.dst = state_index(string_field(e, "dst"));
        edge.inc = json_to_vector(field(e, "inc"));
        edge.input = string_field(e, "input");
        b.edges.push_back(std::move(edge));
    }
    b.accept_sets.assign(b.states.size(), SemilinearSet::empty(b.k));
    if (j.contains("accept_sets")) {
        const Json& accept = j.at("accept_sets");
        require(accept.is_object(), "accept_sets must map states to semilinear sets");
        for (const auto& [name, set] : accept.items())
            b.accept_sets[static_cast<std::size_t>(state_index(name))] = json_to_semilinear(set);
    }
    validate(b);
    return b;
}

Json group_to_json(const VAGroup& g, const GenMap& gens) {
    Json j;
    j["n"] = g.n;
    Json f;
    f["size"] = g.F.size;
    f["mult"] = g.F.mult;
    f["inverse"] = g.F.inverse;
    f["identity"] = g.F.identity;
    j["F"] = f;
    Json action = Json::array();
    for (const auto& m : g.action) {
        Json matrix = Json::array();
        for (const auto& row : m) matrix.push_back(vector_to_json(row));
        action.push_back(std::move(matrix));
    }
    j["action"] = action;
    Json generators = Json::object();
    for (const auto& [letter, image] : gens.images)
        generators[letter] = Json{{"vec", vector_to_json(image.vec)}, {"f", image.f}};
    j["generators"] = generators;
    return j;
}

std::pair<VAGroup, GenMap> json_to_group(const Json& j) {
    VAGroup g;
    const Json& n = field(j, "n");
    require(n.is_number_unsigned() || (n.is_number_integer() && n.get<std::int64_t>() >= 0),
            "n must be a nonnegative integer");
    g.n = n.get<std::uint64_t>();
    const Json& f = field(j, "F");
    g.F.size = field(f, "size").get<std::uint64_t>();
    g.F.mult = field(f, "mult").get<std::vector<std::vector<int>>>();
    g.F.inverse = field(f, "inverse").get<std::vector<int>>();
    g.F.identity = field(f, "identity").get<int>();
    for (const auto& m : field(j, "action")) {
        std::vector<IntVector> matrix;
        for (const auto& row : m) matrix.push_back(json_to_vector(row));
        g.action.push_back(std::move(matrix));
    }
    validate(g);

    GenMap gens;
    const Json& generators = field(j, "generators");
    require(generators.is_object(), "generators must be an object");
    for (const auto& [letter, image] : generators.items()) {
        GroupElement e{json_to_vector(field(image, "vec")), field(image, "f").get<int>()};
        gens.images.emplace(letter, std::move(e));
    }
    // Base letters pair with their apostrophe partners; missing inverse
    // images are filled in from the group inverse.
    std::vector<std::string> bases;
    for (const auto& [letter, image] : gens.images)
        if (letter.empty() || letter.back() != '\'') bases.push_back(letter);
    for (const auto& base : bases) {
        const std::string partner = apostrophe_inverse(base);
        gens.alphabet.add_pair(base, partner);
        if (!gens.images.count(partner))
            gens.images.emplace(partner, inverse(g, gens.images.at(base)));
    }
    for (const auto& [letter, image] : gens.images)
        require(gens.alphabet.contains(letter),
                "generator letter '" + letter + "' has no base partner");
    validate(g, gens);
    return {std::move(g), std::move(gens)};
}

Json constants_to_json(const AutomatonConstants& k) {
    Json j;
    j["F"] = int_to_json(k.F);
    j["K"] = int_to_json(k.K);
    j["R"] = k.R;
    j["C"] = rational_to_json(k.C);
    j["D"] = rational_to_json(k.D);
    j["P"] = rational_to_json(k.P);
    j["Q"] = rational_to_json(k.Q);
    return j;
}

Json run_to_json(const BlindAutomaton& a, const Run& run) {
    Json j;
    Json steps = Json::array();
    for (std::size_t i : run.edge_indices) {
        const BlindEdge& e = a.edges[i];
        Json step;
        step["src"] = a.states[static_cast<std::size_t>(e.src)];
        step["inc"] = vector_to_json(e.inc);
        step["input"] = e.input ? Json(*e.input) : Json(nullptr);
        step["dst"] = a.states[static_cast<std::size_t>(e.dst)];
        steps.push_back(std::move(step));
    }
    j["edges"] = steps;
    Json trace = Json::array();
    for (const auto& v : run.trace) trace.push_back(vector_to_json(v));
    j["trace"] = trace;
    return j;
}

Json reach_to_json(const BlindAutomaton& a, const ReachTable& table) {
    Json tables = Json::array();
    for (std::size_t p = 0; p < table.size(); ++p) {
        for (std::size_t q = 0; q < table[p].size(); ++q) {
            Json entry;
            entry["src"] = a.states[p];
            entry["dst"] = a.states[q];
            entry["set"] = semilinear_to_json(table[p][q]);
            tables.push_back(std::move(entry));
        }
    }
    Json j;
    j["states"] = a.states;
    j["tables"] = tables;
    return j;
}

Json intersection_to_json(const IntersectionResult& r) {
    Json j;
    j["disjoint"] = !r.witness.has_value();
    j["witness"] = r.witness ? vector_to_json(*r.witness) : Json(nullptr);
    j["C"] = rational_to_json(r.C);
    j["D"] = rational_to_json(r.D);
    j["m"] = int_to_json(r.m);
    j["bound"] = rational_to_json(r.bound);
    return j;
}

Json growth_to_json(const GrowthTable& t) {
    Json j;
    j["sizes"] = t.sizes;
    j["degree_estimate"] = rational_to_json(t.degree_estimate);
    return j;
}

Json witness_report_to_json(const WitnessReport& r) {
    Json j;
    j["constants"] = constants_to_json(r.constants);
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json entry;
        entry["word"] = format_word(e.word);
        entry["radius"] = e.radius;
        entry["state"] = e.state;
        entry["value"] = vector_to_json(e.value);
        entry["bound"] = rational_to_json(e.bound);
        entry["within_bound"] = e.within_bound;
        entries.push_back(std::move(entry));
    }
    j["entries"] = entries;
    Json histogram = Json::object();
    for (const auto& [mult, count] : r.multiplicity_histogram)
        histogram[std::to_string(mult)] = count;
    j["multiplicity_histogram"] = histogram;
    j["max_multiplicity"] = r.max_multiplicity;
    j["checks"] = Json{{"sanity", r.sanity_ok},
                       {"bounds", r.bounds_ok},
                       {"multiplicity", r.multiplicity_ok},
                       {"pigeonhole", r.pigeonhole_ok}};
    j["failures"] = r.failures;
    j["ok"] = r.ok();
    return j;
}

Json interchange_report_to_json(const InterchangeReport& r) {
    Json j;
    j["n"] = r.n;
    j["t1"] = format_word(r.t1);
    j["base_index"] = int_to_json(r.base_index);
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        Json pair;
        pair["r"] = p.r;
        pair["s"] = p.s;
        pair["delta"] = int_to_json(p.index_delta);
        pair["delta_matches"] = p.delta_matches;
        pair["element_changed"] = p.element_changed;
        pair["counts_preserved"] = p.counts_preserved;
        pairs.push_back(std::move(pair));
    }
    j["pairs"] = pairs;
    j["swap_accepted"] = r.swap_accepted;
    j["ok"] = r.ok();
    return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ValidationError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << canonical_dump(j);
}

}  // namespace bca
