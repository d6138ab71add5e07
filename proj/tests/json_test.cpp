#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "bca/json_io.hpp"
#include "bca/rng.hpp"
#include "bca/samples.hpp"

using namespace bca;

namespace {

std::string fixture(const std::string& name) {
    // tests run from the build tree; fixtures live beside the sources
    auto here = std::filesystem::path(__FILE__).parent_path();
    return (here / "fixtures" / name).string();
}

}  // namespace

TEST_CASE("integer codec switches to strings beyond the double-safe range") {
    Int small = (Int(1) << 53) - 1;
    Int big = Int(1) << 53;
    CHECK(int_to_json(small).is_number());
    CHECK(int_to_json(big).is_string());
    CHECK(json_to_int(int_to_json(small)) == small);
    CHECK(json_to_int(int_to_json(big)) == big);
    Int negative = -(Int(1) << 77) - 12345;
    CHECK(json_to_int(int_to_json(negative)) == negative);
    CHECK_THROWS_AS(json_to_int(Json(1.5)), ValidationError);
    CHECK_THROWS_AS(json_to_int(Json("12x")), ValidationError);
}

TEST_CASE("semilinear values survive a round trip") {
    Rng rng(11001);
    for (int trial = 0; trial < 50; ++trial) {
        SemilinearSet s = random_semilinear(rng, 3, 3, 3, 5, 5);
        SemilinearSet back = json_to_semilinear(semilinear_to_json(s));
        CHECK(back == s);
        CHECK(canonical_dump(semilinear_to_json(back)) == canonical_dump(semilinear_to_json(s)));
    }
}

TEST_CASE("automata survive a round trip") {
    Rng rng(11002);
    for (int trial = 0; trial < 25; ++trial) {
        BlindAutomaton a = random_blind_automaton(rng, 2, 3, 6, 0.4);
        Json j = automaton_to_json(a);
        BlindAutomaton back = normalize(json_to_raw_automaton(j));
        CHECK(automaton_to_json(back) == j);
    }
}

TEST_CASE("cho automata survive a round trip") {
    Rng rng(11003);
    for (int trial = 0; trial < 25; ++trial) {
        ChoAutomaton b = random_cho_automaton(rng, 2, 3, 5);
        Json j = cho_to_json(b);
        CHECK(json_is_cho(j));
        ChoAutomaton back = json_to_cho(j);
        CHECK(cho_to_json(back) == j);
    }
}

TEST_CASE("groups survive a round trip") {
    VAGroup g = make_infinite_dihedral();
    GenMap gens = dihedral_generators(g);
    Json j = group_to_json(g, gens);
    auto [g2, gens2] = json_to_group(j);
    CHECK(group_to_json(g2, gens2) == j);
    CHECK(g2.n == g.n);
    CHECK(g2.F.size == g.F.size);
}

TEST_CASE("generator inverses are completed from the group") {
    VAGroup g = make_free_abelian(1);
    Json j;
    j["n"] = 1;
    j["F"] = Json{{"size", 1}, {"mult", Json::array({Json::array({0})})},
                  {"inverse", Json::array({0})}, {"identity", 0}};
    j["action"] = Json::array({Json::array({Json::array({1})})});
    j["generators"] = Json{{"a", Json{{"vec", Json::array({1})}, {"f", 0}}}};
    auto [group, gens] = json_to_group(j);
    REQUIRE(gens.images.count("a'") == 1);
    CHECK(gens.images.at("a'").vec == IntVector{Int(-1)});
    (void)g;
}

TEST_CASE("checked-in fixtures are byte-stable under reserialization") {
    for (const char* name : {"wp_z1.json", "wp_z2.json", "wp_dihedral.json", "z1.json",
                             "z2.json", "dihedral.json", "cho_even.json", "evens.json",
                             "odds.json", "threes.json", "eps_loop.json"}) {
        std::ifstream in(fixture(name));
        REQUIRE(in.good());
        std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        Json j = load_json_file(fixture(name));
        CHECK(canonical_dump(j) == bytes);
    }
}

TEST_CASE("fixture automata reload to identical values") {
    Json j = load_json_file(fixture("wp_z2.json"));
    BlindAutomaton a = normalize(json_to_raw_automaton(j));
    CHECK(automaton_to_json(a) == j);

    Json cj = load_json_file(fixture("cho_even.json"));
    ChoAutomaton b = json_to_cho(cj);
    CHECK(cho_to_json(b) == cj);

    Json gj = load_json_file(fixture("dihedral.json"));
    auto [g, gens] = json_to_group(gj);
    CHECK(group_to_json(g, gens) == gj);
}

TEST_CASE("malformed inputs are validation errors") {
    CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), ValidationError);
    Json bad;
    bad["dim"] = 1;
    CHECK_THROWS_AS(json_to_semilinear(bad), ValidationError);  // missing components
    Json bad_set;
    bad_set["dim"] = 2;
    bad_set["components"] =
        Json::array({Json{{"offset", Json::array({1})}, {"periods", Json::array()}}});
    CHECK_THROWS_AS(json_to_semilinear(bad_set), ValidationError);  // dim mismatch

    Json bad_auto = load_json_file(fixture("wp_z1.json"));
    bad_auto["initial"] = "nope";
    CHECK_THROWS_AS(normalize(json_to_raw_automaton(bad_auto)), ValidationError);
}

TEST_CASE("reports serialize deterministically") {
    BlindAutomaton a = normalize(json_to_raw_automaton(load_json_file(fixture("eps_loop.json"))));
    AutomatonContext ctx(a);
    std::string first = canonical_dump(reach_to_json(a, ctx.reach()));
    AutomatonContext ctx2(a);
    std::string second = canonical_dump(reach_to_json(a, ctx2.reach()));
    CHECK(first == second);
}
