// Command-line surface for the counter-automata toolkit: load JSON
// objects, run decisions and experiments, emit reports.
//
// Exit codes: 0 success / accepted / nonempty intersection,
//             1 rejected / disjoint / failed checks,
//             2 malformed input, 3 resource cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "bca/errors.hpp"
#include "bca/experiments.hpp"
#include "bca/json_io.hpp"
#include "bca/oracles.hpp"
#include "bca/selftest.hpp"

namespace {

struct Options {
    std::string format = "text";
    std::uint64_t seed = 2026;
    std::size_t component_cap = 4096;
    std::size_t vector_cap = 100000;
    std::size_t ball_cap = 1000000;
    std::size_t workers = 1;
};

bca::Limits make_limits(const Options& o) { return bca::Limits{o.component_cap}; }

void env_override(std::size_t& value, const char* name) {
    if (const char* s = std::getenv(name)) value = std::stoull(s);
}

std::string format_decimal(const bca::Rational& r) {
    double v = numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << v;
    return out.str();
}

bca::BlindAutomaton load_blind(const std::string& path) {
    bca::Json j = bca::load_json_file(path);
    if (bca::json_is_cho(j))
        throw bca::ValidationError("'" + path + "' holds a cho automaton; this command needs a blind one");
    return bca::normalize(bca::json_to_raw_automaton(j));
}

int cmd_accept(const Options& opt, const std::string& path, const std::string& word_text,
               bool certificate) {
    bca::BlindAutomaton a = load_blind(path);
    bca::AutomatonContext ctx(a, make_limits(opt));
    bca::Word w = bca::parse_word(word_text);
    if (!certificate) {
        bool ok = bca::accept(ctx, w);
        std::cout << (ok ? "accept" : "reject") << "\n";
        return ok ? 0 : 1;
    }
    bca::CertificateResult r = bca::accept_with_certificate(ctx, w);
    switch (r.status) {
        case bca::CertificateStatus::found:
            std::cout << "accept\n";
            if (opt.format == "json") {
                std::cout << bca::canonical_dump(bca::run_to_json(a, *r.run));
            } else {
                for (std::size_t i = 0; i < r.run->edge_indices.size(); ++i) {
                    const auto& e = a.edges[r.run->edge_indices[i]];
                    std::cout << "  " << a.states[e.src] << " --"
                              << (e.input ? *e.input : std::string("eps")) << "/"
                              << bca::vector_to_string(e.inc) << "--> " << a.states[e.dst]
                              << "   counter " << bca::vector_to_string(r.run->trace[i + 1])
                              << "\n";
                }
            }
            return 0;
        case bca::CertificateStatus::budget_exceeded:
            std::cout << "accept\ncertificate search budget exceeded\n";
            return 0;
        case bca::CertificateStatus::rejected:
        default:
            std::cout << "reject\n";
            return 1;
    }
}

int cmd_cho_accept(const Options& opt, const std::string& path, const std::string& word_text) {
    bca::ChoAutomaton b = bca::json_to_cho(bca::load_json_file(path));
    bool ok = bca::cho_accept(b, bca::parse_word(word_text), bca::ChoLimits{opt.vector_cap});
    std::cout << (ok ? "accept" : "reject") << "\n";
    return ok ? 0 : 1;
}

int cmd_convert(const std::string& direction, const std::string& in_path,
                const std::string& out_path) {
    bca::Json j = bca::load_json_file(in_path);
    if (direction == "cho-to-blind") {
        bca::ChoAutomaton b = bca::json_to_cho(j);
        bca::save_json_file(out_path, bca::automaton_to_json(bca::cho_to_blind(b)));
    } else {
        bca::BlindAutomaton a = bca::normalize(bca::json_to_raw_automaton(j));
        bca::save_json_file(out_path, bca::cho_to_json(bca::blind_det_to_cho(a)));
    }
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_build_wp(const std::string& group_path, const std::string& out_path) {
    auto [group, gens] = bca::json_to_group(bca::load_json_file(group_path));
    bca::BlindAutomaton a = bca::build_wp_automaton(group, gens);
    bca::save_json_file(out_path, bca::automaton_to_json(a));
    std::cout << "wrote " << out_path << " (" << a.states.size() << " states, "
              << a.edges.size() << " edges)\n";
    return 0;
}

int cmd_reach(const Options& opt, const std::string& path) {
    bca::BlindAutomaton a = load_blind(path);
    bca::ReachTable table = bca::epsilon_reach(a, make_limits(opt));
    std::cout << bca::canonical_dump(bca::reach_to_json(a, table));
    return 0;
}

int cmd_intersect(const Options& opt, const std::string& s_path, const std::string& t_path) {
    bca::SemilinearSet s = bca::json_to_semilinear(bca::load_json_file(s_path));
    bca::SemilinearSet t = bca::json_to_semilinear(bca::load_json_file(t_path));
    bca::IntersectionResult r = bca::intersect(s, t);
    if (opt.format == "json") {
        std::cout << bca::canonical_dump(bca::intersection_to_json(r));
    } else {
        if (r.witness)
            std::cout << "witness " << bca::vector_to_string(*r.witness) << "\n";
        else
            std::cout << "disjoint\n";
        std::cout << "C = " << bca::rational_to_string(r.C) << ", D = "
                  << bca::rational_to_string(r.D) << ", m = " << r.m.str()
                  << ", bound = " << bca::rational_to_string(r.bound) << "\n";
    }
    return r.witness ? 0 : 1;
}

int cmd_constants(const Options& opt, const std::string& path) {
    bca::BlindAutomaton a = load_blind(path);
    bca::AutomatonContext ctx(a, make_limits(opt));
    bca::AutomatonConstants k = bca::automaton_constants(ctx);
    if (opt.format == "json") {
        std::cout << bca::canonical_dump(bca::constants_to_json(k));
    } else {
        std::cout << "F = " << k.F.str() << "\nK = " << k.K.str() << "\nR = " << k.R
                  << "\nC = " << bca::rational_to_string(k.C)
                  << "\nD = " << bca::rational_to_string(k.D)
                  << "\nP = " << bca::rational_to_string(k.P)
                  << "\nQ = " << bca::rational_to_string(k.Q) << "\n";
    }
    return 0;
}

int cmd_growth(const Options& opt, const std::string& group_path, std::size_t radius) {
    auto [group, gens] = bca::json_to_group(bca::load_json_file(group_path));
    bca::GrowthTable t = bca::ball_sizes(group, gens, radius, opt.ball_cap);
    if (opt.format == "json") {
        std::cout << bca::canonical_dump(bca::growth_to_json(t));
    } else {
        std::cout << "radius size\n";
        for (std::size_t r = 0; r < t.sizes.size(); ++r)
            std::cout << std::setw(6) << r << " " << t.sizes[r] << "\n";
        std::cout << "degree estimate " << format_decimal(t.degree_estimate) << " ("
                  << bca::rational_to_string(t.degree_estimate) << ")\n";
    }
    return 0;
}

int cmd_witness_experiment(const Options& opt, const std::string& automaton_path,
                           const std::string& group_path, std::size_t radius) {
    bca::BlindAutomaton a = load_blind(automaton_path);
    auto [group, gens] = bca::json_to_group(bca::load_json_file(group_path));
    bca::AutomatonContext ctx(a, make_limits(opt));
    bca::WitnessReport r =
        bca::witness_map_experiment(ctx, group, gens, radius, opt.workers, opt.ball_cap);
    if (opt.format == "json") {
        std::cout << bca::canonical_dump(bca::witness_report_to_json(r));
    } else {
        std::cout << "constants: F = " << r.constants.F.str() << ", K = " << r.constants.K.str()
                  << ", R = " << r.constants.R
                  << ", P = " << bca::rational_to_string(r.constants.P)
                  << ", Q = " << bca::rational_to_string(r.constants.Q) << "\n";
        std::cout << "radius word -> witness (bound)\n";
        for (const auto& e : r.entries)
            std::cout << std::setw(6) << e.radius << " '" << bca::format_word(e.word) << "' -> "
                      << bca::vector_to_string(e.value) << " @" << e.state << " (|g| < "
                      << bca::rational_to_string(e.bound) << (e.within_bound ? ", ok" : ", VIOLATED")
                      << ")\n";
        std::cout << "multiplicity histogram:";
        for (const auto& [mult, count] : r.multiplicity_histogram)
            std::cout << " " << mult << "x" << count;
        std::cout << "\nchecks: sanity " << (r.sanity_ok ? "ok" : "FAIL") << ", bounds "
                  << (r.bounds_ok ? "ok" : "FAIL") << ", multiplicity "
                  << (r.multiplicity_ok ? "ok" : "FAIL") << ", pigeonhole "
                  << (r.pigeonhole_ok ? "ok" : "FAIL") << "\n";
        for (const auto& f : r.failures) std::cout << "failure: " << f << "\n";
    }
    return r.ok() ? 0 : 1;
}

int cmd_interchange(const Options& opt, std::size_t n) {
    bca::InterchangeReport r = bca::heisenberg_interchange_experiment(n);
    if (opt.format == "json") {
        std::cout << bca::canonical_dump(bca::interchange_report_to_json(r));
    } else {
        std::cout << "t1 = '" << bca::format_word(r.t1) << "', exchange index "
                  << r.base_index.str() << "\n";
        std::cout << "   r    s delta (s-r)^2 element-changed\n";
        for (const auto& p : r.pairs)
            std::cout << std::setw(4) << p.r << " " << std::setw(4) << p.s << " "
                      << std::setw(5) << p.index_delta.str() << " " << std::setw(7)
                      << (p.s - p.r) * (p.s - p.r) << " " << (p.element_changed ? "yes" : "NO")
                      << "\n";
        std::cout << "accepted swaps: " << (r.swap_accepted ? "FOUND (unexpected)" : "none")
                  << "\n";
    }
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for blind counter automata, semilinear sets and group word problems"};
    app.require_subcommand(1);

    Options opt;
    env_override(opt.component_cap, "BCA_COMPONENT_CAP");
    env_override(opt.vector_cap, "BCA_VECTOR_CAP");
    env_override(opt.ball_cap, "BCA_BALL_CAP");
    env_override(opt.workers, "BCA_WORKERS");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for randomized suites");
    app.add_option("--component-cap", opt.component_cap, "semilinear component cap");
    app.add_option("--vector-cap", opt.vector_cap, "reachable counter-vector cap");
    app.add_option("--ball-cap", opt.ball_cap, "ball enumeration element cap");
    app.add_option("--workers", opt.workers, "worker threads for experiments");

    std::string path, second, word_text, out_path;
    std::size_t radius = 5;
    std::size_t heisenberg_n = 3;
    bool certificate = false;

    auto* c_accept = app.add_subcommand("accept", "decide acceptance of a word");
    c_accept->add_option("automaton", path)->required();
    c_accept->add_option("word", word_text)->required();
    c_accept->add_flag("--certificate", certificate, "also print an explicit run");

    auto* c_cho = app.add_subcommand("cho-accept", "decide acceptance by a cho automaton");
    c_cho->add_option("automaton", path)->required();
    c_cho->add_option("word", word_text)->required();

    auto* c_convert = app.add_subcommand("convert", "convert between automaton kinds");
    std::string direction;
    c_convert->add_option("direction", direction)
        ->required()
        ->check(CLI::IsMember({"cho-to-blind", "blind-to-cho"}));
    c_convert->add_option("input", path)->required();
    c_convert->add_option("output", out_path)->required();

    auto* c_wp = app.add_subcommand("build-wp", "build a word-problem automaton from a group");
    c_wp->add_option("group", path)->required();
    c_wp->add_option("output", out_path)->required();

    auto* c_reach = app.add_subcommand("reach", "dump all epsilon-reach sets");
    c_reach->add_option("automaton", path)->required();

    auto* c_intersect = app.add_subcommand("intersect", "semilinear intersection witness");
    c_intersect->add_option("S", path)->required();
    c_intersect->add_option("T", second)->required();

    auto* c_constants = app.add_subcommand("constants", "derived automaton constants");
    c_constants->add_option("automaton", path)->required();

    auto* c_growth = app.add_subcommand("growth", "ball sizes and degree estimate");
    c_growth->add_option("group", path)->required();
    c_growth->add_option("--radius", radius, "maximal radius")->capture_default_str();

    auto* c_witness = app.add_subcommand("witness-experiment", "short-witness pipeline over a ball");
    c_witness->add_option("automaton", path)->required();
    c_witness->add_option("group", second)->required();
    c_witness->add_option("--radius", radius, "maximal radius")->capture_default_str();

    auto* c_inter = app.add_subcommand("interchange", "block-swap experiment in the Heisenberg group");
    c_inter->add_option("--heisenberg-n", heisenberg_n, "number of blocks")->capture_default_str();

    auto* c_selftest = app.add_subcommand("selftest", "run the built-in oracle suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_accept)) return cmd_accept(opt, path, word_text, certificate);
        if (app.got_subcommand(c_cho)) return cmd_cho_accept(opt, path, word_text);
        if (app.got_subcommand(c_convert)) return cmd_convert(direction, path, out_path);
        if (app.got_subcommand(c_wp)) return cmd_build_wp(path, out_path);
        if (app.got_subcommand(c_reach)) return cmd_reach(opt, path);
        if (app.got_subcommand(c_intersect)) return cmd_intersect(opt, path, second);
        if (app.got_subcommand(c_constants)) return cmd_constants(opt, path);
        if (app.got_subcommand(c_growth)) return cmd_growth(opt, path, radius);
        if (app.got_subcommand(c_witness)) return cmd_witness_experiment(opt, path, second, radius);
        if (app.got_subcommand(c_inter)) return cmd_interchange(opt, heisenberg_n);
        if (app.got_subcommand(c_selftest)) return bca::run_selftest(opt.seed, std::cout) ? 0 : 1;
    } catch (const bca::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const bca::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
