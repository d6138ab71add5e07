#include "bca/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "bca/heisenberg.hpp"

namespace bca {

std::vector<std::pair<std::string, GroupElement>> generator_list(const GenMap& gens) {
    std::vector<std::pair<std::string, GroupElement>> out;
    for (const auto& l : gens.alphabet.letters()) out.emplace_back(l.symbol, gens.images.at(l.symbol));
    return out;
}

std::vector<BallEntry<GroupElement>> group_ball(const VAGroup& g, const GenMap& gens,
                                                std::size_t max_radius, std::size_t element_cap) {
    auto mult = [&g](const GroupElement& a, const GroupElement& b) { return multiply(g, a, b); };
    return ball_bfs<GroupElement>(identity_element(g), generator_list(gens), mult, max_radius,
                                  element_cap);
}

namespace {

std::vector<std::size_t> cumulative_sizes(const std::vector<std::size_t>& radii,
                                          std::size_t max_radius) {
    std::vector<std::size_t> sizes(max_radius + 1, 0);
    for (std::size_t r : radii) ++sizes[r];
    for (std::size_t i = 1; i <= max_radius; ++i) sizes[i] += sizes[i - 1];
    return sizes;
}

}  // namespace

GrowthTable ball_sizes(const VAGroup& g, const GenMap& gens, std::size_t max_radius,
                       std::size_t element_cap) {
    auto entries = group_ball(g, gens, max_radius, element_cap);
    std::vector<std::size_t> radii;
    radii.reserve(entries.size());
    for (const auto& e : entries) radii.push_back(e.radius);
    GrowthTable t;
    t.sizes = cumulative_sizes(radii, max_radius);
    t.degree_estimate = max_radius >= 3 ? growth_degree_estimate(t.sizes) : Rational(0);
    return t;
}

GrowthTable heisenberg_ball_sizes(std::size_t max_radius, std::size_t element_cap) {
    std::vector<std::pair<std::string, HeisenbergElement>> gens = {
        {"x", heisenberg_letter("x")},
        {"x'", heisenberg_letter("x'")},
        {"y", heisenberg_letter("y")},
        {"y'", heisenberg_letter("y'")},
    };
    auto entries = ball_bfs<HeisenbergElement>(heisenberg_identity(), gens, heisenberg_multiply,
                                               max_radius, element_cap);
    std::vector<std::size_t> radii;
    for (const auto& e : entries) radii.push_back(e.radius);
    GrowthTable t;
    t.sizes = cumulative_sizes(radii, max_radius);
    t.degree_estimate = max_radius >= 3 ? growth_degree_estimate(t.sizes) : Rational(0);
    return t;
}

Rational growth_degree_estimate(const std::vector<std::size_t>& sizes) {
    if (sizes.size() < 4) throw ValidationError("degree estimate needs at least 4 radii");
    const std::size_t max_radius = sizes.size() - 1;
    const std::size_t start = std::max<std::size_t>(1, max_radius / 2);
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    for (std::size_t i = start; i <= max_radius; ++i) {
        if (sizes[i] == 0) throw ValidationError("degenerate growth table");
        long double x = std::log(static_cast<long double>(i));
        long double y = std::log(static_cast<long double>(sizes[i]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    long double denom = count * sxx - sx * sx;
    if (count < 2 || std::abs(denom) < 1e-12L) throw ValidationError("degenerate growth table");
    double slope = static_cast<double>((count * sxy - sx * sy) / denom);
    return Rational(slope);
}

WitnessReport witness_map_experiment(AutomatonContext& ctx, const VAGroup& g, const GenMap& gens,
                                     std::size_t max_radius, std::size_t workers,
                                     std::size_t element_cap) {
    WitnessReport report;
    report.constants = automaton_constants(ctx);
    const BlindAutomaton& a = ctx.automaton();

    // Sanity: the automaton must agree with the group oracle on every word
    // of length <= 3 before any witness is trusted.
    report.sanity_ok = true;
    {
        std::vector<Word> sample = {{}};
        for (std::size_t len = 0; len < 3; ++len) {
            std::vector<Word> longer;
            for (const auto& w : sample) {
                if (w.size() < len) continue;
                for (const auto& l : a.alphabet.letters()) {
                    Word next = w;
                    next.push_back(l.symbol);
                    longer.push_back(std::move(next));
                }
            }
            sample.insert(sample.end(), longer.begin(), longer.end());
        }
        for (const auto& w : sample) {
            if (accept(ctx, w) != wp_member(g, gens, w)) {
                report.sanity_ok = false;
                report.failures.push_back("automaton disagrees with group oracle on '" +
                                          format_word(w) + "'");
                break;
            }
        }
    }
    if (!report.sanity_ok) return report;

    auto ball = group_ball(g, gens, max_radius, element_cap);
    report.entries.resize(ball.size());

    // Pre-warm the lazily built tables so the worker loop only reads.
    ctx.reach();
    ctx.reversed_reach();

    std::vector<std::string> errors(ball.size());
    auto process = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& h = ball[i];
            WitnessEntry entry;
            entry.word = h.word;
            entry.radius = h.radius;
            entry.bound = report.constants.P * Rational(Int(h.radius)) + report.constants.Q;
            auto sw = short_witness(ctx, h.word);
            if (sw.status != ShortWitnessStatus::found) {
                errors[i] = "short witness precondition failed on '" + format_word(h.word) + "'";
                report.entries[i] = std::move(entry);
                continue;
            }
            entry.state = a.states[static_cast<std::size_t>(sw.witness->state)];
            entry.value = sw.witness->value;
            entry.within_bound = Rational(norm(entry.value)) < entry.bound;
            report.entries[i] = std::move(entry);
        }
    };
    workers = std::max<std::size_t>(1, workers);
    if (workers == 1 || ball.size() < 2 * workers) {
        process(0, ball.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (ball.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t begin = w * chunk;
            std::size_t end = std::min(ball.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(process, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (!e.empty()) report.failures.push_back(std::move(e));

    report.bounds_ok = report.failures.empty();
    for (const auto& e : report.entries) {
        if (!e.within_bound) {
            report.bounds_ok = false;
            report.failures.push_back("witness bound violated for '" + format_word(e.word) + "'");
        }
    }

    // Multiplicity of each witness value, and the per-(value, state) cap.
    std::map<IntVector, std::size_t> by_value;
    std::map<std::pair<IntVector, std::string>, std::size_t> by_value_state;
    for (const auto& e : report.entries) {
        ++by_value[e.value];
        ++by_value_state[{e.value, e.state}];
    }
    report.multiplicity_ok = true;
    for (const auto& [value, count] : by_value) {
        ++report.multiplicity_histogram[count];
        report.max_multiplicity = std::max(report.max_multiplicity, count);
        if (count > report.constants.R) {
            report.multiplicity_ok = false;
            report.failures.push_back("witness value " + vector_to_string(value) +
                                      " shared by " + std::to_string(count) + " elements");
        }
    }
    report.pigeonhole_ok = true;
    for (const auto& [key, count] : by_value_state) {
        if (count > report.constants.R) {
            report.pigeonhole_ok = false;
            report.failures.push_back("witness class " + vector_to_string(key.first) + "@" +
                                      key.second + " has " + std::to_string(count) + " elements");
        }
    }
    return report;
}

InterchangeReport heisenberg_interchange_experiment(std::size_t n) {
    if (n < 2) throw ValidationError("interchange experiment needs n >= 2");
    InterchangeReport report;
    report.n = n;
    report.t1 = build_t1(n);
    report.base_index = exchange_index(report.t1);
    HeisenbergElement base = heisenberg_evaluate(report.t1);

    auto count_letters = [](const Word& w) {
        std::pair<std::size_t, std::size_t> c{0, 0};
        for (const auto& l : w) (l == "x" ? c.first : c.second)++;
        return c;
    };
    auto base_counts = count_letters(report.t1);

    Factorization f;
    for (std::size_t k = 1; k <= n; ++k) {
        f.separators.push_back({"x"});
        Word block(k, "y");
        f.factors.push_back(std::move(block));
    }
    f.separators.push_back({});

    report.all_ok = true;
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t s = r + 1; s <= n; ++s) {
            Word swapped = swap_blocks(f, r, s);
            InterchangePair pair;
            pair.r = r;
            pair.s = s;
            pair.index_delta = exchange_index(swapped) - report.base_index;
            pair.delta_matches = pair.index_delta == Int(s - r) * Int(s - r);
            pair.element_changed = !(heisenberg_evaluate(swapped) == base);
            pair.counts_preserved = count_letters(swapped) == base_counts;
            if (!pair.delta_matches || !pair.element_changed || !pair.counts_preserved)
                report.all_ok = false;
            report.pairs.push_back(std::move(pair));
        }
    }

    // The same factorization inside the full word-problem word: no block
    // swap may stay in the word problem.
    Word round_trip = report.t1;
    Word tail = inverse_word(heisenberg_alphabet(), report.t1);
    round_trip.insert(round_trip.end(), tail.begin(), tail.end());
    Factorization g = f;
    g.separators.back() = tail;
    auto found = interchange_search(heisenberg_wp_member, round_trip, g);
    report.swap_accepted = found.has_value();
    return report;
}

}  // namespace bca
