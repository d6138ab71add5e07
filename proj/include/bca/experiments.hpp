#ifndef BCA_EXPERIMENTS_HPP_
#define BCA_EXPERIMENTS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bca/blind.hpp"
#include "bca/errors.hpp"
#include "bca/groups.hpp"
#include "bca/numeric.hpp"
#include "bca/words.hpp"

namespace bca {

// Cumulative ball sizes |B_0|, ..., |B_N| plus a heuristic degree read off
// the top half of the table. Sizes are nondecreasing and start at 1.
struct GrowthTable {
    std::vector<std::size_t> sizes;
    Rational degree_estimate;
};

// Breadth-first closure of {identity} under generator multiplication. The
// first word reaching an element is recorded; generators are explored in
// lexicographic letter order, so the recorded words are the
// length-lexicographic minimal representatives.
template <typename Elem>
struct BallEntry {
    Elem element;
    Word word;
    std::size_t radius = 0;
};

template <typename Elem, typename MultFn>
std::vector<BallEntry<Elem>> ball_bfs(const Elem& identity,
                                      std::vector<std::pair<std::string, Elem>> generators,
                                      MultFn mult, std::size_t max_radius,
                                      std::size_t element_cap = 1000000) {
    std::sort(generators.begin(), generators.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<BallEntry<Elem>> entries;
    std::map<Elem, std::size_t> seen;
    entries.push_back({identity, {}, 0});
    seen.emplace(identity, 0);
    std::size_t frontier_begin = 0;
    for (std::size_t radius = 1; radius <= max_radius; ++radius) {
        std::size_t frontier_end = entries.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const auto& [letter, image] : generators) {
                Elem next = mult(entries[i].element, image);
                if (seen.count(next)) continue;
                if (entries.size() >= element_cap)
                    throw ResourceLimitError("ball enumeration element cap exceeded");
                Word word = entries[i].word;
                word.push_back(letter);
                seen.emplace(next, entries.size());
                entries.push_back({std::move(next), std::move(word), radius});
            }
        }
        frontier_begin = frontier_end;
    }
    return entries;
}

std::vector<std::pair<std::string, GroupElement>> generator_list(const GenMap& gens);

std::vector<BallEntry<GroupElement>> group_ball(const VAGroup& g, const GenMap& gens,
                                                std::size_t max_radius,
                                                std::size_t element_cap = 1000000);

GrowthTable ball_sizes(const VAGroup& g, const GenMap& gens, std::size_t max_radius,
                       std::size_t element_cap = 1000000);

GrowthTable heisenberg_ball_sizes(std::size_t max_radius, std::size_t element_cap = 1000000);

// Least-squares slope of log size against log radius over the top half of
// the table. A heuristic indicator, not a certificate.
Rational growth_degree_estimate(const std::vector<std::size_t>& sizes);

// One ball element processed through the short-witness machinery.
struct WitnessEntry {
    Word word;
    std::size_t radius = 0;
    std::string state;
    IntVector value;
    Rational bound;  // P * radius + Q
    bool within_bound = false;
};

struct WitnessReport {
    AutomatonConstants constants;
    bool sanity_ok = false;       // automaton agreed with the oracle on the sample
    bool bounds_ok = false;       // every |value| < P|h| + Q
    bool multiplicity_ok = false; // every witness value shared by <= R elements
    bool pigeonhole_ok = false;   // every (value, state) class has <= R elements
    std::size_t max_multiplicity = 0;
    std::map<std::size_t, std::size_t> multiplicity_histogram;  // multiplicity -> count
    std::vector<WitnessEntry> entries;
    std::vector<std::string> failures;

    bool ok() const { return sanity_ok && bounds_ok && multiplicity_ok && pigeonhole_ok; }
};

// Runs the witness pipeline over the ball of radius N: sanity-checks the
// automaton against the group oracle, finds a short witness for each
// element's minimal word, and checks the norm bound and the preimage
// multiplicity cap. Violations are reported, never dropped; ok() gates the
// exit status.
WitnessReport witness_map_experiment(AutomatonContext& ctx, const VAGroup& g,
                                     const GenMap& gens, std::size_t max_radius,
                                     std::size_t workers = 1,
                                     std::size_t element_cap = 1000000);

struct InterchangePair {
    std::size_t r = 0;
    std::size_t s = 0;
    Int index_delta;
    bool delta_matches = false;     // delta == (s-r)^2
    bool element_changed = false;   // swapped word evaluates differently
    bool counts_preserved = false;  // letter counts unchanged by the swap
};

struct InterchangeReport {
    std::size_t n = 0;
    Word t1;
    Int base_index;
    std::vector<InterchangePair> pairs;
    bool swap_accepted = false;  // some block swap stayed in the word problem
    bool all_ok = false;

    bool ok() const { return all_ok && !swap_accepted; }
};

// Swaps every pair of y-blocks of x y x y^2 ... x y^n, confirming that each
// swap changes the evaluated element, shifts the exchange index by exactly
// (s-r)^2, and preserves letter counts; then confirms that no swap keeps
// t1 * t1^-1 inside the word problem.
InterchangeReport heisenberg_interchange_experiment(std::size_t n);

}  // namespace bca

#endif  // BCA_EXPERIMENTS_HPP_
