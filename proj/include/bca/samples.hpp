#ifndef BCA_SAMPLES_HPP_
#define BCA_SAMPLES_HPP_

#include "bca/blind.hpp"
#include "bca/cho.hpp"
#include "bca/groups.hpp"
#include "bca/rng.hpp"
#include "bca/semilinear.hpp"

namespace bca {

// Z^n with the trivial finite part.
VAGroup make_free_abelian(std::size_t n);

// Standard symmetric generators a, b, c, d (one base letter per
// coordinate; at most four).
GenMap standard_generators(const VAGroup& g);

// Z x| C2 with the nontrivial element acting by negation: generated by the
// flip r and the translation t.
VAGroup make_infinite_dihedral();
GenMap dihedral_generators(const VAGroup& g);

// One-state word-problem automaton for Z (letters a, a').
BlindAutomaton wp_z_automaton();

// One-state word-problem automaton for Z^2 (letters a, a', b, b').
BlindAutomaton wp_z2_automaton();

// Single state, loop reading a with increment (1), accept set <2; 2>:
// accepts exactly a^{2m+2}.
ChoAutomaton sample_cho_even();

// Random generators for the parameter classes used by the randomized
// suites. All draws come from the deterministic Rng.
IntVector random_vector(Rng& rng, std::size_t dim, long long lo, long long hi);

LinearMap random_linear_map(Rng& rng, std::size_t max_domain, std::size_t max_codomain,
                            long long entry_range);

// Components and periods bounded as given; period entries bounded so the
// generator bound stays <= gen_bound, offsets so the constant bound stays
// <= const_bound.
SemilinearSet random_semilinear(Rng& rng, std::size_t dim, std::size_t max_components,
                                std::size_t max_periods, long long gen_bound,
                                long long const_bound);

// Automaton over letters a, a' with <= max_states states, <= max_edges
// edges, coordinatewise increments in {-1, 0, 1}; roughly epsilon_ratio of
// the edges read no letter.
BlindAutomaton random_blind_automaton(Rng& rng, std::size_t dim, std::size_t max_states,
                                      std::size_t max_edges, double epsilon_ratio);

ChoAutomaton random_cho_automaton(Rng& rng, std::size_t k, std::size_t max_states,
                                  std::size_t max_edges);

BlindAutomaton random_deterministic_blind(Rng& rng, std::size_t dim, std::size_t max_states);

Word random_word(Rng& rng, const Alphabet& alphabet, std::size_t max_len);

}  // namespace bca

#endif  // BCA_SAMPLES_HPP_
