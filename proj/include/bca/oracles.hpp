#ifndef BCA_ORACLES_HPP_
#define BCA_ORACLES_HPP_

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "bca/blind.hpp"
#include "bca/cho.hpp"
#include "bca/semilinear.hpp"
#include "bca/words.hpp"

namespace bca {

// Deliberately naive reference enumerations, kept independent of the fast
// decision paths they cross-check. Used by the self-test command and the
// test suites; not intended for production-size inputs.

// Every sigma(u) with |sigma(u)| <= norm_cap for u in N^p with
// |u| <= coeff_budget, mapped to the least coefficient sum reaching it.
std::map<IntVector, Int> oracle_image_table(const LinearMap& sigma, const Int& coeff_budget,
                                            const Int& norm_cap);

// Naive feasibility walk: is target a nonnegative combination of the
// images with coefficient sum <= coeff_budget? Early-exits on success.
bool oracle_feasible(const LinearMap& sigma, const IntVector& target, const Int& coeff_budget);

// Members of the set reachable with coefficient sums <= coeff_budget.
std::set<IntVector> oracle_linear_members(const LinearSet& s, const Int& coeff_budget);
std::set<IntVector> oracle_semilinear_members(const SemilinearSet& s, const Int& coeff_budget);

// Sums of at most `summands` enumerated members, discarding intermediate
// values whose norm exceeds intermediate_cap.
std::set<IntVector> oracle_star_members(const SemilinearSet& s, const Int& coeff_budget,
                                        std::size_t summands, const Int& intermediate_cap);

// Acceptance by explicit path search using at most eps_budget epsilon
// edges in total; configurations are deduplicated.
bool oracle_accept_paths(const BlindAutomaton& a, const Word& w, std::size_t eps_budget);

// Values of epsilon-only paths from p to q with at most max_edges edges.
std::set<IntVector> oracle_epsilon_values(const BlindAutomaton& a, int p, int q,
                                          std::size_t max_edges);

// Register values of paths from the initial state reading exactly w, using
// at most eps_budget epsilon edges, per end state.
std::vector<std::set<IntVector>> oracle_register_values(const BlindAutomaton& a, const Word& w,
                                                        std::size_t eps_budget);

// Cho acceptance by independent recursive path walk.
bool oracle_cho_accept(const ChoAutomaton& b, const Word& w);

// All words over the alphabet with length <= max_len, in length-lex order.
void for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<void(const Word&)>& visit);

}  // namespace bca

#endif  // BCA_ORACLES_HPP_
