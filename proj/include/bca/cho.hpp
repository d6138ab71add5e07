#ifndef BCA_CHO_HPP_
#define BCA_CHO_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "bca/blind.hpp"
#include "bca/semilinear.hpp"
#include "bca/vec.hpp"
#include "bca/words.hpp"

namespace bca {

// Counter automaton over N^k x X*: edges carry nonnegative increments and
// always read a letter; a word is accepted when some path ends at a state
// v with accumulated counters inside the designated semilinear set of v.
// There are no epsilon edges and no terminal set.
struct ChoEdge {
    int src = 0;
    IntVector inc;  // entries >= 0
    std::string input;
    int dst = 0;
};

struct ChoAutomaton {
    std::size_t k = 0;
    Alphabet alphabet;
    std::vector<std::string> states;
    int initial = 0;
    std::vector<ChoEdge> edges;
    std::vector<SemilinearSet> accept_sets;  // one per state, dim k, entries >= 0
};

void validate(const ChoAutomaton& b);

struct ChoLimits {
    std::size_t max_vectors = 100000;  // cap on reachable counter vectors
};

// Acceptance by prefix DP carrying, per state, the finite set of counter
// vectors reachable by paths of the current length.
bool cho_accept(const ChoAutomaton& b, const Word& w, const ChoLimits& limits = {});

// At most one edge per (state, letter).
bool is_deterministic_cho(const ChoAutomaton& b);

// Language-preserving conversion to a Z^k automaton: for every linear
// component <v0; v1..vm> of a state's accept set, a fresh terminal state
// reachable by an epsilon edge with increment -v0 and carrying epsilon
// loops with increments -vq.
BlindAutomaton cho_to_blind(const ChoAutomaton& b);

// Language-preserving conversion of a deterministic epsilon-free Z^k
// automaton to a deterministic 2k-counter automaton: increments lift to
// N^2k (positive parts in the first k coordinates, negated negative parts
// in the last k), and terminal states accept the diagonal set
// <0; e_1+e_{k+1}, ..., e_k+e_{2k}>.
ChoAutomaton blind_det_to_cho(const BlindAutomaton& a);

}  // namespace bca

#endif  // BCA_CHO_HPP_
