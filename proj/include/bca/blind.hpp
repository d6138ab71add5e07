#ifndef BCA_BLIND_HPP_
#define BCA_BLIND_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bca/numeric.hpp"
#include "bca/semilinear.hpp"
#include "bca/vec.hpp"
#include "bca/words.hpp"

namespace bca {

// Automaton over Z^n x X*: counters can be incremented but never read, and
// a word is accepted when a terminal state is reached with every counter
// back at zero. Edges read at most one letter; normalize() produces this
// form from word-labelled input.
struct BlindEdge {
    int src = 0;
    IntVector inc;
    std::optional<std::string> input;  // nullopt = epsilon
    int dst = 0;
};

struct BlindAutomaton {
    std::size_t dim = 0;
    Alphabet alphabet;
    std::vector<std::string> states;
    int initial = 0;
    std::vector<int> terminals;  // ascending, unique
    std::vector<BlindEdge> edges;

    int state_index(const std::string& name) const;
    bool is_terminal(int q) const;
};

// Checks all structural invariants; throws ValidationError.
void validate(const BlindAutomaton& a);

// Automata as parsed from files: edges may read whole words and states are
// referenced by name.
struct RawEdge {
    std::string src;
    IntVector inc;
    Word input;  // empty = epsilon
    std::string dst;
};

struct RawAutomaton {
    std::size_t dim = 0;
    Alphabet alphabet;
    std::vector<std::string> states;
    std::string initial;
    std::vector<std::string> terminals;
    std::vector<RawEdge> edges;
};

// Splits every edge reading m >= 2 letters into m single-letter edges
// through fresh states (increment on the first edge, zero on the rest).
// The accepted language is unchanged.
BlindAutomaton normalize(const RawAutomaton& raw);

// reach[p][q] is the set of register values labelling epsilon-only paths
// from p to q. reach[p][p] always contains the zero vector.
using ReachTable = std::vector<std::vector<SemilinearSet>>;

ReachTable epsilon_reach(const BlindAutomaton& a, const Limits& limits = {});

// Edge-reversed automaton with negated increments and inverted letters;
// initial/terminal markings are copied unchanged (the backward analyses
// supply their own start rows).
BlindAutomaton reverse_automaton(const BlindAutomaton& a);

// Bundles an automaton with lazily computed epsilon-reach tables for it
// and its reversal. Single-writer: construct, then share read-only.
class AutomatonContext {
public:
    explicit AutomatonContext(BlindAutomaton a, Limits limits = {});

    const BlindAutomaton& automaton() const { return automaton_; }
    const Limits& limits() const { return limits_; }
    const ReachTable& reach();
    const BlindAutomaton& reversed();
    const ReachTable& reversed_reach();

private:
    BlindAutomaton automaton_;
    Limits limits_;
    std::optional<ReachTable> reach_;
    std::optional<BlindAutomaton> reversed_;
    std::optional<ReachTable> reversed_reach_;
};

// Per-state register sets, indexed like the automaton's state list.
using RegisterSets = std::vector<SemilinearSet>;

// For each state q, the set of g such that (g, w) labels a path from the
// initial state to q. Dynamic programming over prefixes: letter-edge steps
// alternate with epsilon-closure steps through the reach table.
RegisterSets reachable_register_set(AutomatonContext& ctx, const Word& w);
RegisterSets reachable_register_set(const BlindAutomaton& a, const Word& w);

// For each state q, the set of g such that (g, w) labels a path from q to
// some terminal state. Runs the forward DP on the reversed automaton.
RegisterSets coreachable_register_set(AutomatonContext& ctx, const Word& w);

// Complete acceptance decision: some terminal's reachable set contains 0.
bool accept(AutomatonContext& ctx, const Word& w);
bool accept(const BlindAutomaton& a, const Word& w);

// A concrete run: edge indices plus the counter trace of partial sums
// (trace.front() is zero, trace.back() the total increment).
struct Run {
    std::vector<std::size_t> edge_indices;
    std::vector<IntVector> trace;
};

// Validates that `run` reads `w` from the initial state to a terminal
// state with correct trace and zero total.
bool run_accepts(const BlindAutomaton& a, const Run& run, const Word& w);

// Bounded run search: a run reading w from `from` to a state in `targets`
// with the given total increment, using at most `epsilon_budget` epsilon
// edges between consecutive letters and at most `node_cap` search nodes.
std::optional<Run> find_run(const BlindAutomaton& a, const Word& w, int from,
                            const std::vector<int>& targets, const IntVector& total,
                            const Int& epsilon_budget, std::size_t node_cap = 2000000);

enum class CertificateStatus { found, rejected, budget_exceeded };

struct CertificateResult {
    CertificateStatus status = CertificateStatus::rejected;
    std::optional<Run> run;
};

// The acceptance decision is always made by the DP; when accepting, a
// bounded search reconstructs an explicit run (epsilon segments capped by
// |states| * (1 + max coefficient in the DP's membership witness)).
CertificateResult accept_with_certificate(AutomatonContext& ctx, const Word& w);

// F dominates every epsilon-reach constant bound and edge-increment norm;
// K dominates every epsilon-reach generator bound; R is the state count;
// (C, D) are intersection constants valid for every pair of linear sets
// whose periods are drawn from the reach tables (in either sign), and
// P = 2CF, Q = CF + D.
struct AutomatonConstants {
    Int F;
    Int K;
    std::size_t R = 0;
    Rational C;
    Rational D;
    Rational P;
    Rational Q;
};

AutomatonConstants automaton_constants(AutomatonContext& ctx);

struct ShortWitness {
    int state = 0;
    IntVector value;
};

enum class ShortWitnessStatus { found, not_word_problem };

struct ShortWitnessResult {
    ShortWitnessStatus status = ShortWitnessStatus::not_word_problem;
    std::optional<ShortWitness> witness;
};

// For w with w w^-1 accepted: a state q and minimal-norm g such that (g, w)
// labels an initial-to-q path and (-g, w^-1) labels a q-to-terminal path.
// The caller asserts the automaton accepts a word problem; when w w^-1 is
// rejected the precondition failure is reported in the status.
ShortWitnessResult short_witness(AutomatonContext& ctx, const Word& w);

// No epsilon edges, and at most one edge per (state, letter).
bool is_deterministic_blind(const BlindAutomaton& a);

}  // namespace bca

#endif  // BCA_BLIND_HPP_
