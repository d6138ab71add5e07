#ifndef BCA_GROUPS_HPP_
#define BCA_GROUPS_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bca/blind.hpp"
#include "bca/vec.hpp"
#include "bca/words.hpp"

namespace bca {

// Multiplication table of a finite group; associativity, identity and
// inverse laws are checked at validation.
struct FiniteGroupTable {
    std::size_t size = 1;
    std::vector<std::vector<int>> mult;
    std::vector<int> inverse;
    int identity = 0;

    int multiply(int a, int b) const { return mult[a][b]; }

    static FiniteGroupTable trivial();
    static FiniteGroupTable cyclic(std::size_t order);
};

void validate(const FiniteGroupTable& f);

// Z^n expanded by a finite group acting through integer matrices of
// determinant +-1. Elements are pairs (vector, finite part) with
// (v1,f1)(v2,f2) = (v1 + action(f1) v2, f1 f2).
struct VAGroup {
    std::size_t n = 0;
    FiniteGroupTable F;
    std::vector<std::vector<IntVector>> action;  // one n x n matrix per F element
};

void validate(const VAGroup& g);

struct GroupElement {
    IntVector vec;
    int f = 0;

    bool operator==(const GroupElement& o) const { return vec == o.vec && f == o.f; }
    bool operator<(const GroupElement& o) const {
        if (f != o.f) return f < o.f;
        return vec < o.vec;
    }
};

GroupElement identity_element(const VAGroup& g);
GroupElement multiply(const VAGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const VAGroup& g, const GroupElement& a);

// Letter-to-element assignment over a symmetric alphabet; the image of an
// inverse letter is the inverse image. Surjectivity onto the intended
// group is the caller's responsibility.
struct GenMap {
    Alphabet alphabet;
    std::map<std::string, GroupElement> images;
};

void validate(const VAGroup& g, const GenMap& gens);

// Left-to-right product of letter images; the empty word evaluates to the
// identity.
GroupElement evaluate(const VAGroup& g, const GenMap& gens, const Word& w);

// Ground-truth word problem oracle: does w evaluate to the identity?
bool wp_member(const VAGroup& g, const GenMap& gens, const Word& w);

// Deterministic blind automaton accepting exactly the word problem of the
// group under the generator assignment: states are the finite-part
// indices, the counters track the vector part of the prefix product.
BlindAutomaton build_wp_automaton(const VAGroup& g, const GenMap& gens);

// Number of pairs i < j with w_i = y and w_j = x; the minimum number of
// yx -> xy replacements needed to sort w into x^a y^b form.
Int exchange_index(const Word& w, const std::string& x = "x", const std::string& y = "y");

// The word x y x y^2 x y^3 ... x y^n.
Word build_t1(std::size_t n, const std::string& x = "x", const std::string& y = "y");

// w written as v_1 w_1 v_2 w_2 ... w_p v_{p+1}; the v_i may be empty, the
// designated factors w_i may not.
struct Factorization {
    std::vector<Word> separators;  // p+1 entries
    std::vector<Word> factors;     // p entries, each nonempty

    Word concatenated() const;
};

void validate_factorization(const Factorization& f, const Word& w);

// The word with designated factors r and s (1-based, r < s) interchanged.
Word swap_blocks(const Factorization& f, std::size_t r, std::size_t s);

// Scans pairs r < s in lexicographic order and returns the first whose
// swapped word is accepted. An absent result on an accepted word refutes
// the interchange property for the given factorization size.
std::optional<std::pair<std::size_t, std::size_t>> interchange_search(
    const std::function<bool(const Word&)>& accept_fn, const Word& w, const Factorization& f);

}  // namespace bca

#endif  // BCA_GROUPS_HPP_
