#ifndef BCA_HEISENBERG_HPP_
#define BCA_HEISENBERG_HPP_

#include <string>

#include "bca/numeric.hpp"
#include "bca/words.hpp"

namespace bca {

// Upper unitriangular 3x3 integer matrix with (1,2) = a, (2,3) = b,
// (1,3) = c; the multiplication law is forced by matrix algebra:
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
struct HeisenbergElement {
    Int a;
    Int b;
    Int c;

    bool operator==(const HeisenbergElement& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    bool operator<(const HeisenbergElement& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

HeisenbergElement heisenberg_identity();
HeisenbergElement heisenberg_multiply(const HeisenbergElement& l, const HeisenbergElement& r);
HeisenbergElement heisenberg_inverse(const HeisenbergElement& m);

// Image of a letter among x, y, z and their primed inverses.
HeisenbergElement heisenberg_letter(const std::string& token);

// Left-to-right product of the matrices for the letters of w.
HeisenbergElement heisenberg_evaluate(const Word& w);

bool heisenberg_wp_member(const Word& w);

// The symmetric alphabet {x, x', y, y', z, z'}.
Alphabet heisenberg_alphabet();

}  // namespace bca

#endif  // BCA_HEISENBERG_HPP_
