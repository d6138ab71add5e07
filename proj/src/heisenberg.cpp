#include "bca/heisenberg.hpp"

#include "bca/errors.hpp"

namespace bca {

HeisenbergElement heisenberg_identity() { return {0, 0, 0}; }

HeisenbergElement heisenberg_multiply(const HeisenbergElement& l, const HeisenbergElement& r) {
    return {l.a + r.a, l.b + r.b, l.c + r.c + l.a * r.b};
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& m) {
    return {-m.a, -m.b, m.a * m.b - m.c};
}

HeisenbergElement heisenberg_letter(const std::string& token) {
    if (token == "x") return {1, 0, 0};
    if (token == "y") return {0, 1, 0};
    if (token == "z") return {0, 0, 1};
    if (token == "x'") return heisenberg_inverse({1, 0, 0});
    if (token == "y'") return heisenberg_inverse({0, 1, 0});
    if (token == "z'") return heisenberg_inverse({0, 0, 1});
    throw ValidationError("unknown Heisenberg letter '" + token + "'");
}

HeisenbergElement heisenberg_evaluate(const Word& w) {
    HeisenbergElement acc = heisenberg_identity();
    for (const auto& x : w) acc = heisenberg_multiply(acc, heisenberg_letter(x));
    return acc;
}

bool heisenberg_wp_member(const Word& w) {
    return heisenberg_evaluate(w) == heisenberg_identity();
}

Alphabet heisenberg_alphabet() {
    Alphabet a;
    a.add_pair("x", "x'");
    a.add_pair("y", "y'");
    a.add_pair("z", "z'");
    return a;
}

}  // namespace bca
