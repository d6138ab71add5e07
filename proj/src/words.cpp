#include "bca/words.hpp"

#include <sstream>

#include "bca/errors.hpp"

namespace bca {

void Alphabet::add_pair(const std::string& symbol, const std::string& inverse) {
    if (symbol.empty() || inverse.empty())
        throw ValidationError("alphabet tokens must be nonempty");
    if (symbol == inverse)
        throw ValidationError("letter involution must be fixed-point-free: '" + symbol + "'");
    for (const Letter& l : letters_) {
        if (l.symbol == symbol || l.symbol == inverse) {
            // Re-declaration must be consistent with the existing pairing.
            if ((l.symbol == symbol && l.inverse != inverse) ||
                (l.symbol == inverse && l.inverse != symbol))
                throw ValidationError("conflicting involution for letter '" + l.symbol + "'");
            return;
        }
    }
    letters_.push_back({symbol, inverse});
    letters_.push_back({inverse, symbol});
}

bool Alphabet::contains(const std::string& token) const {
    for (const Letter& l : letters_)
        if (l.symbol == token) return true;
    return false;
}

const std::string& Alphabet::inverse_of(const std::string& token) const {
    for (const Letter& l : letters_)
        if (l.symbol == token) return l.inverse;
    throw ValidationError("unknown letter '" + token + "'");
}

Word parse_word(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) w.push_back(token);
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += w[i];
    }
    return s;
}

Word inverse_word(const Alphabet& alphabet, const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(alphabet.inverse_of(*it));
    return r;
}

std::string apostrophe_inverse(const std::string& symbol) {
    if (!symbol.empty() && symbol.back() == '\'') return symbol.substr(0, symbol.size() - 1);
    return symbol + "'";
}

}  // namespace bca
