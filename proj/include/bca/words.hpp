#ifndef BCA_WORDS_HPP_
#define BCA_WORDS_HPP_

#include <optional>
#include <string>
#include <vector>

namespace bca {

// A letter and its partner under the fixed-point-free involution.
struct Letter {
    std::string symbol;
    std::string inverse;

    bool operator==(const Letter& o) const {
        return symbol == o.symbol && inverse == o.inverse;
    }
};

// Symmetric alphabet: closed under the involution, which has no fixed
// points. Letters keep their declaration order (ties in searches and
// reports are broken by this order unless stated otherwise).
class Alphabet {
public:
    Alphabet() = default;

    // Adds a letter pair; the partner entry is created automatically.
    void add_pair(const std::string& symbol, const std::string& inverse);

    bool contains(const std::string& token) const;
    const std::string& inverse_of(const std::string& token) const;
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }

private:
    std::vector<Letter> letters_;
};

// Words are sequences of letter tokens.
using Word = std::vector<std::string>;

// Whitespace-separated tokens; a trailing apostrophe conventionally marks
// an inverse letter ("a'" is the inverse of "a").
Word parse_word(const std::string& text);

std::string format_word(const Word& w);

// Formal inverse: reversed word with every letter inverted.
Word inverse_word(const Alphabet& alphabet, const Word& w);

// Token for the inverse of `symbol` under the apostrophe convention.
std::string apostrophe_inverse(const std::string& symbol);

}  // namespace bca

#endif  // BCA_WORDS_HPP_
