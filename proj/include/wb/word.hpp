#ifndef WB_WORD_HPP
#define WB_WORD_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

/// Error with an input position, thrown by the text parsers.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// A letter: one lowercase base character optionally followed by digits (a, b, t1, ...).
struct Letter {
    std::string name;

    Letter() = default;
    explicit Letter(std::string n) : name(std::move(n)) {}
    explicit Letter(char c) : name(1, c) {}

    auto operator<=>(const Letter&) const = default;
};

using LetterSet = std::set<Letter>;

/// A finite sequence of letters. The empty word is the identity of concatenation.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    const Letter& operator[](std::size_t i) const { return letters[i]; }

    auto operator<=>(const Word&) const = default;

    Word& operator+=(const Word& w) {
        letters.insert(letters.end(), w.letters.begin(), w.letters.end());
        return *this;
    }
    friend Word operator+(Word a, const Word& b) { return a += b; }
    Word& operator+=(const Letter& x) {
        letters.push_back(x);
        return *this;
    }
    friend Word operator+(Word a, const Letter& x) { return a += x; }
};

/// Shortlex order (length first, then lexicographic); the canonical tie-break everywhere.
bool shortlex_less(const Word& a, const Word& b);

/// Parses the word grammar: tokens `[a-z][0-9]*`, optional `^k` with k >= 1,
/// whitespace separators allowed. Throws ParseError on malformed input.
Word parse_word(const std::string& text);

/// Emits a word in the same grammar; runs of length >= 2 use exponent form.
std::string to_string(const Word& w);

struct WordStats {
    LetterSet content;
    LetterSet simple;    // letters occurring exactly once
    LetterSet multiple;  // letters occurring at least twice
};

WordStats word_stats(const Word& w);

/// Factorization u = a0 t1 a1 ... tm am where t1..tm are the simple letters of u in
/// order and the blocks a0..am are the maximal factors between them.
struct BlockDecomposition {
    std::vector<Letter> skeleton;
    std::vector<Word> blocks;  // always skeleton.size() + 1 entries

    Word reassemble() const;
};

BlockDecomposition block_decompose(const Word& w);

struct WordClass {
    bool block_simple;  // every block involves at most one letter
    bool xy_limited;    // any two multiple letters share at most one block
};

WordClass classify_word(const Word& w);

/// Subsequence keeping, for each letter, its first two occurrences.
Word ini2(const Word& w);

Word reverse(const Word& w);

/// True iff u occurs in w as a contiguous factor.
bool is_factor(const Word& u, const Word& w);

/// Homomorphic image of w under theta; every letter of w must be in theta's domain
/// and every image must be non-empty.
Word apply_substitution(const Word& w, const std::map<Letter, Word>& theta);

}  // namespace wb

#endif
