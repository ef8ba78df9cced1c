#ifndef WB_AUTOMATA_HPP
#define WB_AUTOMATA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wb/word.hpp"

namespace wb {

/// Complete deterministic automaton over a finite alphabet. Every state has a
/// transition on every alphabet letter; words using letters outside the
/// alphabet are rejected.
struct Dfa {
    std::vector<Letter> alphabet;  // sorted, duplicate-free
    int num_states = 0;
    int start = 0;
    std::vector<char> accepting;  // size num_states
    std::vector<int> trans;       // num_states * alphabet.size(), row-major

    int letter_index(const Letter& x) const;  // -1 when absent
    int step(int state, int letter_idx) const { return trans[static_cast<std::size_t>(state) * alphabet.size() + letter_idx]; }
    bool accepts(const Word& w) const;
};

/// Restricted regex AST: letters, concatenation, union, star; `e+` desugars to
/// `e e*` and `{a,b}` to `(a|b)` at parse time.
struct Regex {
    enum class Kind { Epsilon, Sym, Concat, Union, Star };
    Kind kind = Kind::Epsilon;
    Letter sym;
    std::shared_ptr<Regex> left, right;

    LetterSet alphabet() const;
};

using RegexPtr = std::shared_ptr<Regex>;

/// Grammar: letters `[a-z][0-9]*`, juxtaposition, `|`, postfix `*` and `+`,
/// `(...)`, `{x,y,...}`; whitespace ignored; `()` denotes the empty word.
RegexPtr parse_regex(const std::string& text);

/// Minimal complete DFA for L(r). `extra_alphabet` widens the alphabet beyond
/// the letters appearing in r.
Dfa compile(const RegexPtr& r, const LetterSet& extra_alphabet = {});

Dfa compile(const std::string& regex_text, const LetterSet& extra_alphabet = {});

/// Hopcroft minimization; result states are numbered canonically by BFS from
/// the start in alphabet order.
Dfa minimize(const Dfa& d);

/// True iff L(d1) = L(d2). Throws std::invalid_argument on alphabet mismatch.
bool dfa_equivalent(const Dfa& d1, const Dfa& d2);

/// DFA for { u : p u s in L(d) for some p, s }.
Dfa factor_language(const Dfa& d);

/// Shortest word in L(d1) ∩ L(d2) (BFS, alphabetical tie-break), or nullopt.
std::optional<Word> intersect_nonempty(const Dfa& d1, const Dfa& d2);

/// Product automaton; both inputs must share an alphabet.
Dfa dfa_intersection(const Dfa& d1, const Dfa& d2);

/// DFA for the reversed language.
Dfa reverse_language(const Dfa& d);

/// DFA over `alphabet` for the words containing u as a contiguous factor.
Dfa contains_factor_dfa(const Word& u, const std::vector<Letter>& alphabet);

/// DFA accepting exactly {w}.
Dfa singleton_dfa(const Word& w);

/// All accepted words of length <= max_len, in shortlex order.
std::vector<Word> language_upto(const Dfa& d, std::size_t max_len);

/// Dump format: {alphabet, states, start, accepting, transitions}.
std::string dfa_to_json(const Dfa& d);

}  // namespace wb

#endif
