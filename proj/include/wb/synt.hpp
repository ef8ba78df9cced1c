#ifndef WB_SYNT_HPP
#define WB_SYNT_HPP

#include "wb/automata.hpp"
#include "wb/congruence.hpp"
#include "wb/monoid.hpp"

namespace wb {

/// Syntactic monoid of L(d): the transition monoid of the minimal complete
/// DFA. Elements are labeled by shortest witness words (BFS, alphabetical
/// tie-break); the identity is labeled "1" and the absorbing element, if any,
/// is labeled "0". Generators map each alphabet letter to its element.
///
/// With ambient_zero (the default) the language is read as a subset of the
/// free monoid over a countably infinite alphabet: letters outside d's
/// alphabet act as a single junk generator sending every state to a dead
/// sink, which yields the absorbing element. Pass false for languages whose
/// ambient alphabet is exactly d's alphabet (e.g. the odd-length language).
FiniteMonoid syntactic_monoid(const Dfa& d, bool ambient_zero = true);

/// syntactic_monoid(class_dfa(c, rep)).
FiniteMonoid syntactic_of_class(const CongruenceId& c, const Word& rep);

/// Syntactic monoid of the singleton language {w}.
FiniteMonoid syntactic_of_word(const Word& w);

}  // namespace wb

#endif
