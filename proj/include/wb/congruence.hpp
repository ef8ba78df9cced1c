#ifndef WB_CONGRUENCE_HPP
#define WB_CONGRUENCE_HPP

#include <string>
#include <vector>

#include "wb/automata.hpp"
#include "wb/word.hpp"

namespace wb {

/// One of the seven word congruences, or a flattened finite meet of them.
struct CongruenceId {
    enum class Tag { T1, Gamma, Alpha, Zeta, Beta, BetaDual, SimQ, Meet };

    Tag tag = Tag::T1;
    std::vector<CongruenceId> parts;  // non-empty, Meet-free, only when tag == Meet

    CongruenceId() = default;
    explicit CongruenceId(Tag t) : tag(t) {}

    static CongruenceId meet(std::vector<CongruenceId> components);

    /// CLI names: t1, gamma, alpha, zeta, beta, beta-dual, simq; meets caret-joined
    /// as in `t1^gamma`.
    static CongruenceId parse(const std::string& text);
    std::string name() const;

    bool operator==(const CongruenceId&) const = default;
};

inline const CongruenceId kT1{CongruenceId::Tag::T1};
inline const CongruenceId kGamma{CongruenceId::Tag::Gamma};
inline const CongruenceId kAlpha{CongruenceId::Tag::Alpha};
inline const CongruenceId kZeta{CongruenceId::Tag::Zeta};
inline const CongruenceId kBeta{CongruenceId::Tag::Beta};
inline const CongruenceId kBetaDual{CongruenceId::Tag::BetaDual};
inline const CongruenceId kSimQ{CongruenceId::Tag::SimQ};

/// Per-congruence normal form; two words are congruent iff their forms are equal.
struct CanonicalForm {
    std::string key;  // deterministic serialization, tagged by congruence

    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return key < o.key; }
};

CanonicalForm canonical(const CongruenceId& c, const Word& w);

bool equivalent(const CongruenceId& c, const Word& u, const Word& v);

/// All words over content(rep) of length <= max_len congruent to rep, shortlex order.
std::vector<Word> enumerate_class(const CongruenceId& c, const Word& rep, std::size_t max_len);

/// Minimal complete DFA over content(rep) accepting exactly the class of rep.
Dfa class_dfa(const CongruenceId& c, const Word& rep);

}  // namespace wb

#endif
