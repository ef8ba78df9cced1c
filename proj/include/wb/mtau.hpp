#ifndef WB_MTAU_HPP
#define WB_MTAU_HPP

#include <optional>
#include <string>
#include <vector>

#include "wb/congruence.hpp"
#include "wb/monoid.hpp"
#include "wb/synt.hpp"

namespace wb {

/// A union of tau-classes W inside the infinite-alphabet free monoid:
/// a single class, everything over a finite alphabet, or the words over a
/// finite alphabet satisfying a predicate (currently only xy-limited).
struct WSpec {
    enum class Kind { SingleClass, FullStar, PredicateUnion };

    Kind kind = Kind::SingleClass;
    CongruenceId cong;
    Word rep;                      // SingleClass only
    std::vector<Letter> alphabet;  // FullStar / PredicateUnion
    std::string predicate;         // PredicateUnion: "xy-limited"

    static WSpec single_class(CongruenceId c, Word rep);
    static WSpec full_star(CongruenceId c, std::vector<Letter> alphabet);
    static WSpec predicate_union(CongruenceId c, std::vector<Letter> alphabet, std::string predicate);

    /// The spec alphabet: content(rep) for SingleClass, the given alphabet otherwise.
    std::vector<Letter> sigma() const;
};

/// M_tau(W): Rees quotient of the free monoid mod tau over the ideal of
/// classes that are not factor-classes of W. Elements are the factor-classes
/// (labeled by shortlex-minimal representatives) plus the zero, which always
/// exists because the ambient alphabet is infinite. Throws std::runtime_error
/// when more than cap elements appear (infinite quotient).
FiniteMonoid m_tau(const WSpec& w, std::size_t cap = 10000);

/// All tau-classes over the alphabet with concatenate-then-canonicalize
/// product; no zero. Throws std::runtime_error at cap elements (e.g. T1 over
/// two letters is infinite).
FiniteMonoid relatively_free(const CongruenceId& c, const std::vector<Letter>& alphabet,
                             std::size_t cap = 10000);

struct OntoReport {
    int mtau_size = 0;
    int synt_size = 0;
    std::optional<Hom> onto;
    bool iso = false;
};

/// Quotient-vs-syntactic check: builds m_tau(SingleClass(c, rep)) and
/// syntactic_of_class(c, rep) and searches for a surjective homomorphism.
OntoReport onto_synt_check(const CongruenceId& c, const Word& rep);

}  // namespace wb

#endif
