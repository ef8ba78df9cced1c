#ifndef WB_MONOID_HPP
#define WB_MONOID_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wb/word.hpp"

namespace wb {

/// Finite associative multiplication table. `identity` may be absent (-1) for
/// bare semigroup tables produced by from_presentation; adjoin_identity turns
/// those into monoids. `factors` records the direct-product decomposition when
/// known, so identity checking can work componentwise.
struct FiniteMonoid {
    std::vector<std::string> elements;  // labels, index = element id
    int identity = -1;
    int zero = -1;
    std::vector<int> table;  // size*size, row-major: table[i*n+j] = i*j
    std::map<Letter, int> generators;
    std::vector<std::shared_ptr<const FiniteMonoid>> factors;  // empty unless a direct product

    int size() const { return static_cast<int>(elements.size()); }
    int mul(int i, int j) const { return table[static_cast<std::size_t>(i) * elements.size() + j]; }
    const std::string& label(int i) const { return elements[static_cast<std::size_t>(i)]; }
};

/// One side of a presentation relation: a word over the generators or the
/// distinguished zero (written `0`).
struct RelSide {
    bool is_zero = false;
    Word word;
};

using Relation = std::pair<RelSide, RelSide>;

/// Parses a chain like `a^2=ab=0` into pairwise relations (each side a word or `0`).
std::vector<Relation> parse_relations(const std::string& text);

/// Semigroup from a presentation, by congruence closure over all words of
/// length <= cap: relations are applied in every context, classes are the
/// connected components, elements are labeled by shortlex-minimal
/// representatives. The result has no identity element; zero is present iff
/// the relations mention `0`.
/// Throws std::runtime_error if the closure does not stabilize within cap.
FiniteMonoid from_presentation(const std::vector<Letter>& gens, const std::vector<Relation>& relations,
                               std::size_t cap = 6);

/// Validation report: empty vector means all invariants hold. Checks table
/// range, associativity (with witness triples), identity law, zero absorption,
/// generator indices.
std::vector<std::string> validate(const FiniteMonoid& m);

/// Adjoins a fresh identity element (always, even if the table has one).
FiniteMonoid adjoin_identity(const FiniteMonoid& s);

/// Componentwise product; remembers both factors for componentwise evaluation.
FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n);

/// Reverse multiplication: x*y in the result = y*x in m.
FiniteMonoid opposite(const FiniteMonoid& m);

/// Product of the assigned images, left to right; empty word -> identity.
/// Throws std::invalid_argument on an unassigned letter, or an empty word when
/// m has no identity.
int eval_word(const FiniteMonoid& m, const std::map<Letter, int>& assignment, const Word& w);

/// Evaluates w using m.generators as the assignment.
int eval_generators(const FiniteMonoid& m, const Word& w);

struct Hom {
    std::vector<int> map;  // source element -> target element
};

enum class MorphismKind { Onto, Iso };

/// Deterministic backtracking search for a surjective (or bijective)
/// homomorphism; returns the first witness in index order, or nullopt.
std::optional<Hom> morphism_search(const FiniteMonoid& m, const FiniteMonoid& n, MorphismKind kind);

/// True iff h is a homomorphism m -> n (products and identity respected).
bool is_homomorphism(const FiniteMonoid& m, const FiniteMonoid& n, const Hom& h);

/// Named tables: A, E, A0, B0, Q, L2 (semigroups) and A1, E1, A01, B01, Q1,
/// L21 (with adjoined identity). Throws std::invalid_argument on unknown names.
FiniteMonoid fixture(const std::string& name);

/// JSON table format: {"elements": [...], "identity": label-or-null,
/// "zero": label-or-null, "table": [[label]]}. Deterministic output.
std::string monoid_to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const std::string& text);

}  // namespace wb

#endif
