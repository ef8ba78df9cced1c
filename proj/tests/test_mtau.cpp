#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wb/mtau.hpp"

using namespace wb;

namespace {

std::vector<Letter> letters(const char* s) {
    std::vector<Letter> out;
    for (const char* p = s; *p; ++p) out.emplace_back(*p);
    return out;
}

std::vector<std::string> sorted_labels(const FiniteMonoid& m) {
    auto out = m.elements;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("m_tau of the t1-class of ab is A01") {
    FiniteMonoid m = m_tau(WSpec::single_class(kT1, parse_word("ab")));
    CHECK(sorted_labels(m) == std::vector<std::string>{"0", "1", "a", "ab", "b"});
    CHECK(validate(m).empty());
    CHECK(morphism_search(m, fixture("A01"), MorphismKind::Iso).has_value());
}

TEST_CASE("m_tau of the (t1^gamma)-class of ata has the ten factor classes") {
    FiniteMonoid m = m_tau(WSpec::single_class(CongruenceId::meet({kT1, kGamma}), parse_word("ata")));
    CHECK(sorted_labels(m) == std::vector<std::string>{"0", "1", "a", "a^2", "a^2t", "at", "ata",
                                                       "t", "ta", "ta^2"});
    CHECK(validate(m).empty());
}

TEST_CASE("m_tau full star of alpha over {a,b} has six elements") {
    FiniteMonoid m = m_tau(WSpec::full_star(kAlpha, letters("ab")));
    CHECK(m.size() == 6);
    CHECK(m.zero >= 0);
    CHECK(validate(m).empty());
}

TEST_CASE("relatively_free counts classes without a zero") {
    FiniteMonoid alpha2 = relatively_free(kAlpha, letters("ab"));
    CHECK(alpha2.size() == 5);
    CHECK(alpha2.zero == -1);
    CHECK(validate(alpha2).empty());
    FiniteMonoid gamma1 = relatively_free(kGamma, letters("a"));
    CHECK(gamma1.size() == 3);
    CHECK(validate(gamma1).empty());
    CHECK_THROWS_AS(relatively_free(kT1, letters("ab"), 100), std::runtime_error);
}

TEST_CASE("xy-limited predicate union equals the full star over beta") {
    FiniteMonoid pred = m_tau(WSpec::predicate_union(kBeta, letters("abt"), "xy-limited"));
    FiniteMonoid star = m_tau(WSpec::full_star(kBeta, letters("abt")));
    CHECK(pred.elements == star.elements);
    CHECK(pred.table == star.table);
    CHECK(validate(pred).empty());
    CHECK_THROWS_AS(WSpec::predicate_union(kBeta, letters("ab"), "nope"), std::invalid_argument);
}

TEST_CASE("every nonzero m_tau element is a factor class of W") {
    WSpec spec = WSpec::single_class(CongruenceId::meet({kT1, kGamma}), parse_word("ata"));
    FiniteMonoid m = m_tau(spec);
    Dfa wdfa = class_dfa(spec.cong, spec.rep);
    std::vector<Letter> sigma = spec.sigma();
    for (int i = 0; i < m.size(); ++i) {
        if (i == m.zero || i == m.identity) continue;
        Word rep = parse_word(m.label(i));
        CHECK(intersect_nonempty(contains_factor_dfa(rep, sigma), wdfa).has_value());
    }
}

TEST_CASE("onto_synt_check reports the expected sizes and surjections") {
    OntoReport t1ab = onto_synt_check(kT1, parse_word("ab"));
    CHECK(t1ab.mtau_size == 5);
    CHECK(t1ab.synt_size == 5);
    CHECK(t1ab.onto.has_value());
    CHECK(t1ab.iso);

    OntoReport ata = onto_synt_check(CongruenceId::meet({kT1, kGamma}), parse_word("ata"));
    CHECK(ata.mtau_size == 10);
    CHECK(ata.synt_size == 7);
    REQUIRE(ata.onto.has_value());
    FiniteMonoid mt = m_tau(WSpec::single_class(CongruenceId::meet({kT1, kGamma}), parse_word("ata")));
    FiniteMonoid ms = syntactic_of_class(CongruenceId::meet({kT1, kGamma}), parse_word("ata"));
    CHECK(is_homomorphism(mt, ms, *ata.onto));
}

TEST_CASE("alpha full star surjects onto the syntactic monoid of a+ b {a,b}*") {
    FiniteMonoid mt = m_tau(WSpec::full_star(kAlpha, letters("ab")));
    FiniteMonoid ms = syntactic_monoid(compile("a+ b {a,b}*"));
    CHECK(mt.size() == 6);
    CHECK(ms.size() == 5);
    auto onto = morphism_search(mt, ms, MorphismKind::Onto);
    REQUIRE(onto.has_value());
    CHECK(is_homomorphism(mt, ms, *onto));
}
