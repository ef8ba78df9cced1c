#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wb/monoid.hpp"

using namespace wb;

namespace {

std::vector<std::string> sorted_labels(const FiniteMonoid& m) {
    auto out = m.elements;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("parse_relations handles chains and zero") {
    auto rels = parse_relations("a^2=ab=0");
    REQUIRE(rels.size() == 2);
    CHECK_FALSE(rels[0].first.is_zero);
    CHECK(rels[0].first.word == parse_word("a^2"));
    CHECK(rels[0].second.word == parse_word("ab"));
    CHECK(rels[1].second.is_zero);
    CHECK_THROWS_AS(parse_relations("a^2"), ParseError);
    CHECK_THROWS_AS(parse_relations("a=="), ParseError);
}

TEST_CASE("fixture element sets match the listed normal forms") {
    CHECK(sorted_labels(fixture("A")) == std::vector<std::string>{"0", "a", "b", "ba", "bc", "c"});
    CHECK(sorted_labels(fixture("E")) == std::vector<std::string>{"0", "a", "ac", "b", "c"});
    CHECK(sorted_labels(fixture("A0")) == std::vector<std::string>{"0", "a", "b", "ba"});
    CHECK(sorted_labels(fixture("L2")) == std::vector<std::string>{"a", "b"});
    CHECK(fixture("B0").size() == 4);
    CHECK(sorted_labels(fixture("Q")) == std::vector<std::string>{"0", "b", "bc", "c", "e"});
}

TEST_CASE("fixture sizes with adjoined identity") {
    CHECK(fixture("A1").size() == 7);
    CHECK(fixture("E1").size() == 6);
    CHECK(fixture("A01").size() == 5);
    CHECK(fixture("B01").size() == 5);
    CHECK(fixture("Q1").size() == 6);
    CHECK(fixture("L21").size() == 3);
    CHECK_THROWS_AS(fixture("X"), std::invalid_argument);
}

TEST_CASE("every fixture validates") {
    for (const char* name : {"A", "E", "A0", "B0", "Q", "L2", "A1", "E1", "A01", "B01", "Q1", "L21"}) {
        auto problems = validate(fixture(name));
        CHECK_MESSAGE(problems.empty(), name, ": ", problems.empty() ? "" : problems.front());
    }
}

TEST_CASE("validate reports broken tables") {
    FiniteMonoid m = fixture("L21");
    m.table[1] = (m.table[1] + 1) % m.size();
    CHECK_FALSE(validate(m).empty());
    FiniteMonoid trivial;
    trivial.elements = {"1"};
    trivial.identity = 0;
    trivial.table = {0};
    CHECK(validate(trivial).empty());
}

TEST_CASE("eval on fixtures matches the relations") {
    FiniteMonoid e1 = fixture("E1");
    // ac * ac contains a^2 -> 0
    int ac = eval_generators(e1, parse_word("ac"));
    CHECK(e1.label(ac) == "ac");
    CHECK(e1.label(e1.mul(ac, ac)) == "0");
    FiniteMonoid l21 = fixture("L21");
    int a = eval_generators(l21, parse_word("a"));
    int b = eval_generators(l21, parse_word("b"));
    CHECK(l21.mul(a, b) == a);  // left-zero law
    CHECK(l21.mul(b, a) == b);
    CHECK(eval_word(l21, {}, Word{}) == l21.identity);
    CHECK_THROWS_AS(eval_word(fixture("L2"), {}, Word{}), std::invalid_argument);
}

TEST_CASE("derived zero products in B0") {
    FiniteMonoid b0 = fixture("B0");
    int f = eval_generators(b0, parse_word("f"));
    int c = eval_generators(b0, parse_word("c"));
    int e = eval_generators(b0, parse_word("e"));
    CHECK(b0.label(b0.mul(f, c)) == "0");
    CHECK(b0.label(b0.mul(c, e)) == "0");
    CHECK(b0.label(b0.mul(c, c)) == "0");
    CHECK(b0.label(b0.mul(e, c)) == "c");
    CHECK(b0.label(b0.mul(c, f)) == "c");
}

TEST_CASE("adjoin_identity adds a fresh identity") {
    FiniteMonoid l2 = fixture("L2");
    FiniteMonoid l21 = adjoin_identity(l2);
    CHECK(l21.size() == l2.size() + 1);
    CHECK(l21.identity == 0);
    CHECK(validate(l21).empty());
    // adjoining twice still adds a fresh one
    CHECK(adjoin_identity(l21).size() == l21.size() + 1);
}

TEST_CASE("direct_product multiplies sizes and evaluates componentwise") {
    FiniteMonoid p = direct_product(fixture("A1"), fixture("E1"));
    CHECK(p.size() == 42);
    CHECK(p.identity >= 0);
    CHECK(p.zero >= 0);
    CHECK(validate(p).empty());
    CHECK(p.factors.size() == 2);
    FiniteMonoid q = direct_product(p, fixture("L21"));
    CHECK(q.factors.size() == 3);
    CHECK(q.size() == 42 * 3);
}

TEST_CASE("opposite transposes and is an involution") {
    FiniteMonoid a1 = fixture("A1");
    FiniteMonoid op = opposite(a1);
    CHECK(validate(op).empty());
    for (int i = 0; i < a1.size(); ++i)
        for (int j = 0; j < a1.size(); ++j) CHECK(op.mul(i, j) == a1.mul(j, i));
    FiniteMonoid opop = opposite(op);
    CHECK(opop.table == a1.table);
}

TEST_CASE("morphism_search finds identity iso and collapse-onto") {
    FiniteMonoid l21 = fixture("L21");
    auto iso = morphism_search(l21, l21, MorphismKind::Iso);
    REQUIRE(iso.has_value());
    CHECK(is_homomorphism(l21, l21, *iso));
    FiniteMonoid trivial;
    trivial.elements = {"1"};
    trivial.identity = 0;
    trivial.table = {0};
    auto onto = morphism_search(l21, trivial, MorphismKind::Onto);
    REQUIRE(onto.has_value());
    CHECK(is_homomorphism(l21, trivial, *onto));
    // no iso between different sizes
    CHECK_FALSE(morphism_search(l21, trivial, MorphismKind::Iso).has_value());
    // no onto hom from the trivial monoid to L21
    CHECK_FALSE(morphism_search(trivial, l21, MorphismKind::Onto).has_value());
}

TEST_CASE("monoid json round-trips") {
    for (const char* name : {"E1", "L2", "A01"}) {
        FiniteMonoid m = fixture(name);
        std::string js = monoid_to_json(m);
        FiniteMonoid back = monoid_from_json(js);
        CHECK(back.elements == m.elements);
        CHECK(back.identity == m.identity);
        CHECK(back.zero == m.zero);
        CHECK(back.table == m.table);
        CHECK(monoid_to_json(back) == js);
    }
    CHECK_THROWS(monoid_from_json("{\"elements\": [\"a\",\"a\"]}"));
}
