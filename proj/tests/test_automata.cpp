#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wb/automata.hpp"

using namespace wb;

namespace {

Word random_word(std::mt19937& rng, const std::vector<Letter>& sigma, std::size_t max_len) {
    Word w;
    std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) w += sigma[rng() % sigma.size()];
    return w;
}

}  // namespace

TEST_CASE("regex parse errors") {
    CHECK_THROWS_AS(parse_regex("a|"), ParseError);
    CHECK_THROWS_AS(parse_regex("(a"), ParseError);
    CHECK_THROWS_AS(parse_regex("*a"), ParseError);
    CHECK_THROWS_AS(parse_regex("{a"), ParseError);
    CHECK_THROWS_AS(parse_regex("a)"), ParseError);
}

TEST_CASE("compile and accepts") {
    Dfa d = compile("a+ b {a,b}*");
    CHECK(d.accepts(parse_word("ab")));
    CHECK(d.accepts(parse_word("aabba")));
    CHECK_FALSE(d.accepts(parse_word("ba")));
    CHECK_FALSE(d.accepts(Word{}));
    Dfa e = compile("()");
    CHECK(e.accepts(Word{}));
    CHECK_FALSE(e.accepts(parse_word("a")));
}

TEST_CASE("words outside the alphabet are rejected") {
    Dfa d = compile("a*");
    CHECK(d.accepts(parse_word("aaa")));
    CHECK_FALSE(d.accepts(parse_word("ab")));
    Dfa wide = compile("a*", LetterSet{Letter('b')});
    CHECK_FALSE(wide.accepts(parse_word("ab")));
    CHECK(wide.alphabet.size() == 2);
}

TEST_CASE("dfa_equivalent on classic identities") {
    CHECK(dfa_equivalent(compile("(a|b)*"), compile("(a*b*)*")));
    CHECK(dfa_equivalent(compile("a(ba)*"), compile("(ab)*a")));
    CHECK_FALSE(dfa_equivalent(compile("(ab)*"), compile("(ba)*")));
    CHECK_THROWS_AS(dfa_equivalent(compile("a*"), compile("b*")), std::invalid_argument);
}

TEST_CASE("minimize is canonical: equal languages give equal tables") {
    Dfa d1 = minimize(compile("(a|b)*abb(a|b)*"));
    Dfa d2 = minimize(compile("(a|b)* a b b (a|b)*"));
    CHECK(d1.num_states == d2.num_states);
    CHECK(d1.trans == d2.trans);
    CHECK(d1.accepting == d2.accepting);
}

TEST_CASE("minimize agrees with language up to length 8 (property)") {
    std::mt19937 rng(4242);
    std::vector<Letter> sigma{Letter('a'), Letter('b')};
    std::vector<std::string> patterns{"(a|b)*a", "ab*a|b", "(aa|bb)*", "a+b+", "(a|b)(a|b)(a|b)"};
    for (const auto& p : patterns) {
        Dfa d = compile(p);
        Dfa m = minimize(d);
        for (int trial = 0; trial < 400; ++trial) {
            Word w = random_word(rng, sigma, 8);
            CHECK(d.accepts(w) == m.accepts(w));
        }
    }
}

TEST_CASE("factor_language") {
    // factors of (ab)* are exactly the factors of words in (ab)^n
    Dfa f = factor_language(compile("(ab)*"));
    CHECK(f.accepts(Word{}));
    CHECK(f.accepts(parse_word("ba")));
    CHECK(f.accepts(parse_word("bab")));
    CHECK_FALSE(f.accepts(parse_word("aa")));
    CHECK_FALSE(f.accepts(parse_word("bb")));
}

TEST_CASE("intersect_nonempty returns shortest witness with alphabetical tie-break") {
    auto w = intersect_nonempty(compile("(a|b)*b"), compile("b(a|b)*"));
    REQUIRE(w.has_value());
    CHECK(*w == parse_word("b"));
    CHECK_THROWS_AS(intersect_nonempty(compile("a+"), compile("b+")), std::invalid_argument);
    auto empty = intersect_nonempty(compile("a a*", LetterSet{Letter('b')}), compile("b b*", LetterSet{Letter('a')}));
    CHECK_FALSE(empty.has_value());
    auto tie = intersect_nonempty(compile("(a|b)(a|b)"), compile("(a|b)*"));
    REQUIRE(tie.has_value());
    CHECK(*tie == parse_word("aa"));
}

TEST_CASE("dfa_intersection matches conjunction (property)") {
    std::mt19937 rng(77);
    std::vector<Letter> sigma{Letter('a'), Letter('b')};
    Dfa d1 = compile("(a|b)*a(a|b)*");
    Dfa d2 = compile("(a|b)*b");
    Dfa both = dfa_intersection(d1, d2);
    for (int trial = 0; trial < 500; ++trial) {
        Word w = random_word(rng, sigma, 9);
        CHECK(both.accepts(w) == (d1.accepts(w) && d2.accepts(w)));
    }
}

TEST_CASE("reverse_language") {
    Dfa r = reverse_language(compile("ab*c"));
    CHECK(r.accepts(parse_word("cba")));
    CHECK(r.accepts(parse_word("cbbba")));
    CHECK_FALSE(r.accepts(parse_word("abc")));
    std::mt19937 rng(11);
    std::vector<Letter> sigma{Letter('a'), Letter('b')};
    Dfa d = compile("a(a|b)*b");
    Dfa rd = reverse_language(d);
    for (int trial = 0; trial < 400; ++trial) {
        Word w = random_word(rng, sigma, 8);
        CHECK(d.accepts(w) == rd.accepts(reverse(w)));
    }
}

TEST_CASE("contains_factor_dfa matches is_factor (property)") {
    std::mt19937 rng(314159);
    std::vector<Letter> sigma{Letter('a'), Letter('b')};
    for (int fi = 0; fi < 20; ++fi) {
        Word u = random_word(rng, sigma, 4);
        Dfa d = contains_factor_dfa(u, sigma);
        for (int trial = 0; trial < 200; ++trial) {
            Word w = random_word(rng, sigma, 10);
            CHECK(d.accepts(w) == is_factor(u, w));
        }
    }
}

TEST_CASE("singleton_dfa") {
    Word w = parse_word("abba");
    Dfa d = singleton_dfa(w);
    CHECK(d.accepts(w));
    CHECK_FALSE(d.accepts(parse_word("abb")));
    CHECK_FALSE(d.accepts(parse_word("abbab")));
    CHECK_FALSE(d.accepts(parse_word("baba")));
    Dfa e = singleton_dfa(Word{});
    CHECK(e.accepts(Word{}));
}

TEST_CASE("language_upto enumerates in shortlex order") {
    auto words = language_upto(compile("(a|b)*"), 2);
    REQUIRE(words.size() == 7);
    CHECK(words[0] == Word{});
    CHECK(words[1] == parse_word("a"));
    CHECK(words[2] == parse_word("b"));
    CHECK(words[3] == parse_word("aa"));
    CHECK(words[6] == parse_word("bb"));
    auto odd = language_upto(compile("a(aa)*"), 6);
    CHECK(odd.size() == 3);
}

TEST_CASE("dfa_to_json emits the expected fields") {
    std::string js = dfa_to_json(compile("a"));
    CHECK(js.find("\"alphabet\"") != std::string::npos);
    CHECK(js.find("\"transitions\"") != std::string::npos);
    CHECK(js.find("\"accepting\"") != std::string::npos);
}
