#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wb/synt.hpp"

using namespace wb;

namespace {

Word random_word(std::mt19937& rng, const std::vector<Letter>& sigma, std::size_t max_len) {
    Word w;
    std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) w += sigma[rng() % sigma.size()];
    return w;
}

}  // namespace

TEST_CASE("odd-length language over its own ambient alphabet is the two-element group") {
    FiniteMonoid m = syntactic_monoid(compile("({a,b}{a,b})*{a,b}"), /*ambient_zero=*/false);
    REQUIRE(m.size() == 2);
    CHECK(validate(m).empty());
    int x = 1 - m.identity;
    CHECK(m.mul(x, x) == m.identity);  // x^2 = 1
    CHECK(m.zero == -1);
    // read as a subset of the infinite-alphabet free monoid it gains a zero
    FiniteMonoid ambient = syntactic_monoid(compile("({a,b}{a,b})*{a,b}"));
    CHECK(ambient.size() == 3);
    CHECK(ambient.zero >= 0);
}

TEST_CASE("a+ b {a,b}* has five syntactic elements") {
    FiniteMonoid m = syntactic_monoid(compile("a+ b {a,b}*"));
    CHECK(m.size() == 5);
    CHECK(validate(m).empty());
}

TEST_CASE("syntactic_of_class(T1, ab) is isomorphic to A01") {
    FiniteMonoid m = syntactic_of_class(kT1, parse_word("ab"));
    CHECK(m.size() == 5);
    CHECK(validate(m).empty());
    CHECK(morphism_search(m, fixture("A01"), MorphismKind::Iso).has_value());
}

TEST_CASE("syntactic monoid of a+ t a+ has the seven Myhill classes") {
    // hand enumeration: 1, a+, t, a+t, ta+, a+ta+, 0
    FiniteMonoid m = syntactic_of_class(CongruenceId::meet({kT1, kGamma}), parse_word("ata"));
    CHECK(m.size() == 7);
    CHECK(m.zero >= 0);
    CHECK(validate(m).empty());
}

TEST_CASE("syntactic_of_word on a single letter") {
    FiniteMonoid m = syntactic_of_word(parse_word("a"));
    REQUIRE(m.size() == 3);
    CHECK(m.identity >= 0);
    CHECK(m.zero >= 0);
    CHECK(validate(m).empty());
}

TEST_CASE("every constructed syntactic monoid validates") {
    for (const char* pattern : {"(ab)*", "a+b+", "(a|b)*a(a|b)*", "a+ t b b+ a {a,b}*"}) {
        FiniteMonoid m = syntactic_monoid(compile(pattern));
        CHECK(validate(m).empty());
        CHECK(m.identity == 0);
    }
}

TEST_CASE("same element implies same contexts; distinct elements split contexts (property)") {
    Dfa d = compile("a+ b {a,b}*");
    FiniteMonoid m = syntactic_monoid(d);
    std::vector<Letter> sigma = d.alphabet;
    std::mt19937 rng(60601);
    // enumerate all context words up to length 3
    std::vector<Word> contexts{Word{}};
    for (std::size_t i = 0; i < contexts.size() && contexts[i].size() < 3; ++i)
        for (const Letter& x : sigma) contexts.push_back(contexts[i] + x);
    for (int trial = 0; trial < 200; ++trial) {
        Word u = random_word(rng, sigma, 5);
        Word v = random_word(rng, sigma, 5);
        bool same_elem = eval_generators(m, u) == eval_generators(m, v);
        bool same_contexts = true;
        for (const Word& p : contexts)
            for (const Word& s : contexts)
                if (d.accepts(p + u + s) != d.accepts(p + v + s)) same_contexts = false;
        // bounded contexts can only refute equality, never prove it
        if (same_elem) CHECK(same_contexts);
        if (!same_contexts) CHECK_FALSE(same_elem);
    }
}

TEST_CASE("acceptance depends only on the syntactic element") {
    Dfa d = compile("a+ t b b+ a {a,b}*");
    FiniteMonoid m = syntactic_monoid(d);
    std::vector<Letter> sigma = d.alphabet;
    std::mt19937 rng(31337);
    std::map<int, bool> accept_of_elem;
    for (int trial = 0; trial < 500; ++trial) {
        Word w = random_word(rng, sigma, 8);
        int e = eval_generators(m, w);
        auto [it, fresh] = accept_of_elem.emplace(e, d.accepts(w));
        if (!fresh) CHECK(it->second == d.accepts(w));
    }
}
