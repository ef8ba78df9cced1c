#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wb/word.hpp"

using namespace wb;

TEST_CASE("parse_word basic forms") {
    CHECK(parse_word("") == Word{});
    CHECK(parse_word("aba").size() == 3);
    CHECK(parse_word("a^3b") == parse_word("aaab"));
    CHECK(parse_word("  a  b ") == parse_word("ab"));
    CHECK(parse_word("t1t2").size() == 2);
    CHECK(parse_word("t12") == Word{{Letter("t12")}});
    CHECK(parse_word("t1^2")[0] == Letter("t1"));
    CHECK(parse_word("t1^2").size() == 2);
}

TEST_CASE("parse_word errors carry positions") {
    CHECK_THROWS_AS(parse_word("aB"), ParseError);
    CHECK_THROWS_AS(parse_word("a^"), ParseError);
    CHECK_THROWS_AS(parse_word("a^0"), ParseError);
    CHECK_THROWS_AS(parse_word("3a"), ParseError);
    try {
        parse_word("ab^");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("to_string uses exponent form and round-trips") {
    CHECK(to_string(parse_word("aaabba")) == "a^3b^2a");
    CHECK(to_string(Word{}) == "");
    std::mt19937 rng(20240817);
    std::vector<Letter> sigma{Letter('a'), Letter('b'), Letter('t')};
    for (int trial = 0; trial < 200; ++trial) {
        Word w;
        std::size_t len = rng() % 12;
        for (std::size_t i = 0; i < len; ++i) w += sigma[rng() % sigma.size()];
        CHECK(parse_word(to_string(w)) == w);
    }
}

TEST_CASE("word_stats splits simple and multiple letters") {
    WordStats st = word_stats(parse_word("atab^2"));
    CHECK(st.content == LetterSet{Letter('a'), Letter('b'), Letter('t')});
    CHECK(st.simple == LetterSet{Letter('t')});
    CHECK(st.multiple == LetterSet{Letter('a'), Letter('b')});
    CHECK(word_stats(Word{}).content.empty());
}

TEST_CASE("block_decompose matches the defining factorization") {
    Word w = parse_word("a^2t1bat2b");
    BlockDecomposition d = block_decompose(w);
    CHECK(d.skeleton == std::vector<Letter>{Letter("t1"), Letter("t2")});
    REQUIRE(d.blocks.size() == 3);
    CHECK(d.blocks[0] == parse_word("a^2"));
    CHECK(d.blocks[1] == parse_word("ba"));
    CHECK(d.blocks[2] == parse_word("b"));
    CHECK(d.reassemble() == w);
}

TEST_CASE("block_decompose reassembly is the identity (property)") {
    std::mt19937 rng(99);
    std::vector<Letter> sigma{Letter('a'), Letter('b'), Letter('c'), Letter('t')};
    for (int trial = 0; trial < 300; ++trial) {
        Word w;
        std::size_t len = rng() % 14;
        for (std::size_t i = 0; i < len; ++i) w += sigma[rng() % sigma.size()];
        BlockDecomposition d = block_decompose(w);
        CHECK(d.blocks.size() == d.skeleton.size() + 1);
        CHECK(d.reassemble() == w);
        for (const Letter& t : d.skeleton) CHECK(word_stats(w).simple.count(t) == 1);
    }
}

TEST_CASE("classify_word: block-simple and xy-limited") {
    CHECK(classify_word(parse_word("a^2tb^2")).block_simple);
    CHECK(classify_word(parse_word("a^2tb^2")).xy_limited);
    CHECK_FALSE(classify_word(parse_word("abab")).block_simple);
    CHECK(classify_word(parse_word("abab")).xy_limited);  // single block
    // a and b share two blocks: not xy-limited
    WordClass c = classify_word(parse_word("abtab"));
    CHECK_FALSE(c.block_simple);
    CHECK_FALSE(c.xy_limited);
    CHECK(classify_word(Word{}).block_simple);
    CHECK(classify_word(parse_word("t")).xy_limited);
}

TEST_CASE("ini2 keeps the first two occurrences of each letter") {
    CHECK(ini2(parse_word("a^4b^3a")) == parse_word("a^2b^2"));
    CHECK(ini2(parse_word("abcabc")) == parse_word("abcabc"));
    CHECK(ini2(parse_word("aabab")) == parse_word("aabb"));
    CHECK(ini2(Word{}) == Word{});
}

TEST_CASE("reverse and is_factor") {
    CHECK(reverse(parse_word("abc")) == parse_word("cba"));
    CHECK(is_factor(parse_word("ba"), parse_word("abab")));
    CHECK_FALSE(is_factor(parse_word("aa"), parse_word("abab")));
    CHECK(is_factor(Word{}, Word{}));
}

TEST_CASE("apply_substitution") {
    std::map<Letter, Word> theta{{Letter('x'), parse_word("ab")}, {Letter('y'), parse_word("c")}};
    CHECK(apply_substitution(parse_word("xyx"), theta) == parse_word("abcab"));
    CHECK_THROWS_AS(apply_substitution(parse_word("xz"), theta), std::invalid_argument);
    theta[Letter('y')] = Word{};
    CHECK_THROWS_AS(apply_substitution(parse_word("y"), theta), std::invalid_argument);
}

TEST_CASE("shortlex order") {
    CHECK(shortlex_less(parse_word("b"), parse_word("aa")));
    CHECK(shortlex_less(parse_word("ab"), parse_word("ba")));
    CHECK_FALSE(shortlex_less(parse_word("ba"), parse_word("ba")));
}
