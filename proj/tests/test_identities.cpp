#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wb/identities.hpp"
#include "wb/mtau.hpp"

using namespace wb;

namespace {

Identity id(const std::string& text) { return parse_identity(text); }

FiniteMonoid trivial_monoid() {
    FiniteMonoid m;
    m.elements = {"1"};
    m.identity = 0;
    m.table = {0};
    return m;
}

Word random_word(std::mt19937& rng, const std::vector<Letter>& letters, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    Word w;
    for (std::size_t i = len(rng); i > 0; --i) w += letters[pick(rng)];
    return w;
}

}  // namespace

TEST_CASE("identity text format round-trips") {
    Identity i = id("x t x ~ x t x^2");
    CHECK(to_string(i) == "xtx ~ xtx^2");
    CHECK(parse_identity(to_string(i)) == i);
    CHECK_THROWS_AS(parse_identity("xtx"), ParseError);
    CHECK_THROWS_AS(parse_identity("x ~ y ~ z"), ParseError);
}

TEST_CASE("sigma and long families expand to the expected words") {
    CHECK(to_string(sigma_pair(0)) == "a^2b^2 ~ b^2a^2");
    CHECK(to_string(sigma_pair(1)) == "at1a^2b^2 ~ at1b^2a^2");
    CHECK(to_string(sigma_pair(2)) == "bt2at1a^2b^2 ~ bt2at1b^2a^2");
    Identity l1 = long_pair(1);
    CHECK(l1.left == l1.right);
    CHECK(to_string(l1.left) == "xy1^2x");
    CHECK(to_string(long_pair(2)) == "xy1^2y2^2x ~ xy1^2xy2^2x");
    CHECK(to_string(long_pair(3)) == "xy1^2y2^2y3^2x ~ xy1^2xy2^2xy3^2x");
    CHECK_THROWS_AS(long_pair(0), std::invalid_argument);
}

TEST_CASE("the basis identities hold and the sigma chain fails on E1") {
    FiniteMonoid e1 = fixture("E1");
    for (const char* t : {"x t x ~ x t x^2", "x t x ~ x^2 t x", "x y^2 x ~ x^2 y^2"})
        CHECK(satisfies(e1, id(t)).status == Verdict::Status::Holds);
    for (int n : {0, 1, 2}) {
        Verdict v = satisfies(e1, sigma_pair(n));
        REQUIRE(v.status == Verdict::Status::Fails);
        // the reported assignment really is a counterexample
        Identity s = sigma_pair(n);
        CHECK(eval_word(e1, v.assignment, s.left) != eval_word(e1, v.assignment, s.right));
    }
    for (int n : {1, 2, 3}) CHECK(satisfies(e1, long_pair(n)).status == Verdict::Status::Holds);
}

TEST_CASE("beta relates the long pairs but never the sigma pairs") {
    for (int n = 1; n <= 5; ++n) {
        Identity l = long_pair(n);
        CHECK(equivalent(kBeta, l.left, l.right));
    }
    for (int n = 0; n <= 5; ++n) {
        Identity s = sigma_pair(n);
        CHECK_FALSE(equivalent(kBeta, s.left, s.right));
    }
}

TEST_CASE("product satisfaction is componentwise and matches the flat table") {
    FiniteMonoid e1 = fixture("E1");
    FiniteMonoid l21 = fixture("L21");
    FiniteMonoid prod = direct_product(e1, l21);
    FiniteMonoid flat = prod;
    flat.factors.clear();
    for (const char* t : {"x ~ x^2", "x t x ~ x t x^2", "a^2 b^2 ~ b^2 a^2", "x y ~ y x"}) {
        Verdict pv = satisfies(prod, id(t));
        CHECK(pv.status == satisfies(flat, id(t)).status);
        bool both = satisfies(e1, id(t)).status == Verdict::Status::Holds &&
                    satisfies(l21, id(t)).status == Verdict::Status::Holds;
        CHECK((pv.status == Verdict::Status::Holds) == both);
        if (pv.status == Verdict::Status::Fails && !pv.assignment.empty())
            CHECK(eval_word(prod, pv.assignment, id(t).left) != eval_word(prod, pv.assignment, id(t).right));
    }
}

TEST_CASE("dual law: opposite monoid satisfies the reversed identity") {
    FiniteMonoid e1 = fixture("E1");
    FiniteMonoid op = opposite(e1);
    std::mt19937 rng(7);
    std::vector<Letter> letters{Letter('a'), Letter('b'), Letter('t')};
    for (int i = 0; i < 40; ++i) {
        Identity i1{random_word(rng, letters, 5), random_word(rng, letters, 5)};
        Identity rev{reverse(i1.left), reverse(i1.right)};
        CHECK(satisfies(op, i1).status == satisfies(e1, rev).status);
    }
}

TEST_CASE("hom preservation: identities transfer along surjections") {
    FiniteMonoid src = m_tau(WSpec::full_star(kAlpha, {Letter('a'), Letter('b')}));
    FiniteMonoid dst = syntactic_monoid(compile("a+ b {a,b}*"));
    REQUIRE(morphism_search(src, dst, MorphismKind::Onto).has_value());
    std::mt19937 rng(11);
    std::vector<Letter> letters{Letter('x'), Letter('y')};
    for (int i = 0; i < 40; ++i) {
        Identity i1{random_word(rng, letters, 4), random_word(rng, letters, 4)};
        if (satisfies(src, i1).status == Verdict::Status::Holds)
            CHECK(satisfies(dst, i1).status == Verdict::Status::Holds);
    }
}

TEST_CASE("tau-term checks at desk scale") {
    FiniteMonoid e1 = fixture("E1");
    Verdict v = tau_term_check(e1, parse_word("atb^2a"), kBeta, 7);
    CHECK(v.status == Verdict::Status::HoldsUpToBound);
    CHECK(v.bound == 7);

    FiniteMonoid l21 = fixture("L21");
    Verdict bad = tau_term_check(l21, parse_word("a"), kBeta, 3);
    REQUIRE(bad.status == Verdict::Status::Fails);
    REQUIRE(bad.counterexample.has_value());
    CHECK(satisfies(l21, *bad.counterexample).status == Verdict::Status::Holds);
    CHECK_FALSE(equivalent(kBeta, bad.counterexample->left, bad.counterexample->right));
}

TEST_CASE("stability checks at desk scale") {
    FiniteMonoid a1_like = syntactic_monoid(compile("a+ b b+ t a+"));
    CHECK(stability_check(a1_like, CongruenceId::meet({kT1, kGamma}), parse_word("ab^2ta"), 7).status ==
          Verdict::Status::HoldsUpToBound);

    FiniteMonoid g2 = syntactic_of_class(kBeta, parse_word("atab^2"));
    CHECK(satisfies(g2, sigma_pair(2)).status == Verdict::Status::Holds);
    CHECK(satisfies(g2, sigma_pair(1)).status == Verdict::Status::Fails);
    CHECK(stability_check(g2, kBeta, parse_word("atb^2a"), 7).status == Verdict::Status::HoldsUpToBound);

    CHECK(stability_check(fixture("L21"), kBeta, parse_word("a^2b^2"), 5).status == Verdict::Status::Fails);
}

TEST_CASE("equational separation finds and refuses witnesses as expected") {
    FiniteMonoid a01 = fixture("A01");
    FiniteMonoid mt = m_tau(WSpec::single_class(kT1, parse_word("ab")));
    CHECK_FALSE(equational_separation(a01, mt, 3, 6).has_value());
    CHECK_FALSE(equational_separation(a01, a01, 3, 5).has_value());

    FiniteMonoid e1 = fixture("E1");
    FiniteMonoid l21 = fixture("L21");
    auto sep = equational_separation(l21, e1, 2, 4);
    REQUIRE(sep.has_value());
    const FiniteMonoid& sat = sep->m_satisfies ? l21 : e1;
    const FiniteMonoid& fail = sep->m_satisfies ? e1 : l21;
    CHECK(satisfies(sat, sep->id).status == Verdict::Status::Holds);
    CHECK(satisfies(fail, sep->id).status == Verdict::Status::Fails);
}

TEST_CASE("nfb premise report") {
    FiniteMonoid triv = trivial_monoid();
    NfbReport r = nfb_premises(triv, 2, 4);
    REQUIRE(r.entries.size() == 4);
    CHECK(r.entries[0].verdict.status == Verdict::Status::Holds);
    CHECK(r.entries[1].verdict.status == Verdict::Status::Holds);
    CHECK(r.entries[2].verdict.status == Verdict::Status::Fails);
    CHECK(r.entries[3].verdict.status == Verdict::Status::Fails);
    CHECK_FALSE(r.all_passed());
    CHECK(r.summary().find("premises FAILED") != std::string::npos);

    FiniteMonoid m = direct_product(syntactic_monoid(compile("a+ b b+ t a+")),
                                    syntactic_of_class(kBeta, parse_word("atab^2")));
    NfbReport ok = nfb_premises(m, 2, 5);
    CHECK(ok.all_passed());
    CHECK(ok.summary().find("premises verified at bound") != std::string::npos);
    NfbReport dual = nfb_premises(opposite(m), 2, 5, /*dual=*/true);
    CHECK(dual.all_passed());
}

TEST_CASE("verdict JSON carries status, witness, and bound") {
    FiniteMonoid e1 = fixture("E1");
    Verdict f = satisfies(e1, sigma_pair(0));
    std::string j = verdict_to_json(f, &e1);
    CHECK(j.find("\"status\": \"fails\"") != std::string::npos);
    CHECK(j.find("\"witness\"") != std::string::npos);
    Verdict b = tau_term_check(e1, parse_word("ab"), kBeta, 3);
    CHECK(verdict_to_json(b).find("holds-up-to-bound") != std::string::npos);
}
