#include "wb/repro.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "wb/identities.hpp"
#include "wb/mtau.hpp"
#include "wb/synt.hpp"

namespace wb {

namespace {

struct Check {
    std::ostringstream detail;
    bool ok = true;

    // Records the first failure; later expectations still run.
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail.str("");
            detail << "FAILED: " << what;
        }
    }

    void note(const std::string& s) {
        if (!ok) return;
        if (detail.tellp() > 0) detail << "; ";
        detail << s;
    }
};

std::vector<Letter> letters(const char* s) {
    std::vector<Letter> out;
    for (const char* p = s; *p; ++p) out.emplace_back(*p);
    return out;
}

Word random_word(std::mt19937& rng, const std::vector<Letter>& sigma, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, sigma.size() - 1);
    Word w;
    for (std::size_t i = len(rng); i > 0; --i) w += sigma[pick(rng)];
    return w;
}

void criterion_fixtures(Check& c) {
    const std::vector<std::pair<std::string, int>> expected = {
        {"A1", 7}, {"E1", 6}, {"A01", 5}, {"B01", 5}, {"Q1", 6}, {"L21", 3}};
    std::ostringstream sizes;
    for (const auto& [name, size] : expected) {
        FiniteMonoid m = fixture(name);
        c.expect(m.size() == size, name + " has " + std::to_string(m.size()) + " elements, expected " +
                                       std::to_string(size));
        c.expect(validate(m).empty(), name + " fails validate");
        if (sizes.tellp() > 0) sizes << " ";
        sizes << name << "=" << m.size();
    }
    c.note(sizes.str());
}

void criterion_five_and_six_elements(Check& c) {
    FiniteMonoid ms = syntactic_monoid(compile("a+ b {a,b}*"));
    FiniteMonoid mt = m_tau(WSpec::full_star(kAlpha, letters("ab")));
    c.expect(ms.size() == 5, "syntactic monoid has " + std::to_string(ms.size()) + " elements, expected 5");
    c.expect(mt.size() == 6, "alpha-star quotient has " + std::to_string(mt.size()) + " elements, expected 6");
    auto onto = morphism_search(mt, ms, MorphismKind::Onto);
    c.expect(onto.has_value(), "no surjection from the 6-element quotient onto the syntactic monoid");
    if (onto) c.expect(is_homomorphism(mt, ms, *onto), "found map is not a homomorphism");
    c.note("sizes 6 -> 5 with onto hom");
}

void criterion_odd_length_group(Check& c) {
    // Odd-length words over {a,b}; the ambient alphabet is exactly {a,b}.
    FiniteMonoid g = syntactic_monoid(compile("{a,b} ({a,b} {a,b})*"), /*ambient_zero=*/false);
    c.expect(g.size() == 2, "expected 2 elements, got " + std::to_string(g.size()));
    if (g.size() == 2) {
        int x = g.identity == 0 ? 1 : 0;
        c.expect(g.mul(x, x) == g.identity, "non-identity element does not square to the identity");
    }
    c.note("2-element group");
}

void criterion_e1_identities(Check& c) {
    FiniteMonoid e1 = fixture("E1");
    for (const char* t : {"x t x ~ x t x^2", "x t x ~ x^2 t x", "x y^2 x ~ x^2 y^2"})
        c.expect(satisfies(e1, parse_identity(t)).status == Verdict::Status::Holds,
                 std::string("basis identity does not hold: ") + t);
    for (int n : {0, 1, 2})
        c.expect(satisfies(e1, sigma_pair(n)).status == Verdict::Status::Fails,
                 "sigma_" + std::to_string(n) + " unexpectedly holds");
    for (int n : {1, 2, 3})
        c.expect(satisfies(e1, long_pair(n)).status == Verdict::Status::Holds,
                 "long identity n=" + std::to_string(n) + " does not hold");
    c.note("basis holds, sigma_0..2 fail, long 1..3 hold");
}

void criterion_beta_pairs(Check& c) {
    for (int n = 1; n <= 5; ++n) {
        Identity l = long_pair(n);
        c.expect(equivalent(kBeta, l.left, l.right), "long pair n=" + std::to_string(n) + " not beta-related");
    }
    for (int n = 0; n <= 5; ++n) {
        Identity s = sigma_pair(n);
        c.expect(!equivalent(kBeta, s.left, s.right), "sigma pair n=" + std::to_string(n) + " beta-related");
    }
    c.note("long pairs related, sigma pairs separated, n <= 5");
}

void criterion_class_dfa(Check& c) {
    c.expect(dfa_equivalent(class_dfa(kBeta, parse_word("atb^2a")),
                            compile("a+ t b b+ a {a,b}* | a+ t b+ a+ b {a,b}*")),
             "beta class of atb^2a does not match its regex");
    c.expect(dfa_equivalent(class_dfa(CongruenceId::meet({kT1, kGamma}), parse_word("ab^2ta")),
                            compile("a+ b b+ t a+")),
             "(t1^gamma) class of ab^2ta does not match its regex");
    c.expect(dfa_equivalent(class_dfa(CongruenceId::meet({kT1, kGamma}), parse_word("ata")),
                            compile("a+ t a+")),
             "(t1^gamma) class of ata does not match its regex");
    c.note("3 class automata match their regexes");
}

void criterion_g2(Check& c, bool quick) {
    FiniteMonoid g2 = syntactic_of_class(kBeta, parse_word("atab^2"));
    c.expect(satisfies(g2, sigma_pair(2)).status == Verdict::Status::Holds, "sigma_2 does not hold");
    c.expect(satisfies(g2, sigma_pair(1)).status == Verdict::Status::Fails, "sigma_1 unexpectedly holds");
    std::size_t bound = quick ? 5 : 7;
    Verdict st = stability_check(g2, kBeta, parse_word("atb^2a"), bound);
    c.expect(st.status == Verdict::Status::HoldsUpToBound,
             "beta class of atb^2a not stable" +
                 (st.counterexample ? " (" + to_string(*st.counterexample) + ")" : ""));
    c.note("sigma_2 holds, sigma_1 fails, stability up to length " + std::to_string(bound));
}

void criterion_onto(Check& c) {
    OntoReport ab = onto_synt_check(kT1, parse_word("ab"));
    c.expect(ab.mtau_size == 5 && ab.synt_size == 5, "t1 class of ab: sizes " +
                                                         std::to_string(ab.mtau_size) + " -> " +
                                                         std::to_string(ab.synt_size) + ", expected 5 -> 5");
    c.expect(ab.onto.has_value() && ab.iso, "t1 class of ab: no isomorphism");
    FiniteMonoid ms_ab = syntactic_of_class(kT1, parse_word("ab"));
    c.expect(morphism_search(ms_ab, fixture("A01"), MorphismKind::Iso).has_value(),
             "syntactic monoid of the t1 class of ab is not isomorphic to A01");

    OntoReport ata = onto_synt_check(CongruenceId::meet({kT1, kGamma}), parse_word("ata"));
    c.expect(ata.mtau_size == 10 && ata.synt_size == 7,
             "(t1^gamma) class of ata: sizes " + std::to_string(ata.mtau_size) + " -> " +
                 std::to_string(ata.synt_size) + ", expected 10 -> 7");
    c.expect(ata.onto.has_value(), "(t1^gamma) class of ata: no surjection");
    // The 7-element syntactic monoid generates the same bounded equational
    // theory as B01 (which has 5 elements).
    FiniteMonoid ms_ata = syntactic_of_class(CongruenceId::meet({kT1, kGamma}), parse_word("ata"));
    c.expect(!equational_separation(ms_ata, fixture("B01"), 3, 6).has_value(),
             "syntactic monoid of a+ta+ separated from B01 at (3 letters, length 6)");

    FiniteMonoid mt = m_tau(WSpec::full_star(kAlpha, letters("ab")));
    FiniteMonoid ms = syntactic_monoid(compile("a+ b {a,b}*"));
    c.expect(mt.size() == 6 && ms.size() == 5 && morphism_search(mt, ms, MorphismKind::Onto).has_value(),
             "alpha star: no 6 -> 5 surjection");
    c.note("5 -> 5 iso (A01), 10 -> 7 onto (B01-equivalent), 6 -> 5 onto");
}

void criterion_nfb(Check& c, bool quick) {
    FiniteMonoid m = direct_product(syntactic_monoid(compile("a+ b b+ t a+")),
                                    syntactic_of_class(kBeta, parse_word("atab^2")));
    int n_max = quick ? 2 : 3;
    std::size_t len_max = quick ? 5 : 7;
    NfbReport r = nfb_premises(m, n_max, len_max);
    c.expect(r.all_passed(), "primal premises failed:\n" + r.summary());
    NfbReport d = nfb_premises(opposite(m), n_max, len_max, /*dual=*/true);
    c.expect(d.all_passed(), "dual premises failed:\n" + d.summary());
    c.note("premises verified at bound (n <= " + std::to_string(n_max) + ", length <= " +
           std::to_string(len_max) + "), primal and dual");
}

void criterion_table1(Check& c, bool quick) {
    const CongruenceId t1zeta = CongruenceId::meet({kT1, kZeta});
    const CongruenceId t1gamma = CongruenceId::meet({kT1, kGamma});
    std::map<int, FiniteMonoid> rows;
    rows.emplace(1, direct_product(syntactic_of_word(parse_word("abtbsa")),
                                   syntactic_of_word(parse_word("atbsba"))));
    rows.emplace(2, syntactic_of_word(parse_word("atbasb")));
    rows.emplace(3, syntactic_of_class(t1zeta, parse_word("atbasb")));
    rows.emplace(4, syntactic_of_class(t1zeta, parse_word("atb^2a")));
    rows.emplace(5, direct_product(syntactic_of_class(t1gamma, parse_word("atb^2a")),
                                   syntactic_of_class(t1gamma, parse_word("ab^2ta"))));
    rows.emplace(6, direct_product(syntactic_of_class(t1gamma, parse_word("atb^2a")),
                                   syntactic_of_class(kBetaDual, parse_word("ab^2ta"))));
    rows.emplace(7, direct_product(direct_product(syntactic_of_class(kBeta, parse_word("atb^2a")),
                                                  syntactic_of_class(kBetaDual, parse_word("ab^2ta"))),
                                   syntactic_of_class(kT1, parse_word("ab"))));
    rows.emplace(8, syntactic_of_class(kZeta, parse_word("atbsba")));
    rows.emplace(9, syntactic_of_class(kZeta, parse_word("atb^2a")));
    std::ostringstream sizes;
    for (const auto& [row, m] : rows) {
        c.expect(validate(m).empty(), "row " + std::to_string(row) + " fails validate");
        if (sizes.tellp() > 0) sizes << " ";
        sizes << "r" << row << "=" << m.size();
    }
    std::size_t sep_len = quick ? 6 : 8;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{2, 4}, {4, 6}}) {
        auto sep = equational_separation(rows.at(i), rows.at(j), 4, sep_len);
        c.expect(sep.has_value(), "rows " + std::to_string(i) + " and " + std::to_string(j) +
                                      " not separated at (4 letters, length " + std::to_string(sep_len) + ")");
        if (sep)
            c.note("rows " + std::to_string(i) + "/" + std::to_string(j) + ": " + to_string(sep->id) +
                   (sep->m_satisfies ? " (holds in row " + std::to_string(i) + ")"
                                     : " (holds in row " + std::to_string(j) + ")"));
    }
    c.note(sizes.str());
}

void criterion_properties(Check& c, bool quick) {
    // Two-classes law: the simq class of atab^2 is the union of two beta classes.
    const Word w = parse_word("atab^2");
    const Word w2 = parse_word("atbab^2");
    c.expect(equivalent(kSimQ, w, w2), "atab^2 and atbab^2 not simq-related");
    {
        std::size_t max_len = quick ? 6 : 8;
        std::vector<Word> frontier{Word{}};
        bool law = true;
        for (std::size_t len = 0; len <= max_len && law; ++len) {
            std::vector<Word> next;
            for (const Word& u : frontier) {
                if (equivalent(kSimQ, u, w) != (equivalent(kBeta, u, w) || equivalent(kBeta, u, w2)))
                    law = false;
                if (u.size() < max_len)
                    for (const Letter& x : letters("abt")) next.push_back(u + x);
            }
            frontier = std::move(next);
        }
        c.expect(law, "simq class of atab^2 differs from the union of the two beta classes");
    }

    // Beta soundness on E1: beta-equivalent words evaluate equally under every
    // assignment (checked via exact evaluation signatures over 3 letters).
    {
        FiniteMonoid e1 = fixture("E1");
        std::size_t max_len = quick ? 5 : 6;
        std::vector<Letter> sigma = letters("abc");
        std::vector<Word> words{Word{}};
        for (std::size_t i = 0; i < words.size(); ++i)
            if (words[i].size() < max_len)
                for (const Letter& x : sigma) words.push_back(words[i] + x);
        const int n = e1.size();
        std::map<std::vector<int>, std::vector<std::size_t>> by_signature;
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::vector<int> sig;
            for (int va = 0; va < n; ++va)
                for (int vb = 0; vb < n; ++vb)
                    for (int vc = 0; vc < n; ++vc) {
                        int acc = e1.identity;
                        for (const Letter& x : words[i].letters)
                            acc = e1.mul(acc, x.name == "a" ? va : x.name == "b" ? vb : vc);
                        sig.push_back(acc);
                    }
            by_signature[std::move(sig)].push_back(i);
        }
        bool sound = true;
        std::size_t converse_gaps = 0;
        std::size_t group_id = 0;
        std::vector<std::size_t> sig_group(words.size());
        for (const auto& [sig, members] : by_signature) {
            for (std::size_t i : members) sig_group[i] = group_id;
            ++group_id;
        }
        std::map<std::string, std::size_t> key_to_first;
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::string key = canonical(kBeta, words[i]).key;
            auto [it, inserted] = key_to_first.emplace(key, i);
            if (!inserted && sig_group[it->second] != sig_group[i]) sound = false;
        }
        // Converse at this bound: count signature groups mixing beta classes.
        for (const auto& [sig, members] : by_signature) {
            std::string first_key = canonical(kBeta, words[members[0]]).key;
            for (std::size_t i : members)
                if (canonical(kBeta, words[i]).key != first_key) {
                    ++converse_gaps;
                    break;
                }
        }
        c.expect(sound, "beta-equivalent words distinguished by E1");
        c.note("beta sound on E1 at length <= " + std::to_string(max_len) + "; " +
               std::to_string(converse_gaps) + " signature groups mix beta classes (converse gap)");
    }

    // Dual and product laws on random identities.
    {
        FiniteMonoid e1 = fixture("E1");
        FiniteMonoid l21 = fixture("L21");
        FiniteMonoid op = opposite(e1);
        FiniteMonoid prod = direct_product(e1, l21);
        std::mt19937 rng(5);
        std::vector<Letter> sigma = letters("abt");
        for (int i = 0; i < 25; ++i) {
            Identity id{random_word(rng, sigma, 5), random_word(rng, sigma, 5)};
            Identity rev{reverse(id.left), reverse(id.right)};
            c.expect(satisfies(op, id).status == satisfies(e1, rev).status, "dual law violated");
            bool both = satisfies(e1, id).status == Verdict::Status::Holds &&
                        satisfies(l21, id).status == Verdict::Status::Holds;
            c.expect((satisfies(prod, id).status == Verdict::Status::Holds) == both, "product law violated");
        }
    }

    // DFA against direct enumeration, and hom preservation.
    {
        for (const auto& [cong, rep] : std::vector<std::pair<CongruenceId, const char*>>{
                 {kBeta, "atb^2a"}, {CongruenceId::meet({kT1, kGamma}), "ab^2ta"}, {kZeta, "aba"}}) {
            Word r = parse_word(rep);
            std::size_t bound = 2 * r.size() + 2;
            if (quick) bound = r.size() + 2;
            c.expect(language_upto(class_dfa(cong, r), bound) == enumerate_class(cong, r, bound),
                     std::string("class DFA and enumeration disagree for ") + rep);
        }
        FiniteMonoid src = m_tau(WSpec::full_star(kAlpha, letters("ab")));
        FiniteMonoid dst = syntactic_monoid(compile("a+ b {a,b}*"));
        std::mt19937 rng(9);
        std::vector<Letter> sigma = letters("xy");
        for (int i = 0; i < 25; ++i) {
            Identity id{random_word(rng, sigma, 4), random_word(rng, sigma, 4)};
            if (satisfies(src, id).status == Verdict::Status::Holds)
                c.expect(satisfies(dst, id).status == Verdict::Status::Holds, "hom preservation violated");
        }
    }
}

}  // namespace

std::vector<CriterionResult> run_criteria(bool quick) {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> table = {
        {"fixture sizes", [](Check& c) { criterion_fixtures(c); }},
        {"five and six element monoids", [](Check& c) { criterion_five_and_six_elements(c); }},
        {"odd-length language group", [](Check& c) { criterion_odd_length_group(c); }},
        {"E1 identity portfolio", [](Check& c) { criterion_e1_identities(c); }},
        {"beta on identity families", [](Check& c) { criterion_beta_pairs(c); }},
        {"class automata vs regexes", [](Check& c) { criterion_class_dfa(c); }},
        {"G2 sigma chain and stability", [quick](Check& c) { criterion_g2(c, quick); }},
        {"quotient onto syntactic monoid", [](Check& c) { criterion_onto(c); }},
        {"nfb premises, primal and dual", [quick](Check& c) { criterion_nfb(c, quick); }},
        {"table rows build and separate", [quick](Check& c) { criterion_table1(c, quick); }},
        {"property battery", [quick](Check& c) { criterion_properties(c, quick); }},
    };
    std::vector<CriterionResult> rows;
    for (std::size_t i = 0; i < table.size(); ++i) {
        CriterionResult r;
        r.number = static_cast<int>(i) + 1;
        r.name = table[i].first;
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            table[i].second(c);
            r.passed = c.ok;
            r.detail = c.detail.str();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string render_criteria(const std::vector<CriterionResult>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        char line[64];
        std::snprintf(line, sizeof line, "%2d  %-4s  %6.2fs  ", r.number, r.passed ? "pass" : "FAIL",
                      r.seconds);
        out << line << r.name;
        if (!r.detail.empty()) out << " -- " << r.detail;
        out << "\n";
    }
    out << (all_passed(rows) ? "all criteria passed\n" : "SOME CRITERIA FAILED\n");
    return out.str();
}

bool all_passed(const std::vector<CriterionResult>& rows) {
    for (const auto& r : rows)
        if (!r.passed) return false;
    return true;
}

}  // namespace wb
