// Command-line front end for the workbench library.
//
// Exit codes: 0 success / check holds, 1 check fails (with witness printed),
// 2 usage or input error.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wb/identities.hpp"
#include "wb/mtau.hpp"
#include "wb/repro.hpp"
#include "wb/synt.hpp"

using namespace wb;

namespace {

int g_exit = 0;

std::vector<Letter> parse_alphabet(const std::string& text) {
    std::vector<Letter> out = parse_word(text).letters;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw std::invalid_argument("empty alphabet");
    return out;
}

std::pair<std::string, std::string> split_first(const std::string& s, char sep) {
    std::size_t pos = s.find(sep);
    if (pos == std::string::npos)
        throw std::invalid_argument("expected '" + std::string(1, sep) + "' in '" + s + "'");
    return {s.substr(0, pos), s.substr(pos + 1)};
}

// Monoid spec strings: fixture:NAME, file:PATH, synt-regex:R, synt-word:W,
// synt-class:CONG:REP, mtau-class:CONG:REP, mtau-star:CONG:ALPHABET, op:SPEC.
FiniteMonoid monoid_from_spec(const std::string& spec) {
    auto [kind, rest] = split_first(spec, ':');
    if (kind == "fixture") return fixture(rest);
    if (kind == "file") {
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("cannot open " + rest);
        std::ostringstream buf;
        buf << in.rdbuf();
        return monoid_from_json(buf.str());
    }
    if (kind == "synt-regex") return syntactic_monoid(compile(rest));
    if (kind == "synt-word") return syntactic_of_word(parse_word(rest));
    if (kind == "synt-class") {
        auto [cong, rep] = split_first(rest, ':');
        return syntactic_of_class(CongruenceId::parse(cong), parse_word(rep));
    }
    if (kind == "mtau-class") {
        auto [cong, rep] = split_first(rest, ':');
        return m_tau(WSpec::single_class(CongruenceId::parse(cong), parse_word(rep)));
    }
    if (kind == "mtau-star") {
        auto [cong, alph] = split_first(rest, ':');
        return m_tau(WSpec::full_star(CongruenceId::parse(cong), parse_alphabet(alph)));
    }
    if (kind == "op") return opposite(monoid_from_spec(rest));
    throw std::invalid_argument("unknown monoid spec kind '" + kind + "'");
}

FiniteMonoid monoid_from_specs(const std::vector<std::string>& specs) {
    if (specs.empty()) throw std::invalid_argument("at least one --monoid is required");
    FiniteMonoid m = monoid_from_spec(specs[0]);
    for (std::size_t i = 1; i < specs.size(); ++i) m = direct_product(m, monoid_from_spec(specs[i]));
    return m;
}

std::string letters_to_string(const LetterSet& s) {
    std::string out;
    for (const Letter& x : s) {
        if (!out.empty()) out += " ";
        out += x.name;
    }
    return out.empty() ? "(none)" : out;
}

void print_verdict(const Verdict& v, const FiniteMonoid* m) {
    switch (v.status) {
        case Verdict::Status::Holds:
            std::cout << "holds\n";
            break;
        case Verdict::Status::HoldsUpToBound:
            std::cout << "holds up to length " << v.bound << "\n";
            break;
        case Verdict::Status::Fails:
            std::cout << "fails\n";
            g_exit = 1;
            break;
    }
    std::cout << verdict_to_json(v, m);
}

void print_monoid(const FiniteMonoid& m) {
    std::cout << m.size() << " elements\n" << monoid_to_json(m);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational workbench for word congruences, syntactic monoids, and identities"};
    app.require_subcommand(1);

    // shared option storage
    std::string word_text, cong_name = "t1", rep_text, alphabet_text, regex_text, regex_text2;
    std::string identity_text, fixture_name, gens_text, predicate_spec, class_spec;
    std::vector<std::string> monoid_specs, relation_texts;
    std::size_t max_len = 6, cap = 6;
    int n_param = 1, max_letters = 3;
    bool quick = false, dual = false, adjoin = false, no_ambient = false;

    auto need_monoid = [&] { return monoid_from_specs(monoid_specs); };
    auto need_cong = [&] { return CongruenceId::parse(cong_name); };

    // word
    auto* word = app.add_subcommand("word", "word statistics and normal forms");
    word->require_subcommand(1);
    for (const char* name : {"stats", "blocks", "classify", "ini2"}) {
        auto* sub = word->add_subcommand(name);
        sub->add_option("word", word_text, "word in the letter grammar")->required();
    }
    word->get_subcommand("stats")->callback([&] {
        WordStats s = word_stats(parse_word(word_text));
        std::cout << "length " << parse_word(word_text).size() << "\n"
                  << "content  " << letters_to_string(s.content) << "\n"
                  << "simple   " << letters_to_string(s.simple) << "\n"
                  << "multiple " << letters_to_string(s.multiple) << "\n";
    });
    word->get_subcommand("blocks")->callback([&] {
        BlockDecomposition d = block_decompose(parse_word(word_text));
        std::cout << "skeleton";
        for (const Letter& t : d.skeleton) std::cout << " " << t.name;
        std::cout << "\n";
        for (std::size_t i = 0; i < d.blocks.size(); ++i)
            std::cout << "block " << i << ": " << (d.blocks[i].empty() ? "(empty)" : to_string(d.blocks[i]))
                      << "\n";
    });
    word->get_subcommand("classify")->callback([&] {
        WordClass cl = classify_word(parse_word(word_text));
        std::cout << "block-simple: " << (cl.block_simple ? "yes" : "no") << "\n"
                  << "xy-limited:   " << (cl.xy_limited ? "yes" : "no") << "\n";
    });
    word->get_subcommand("ini2")->callback(
        [&] { std::cout << to_string(ini2(parse_word(word_text))) << "\n"; });

    // cong
    auto* cong = app.add_subcommand("cong", "word congruences");
    cong->require_subcommand(1);
    std::string u_text, v_text;
    auto* cong_eq = cong->add_subcommand("eq", "are two words congruent");
    cong_eq->add_option("--cong", cong_name)->required();
    cong_eq->add_option("u", u_text)->required();
    cong_eq->add_option("v", v_text)->required();
    cong_eq->callback([&] {
        bool eq = equivalent(need_cong(), parse_word(u_text), parse_word(v_text));
        std::cout << (eq ? "equivalent" : "different") << "\n";
        if (!eq) g_exit = 1;
    });
    auto* cong_canon = cong->add_subcommand("canon", "canonical form key");
    cong_canon->add_option("--cong", cong_name)->required();
    cong_canon->add_option("word", word_text)->required();
    cong_canon->callback([&] { std::cout << canonical(need_cong(), parse_word(word_text)).key << "\n"; });
    auto* cong_enum = cong->add_subcommand("enumerate", "class members up to a length");
    cong_enum->add_option("--cong", cong_name)->required();
    cong_enum->add_option("--rep", rep_text)->required();
    cong_enum->add_option("--max-len", max_len)->required();
    cong_enum->callback([&] {
        for (const Word& w : enumerate_class(need_cong(), parse_word(rep_text), max_len))
            std::cout << to_string(w) << "\n";
    });
    auto* cong_dfa = cong->add_subcommand("dfa", "minimal DFA of the class");
    cong_dfa->add_option("--cong", cong_name)->required();
    cong_dfa->add_option("--rep", rep_text)->required();
    cong_dfa->callback([&] { std::cout << dfa_to_json(class_dfa(need_cong(), parse_word(rep_text))); });

    // regex
    auto* regex = app.add_subcommand("regex", "restricted regular expressions");
    regex->require_subcommand(1);
    auto* regex_compile = regex->add_subcommand("compile", "compile to a minimal DFA");
    regex_compile->add_option("regex", regex_text)->required();
    regex_compile->callback([&] { std::cout << dfa_to_json(compile(regex_text)); });
    auto* regex_eq = regex->add_subcommand("eq", "language equality");
    regex_eq->add_option("r1", regex_text)->required();
    regex_eq->add_option("r2", regex_text2)->required();
    regex_eq->callback([&] {
        LetterSet all = parse_regex(regex_text)->alphabet();
        LetterSet other = parse_regex(regex_text2)->alphabet();
        all.insert(other.begin(), other.end());
        bool eq = dfa_equivalent(compile(regex_text, all), compile(regex_text2, all));
        std::cout << (eq ? "equal languages" : "different languages") << "\n";
        if (!eq) g_exit = 1;
    });

    // monoid
    auto* monoid = app.add_subcommand("monoid", "finite monoid construction");
    monoid->require_subcommand(1);
    auto* mon_fixture = monoid->add_subcommand("fixture", "named table");
    mon_fixture->add_option("name", fixture_name, "A, E, A0, B0, Q, L2 or with trailing 1")->required();
    mon_fixture->callback([&] { print_monoid(fixture(fixture_name)); });
    auto* mon_present = monoid->add_subcommand("present", "semigroup from a presentation");
    mon_present->add_option("--gens", gens_text, "generator letters, e.g. ab")->required();
    mon_present->add_option("--rel", relation_texts, "relation chain, e.g. a^2=a; repeatable")->required();
    mon_present->add_option("--cap", cap, "closure length cap");
    mon_present->add_flag("--adjoin-identity", adjoin);
    mon_present->callback([&] {
        std::vector<Relation> rels;
        for (const std::string& t : relation_texts) {
            std::vector<Relation> part = parse_relations(t);
            rels.insert(rels.end(), part.begin(), part.end());
        }
        FiniteMonoid m = from_presentation(parse_alphabet(gens_text), rels, cap);
        print_monoid(adjoin ? adjoin_identity(m) : m);
    });
    auto* mon_product = monoid->add_subcommand("product", "direct product of monoid specs");
    mon_product->add_option("--monoid", monoid_specs)->required()->expected(2, -1);
    mon_product->callback([&] { print_monoid(need_monoid()); });
    auto* mon_dual = monoid->add_subcommand("dual", "opposite monoid");
    mon_dual->add_option("--monoid", monoid_specs)->required();
    mon_dual->callback([&] { print_monoid(opposite(need_monoid())); });
    auto* mon_validate = monoid->add_subcommand("validate", "table invariants");
    mon_validate->add_option("--monoid", monoid_specs)->required();
    mon_validate->callback([&] {
        std::vector<std::string> problems = validate(need_monoid());
        if (problems.empty()) {
            std::cout << "valid\n";
        } else {
            for (const std::string& p : problems) std::cout << p << "\n";
            g_exit = 1;
        }
    });

    // synt
    auto* synt = app.add_subcommand("synt", "syntactic monoids");
    synt->require_subcommand(1);
    auto* synt_regex = synt->add_subcommand("regex", "of a regular language");
    synt_regex->add_option("regex", regex_text)->required();
    synt_regex->add_flag("--no-ambient-zero", no_ambient,
                         "read the language over exactly its own alphabet");
    synt_regex->callback([&] { print_monoid(syntactic_monoid(compile(regex_text), !no_ambient)); });
    auto* synt_class = synt->add_subcommand("class", "of a congruence class");
    synt_class->add_option("--cong", cong_name)->required();
    synt_class->add_option("--rep", rep_text)->required();
    synt_class->callback([&] { print_monoid(syntactic_of_class(need_cong(), parse_word(rep_text))); });
    auto* synt_word = synt->add_subcommand("word", "of a singleton language");
    synt_word->add_option("word", word_text)->required();
    synt_word->callback([&] { print_monoid(syntactic_of_word(parse_word(word_text))); });

    // mtau
    auto* mtau = app.add_subcommand("mtau", "Rees quotients by factor ideals");
    mtau->require_subcommand(1);
    auto* mtau_class = mtau->add_subcommand("class", "single-class spec");
    mtau_class->add_option("--class", class_spec, "CONG:REP, e.g. beta:atab^2")->required();
    mtau_class->callback([&] {
        auto [cg, rep] = split_first(class_spec, ':');
        print_monoid(m_tau(WSpec::single_class(CongruenceId::parse(cg), parse_word(rep))));
    });
    auto* mtau_star = mtau->add_subcommand("star", "all words over an alphabet");
    mtau_star->add_option("--cong", cong_name);
    mtau_star->add_option("--alphabet", alphabet_text);
    mtau_star->add_option("--pred", predicate_spec, "CONG:PREDICATE:ALPHABET, e.g. beta:xy-limited:abt");
    mtau_star->callback([&] {
        if (!predicate_spec.empty()) {
            auto [cg, rest] = split_first(predicate_spec, ':');
            auto [pred, alph] = split_first(rest, ':');
            print_monoid(m_tau(WSpec::predicate_union(CongruenceId::parse(cg), parse_alphabet(alph), pred)));
        } else if (!alphabet_text.empty()) {
            print_monoid(m_tau(WSpec::full_star(need_cong(), parse_alphabet(alphabet_text))));
        } else {
            throw CLI::ValidationError("mtau star needs --alphabet (with --cong) or --pred");
        }
    });
    auto* mtau_free = mtau->add_subcommand("free", "all classes over an alphabet, no zero");
    mtau_free->add_option("--cong", cong_name)->required();
    mtau_free->add_option("--alphabet", alphabet_text)->required();
    mtau_free->callback([&] { print_monoid(relatively_free(need_cong(), parse_alphabet(alphabet_text))); });
    auto* mtau_onto = mtau->add_subcommand("onto-check", "surjection onto the syntactic monoid");
    mtau_onto->add_option("--class", class_spec, "CONG:REP")->required();
    mtau_onto->callback([&] {
        auto [cg, rep] = split_first(class_spec, ':');
        OntoReport r = onto_synt_check(CongruenceId::parse(cg), parse_word(rep));
        std::cout << "sizes " << r.mtau_size << " -> " << r.synt_size << "\n";
        if (!r.onto) {
            std::cout << "no surjection found\n";
            g_exit = 1;
        } else {
            std::cout << (r.iso ? "isomorphism found\n" : "surjection found\n");
        }
    });

    // check
    auto* check = app.add_subcommand("check", "identity checks");
    check->require_subcommand(1);
    auto* check_id = check->add_subcommand("id", "single identity");
    check_id->add_option("--monoid", monoid_specs)->required();
    check_id->add_option("identity", identity_text, "u ~ v")->required();
    check_id->callback([&] {
        FiniteMonoid m = need_monoid();
        print_verdict(satisfies(m, parse_identity(identity_text)), &m);
    });
    auto* check_basis = check->add_subcommand("basis", "the three-identity basis");
    check_basis->add_option("--monoid", monoid_specs)->required();
    check_basis->callback([&] {
        FiniteMonoid m = need_monoid();
        for (const char* t : {"x t x ~ x t x^2", "x t x ~ x^2 t x", "x y^2 x ~ x^2 y^2"}) {
            Verdict v = satisfies(m, parse_identity(t));
            std::cout << t << ": " << (v.status == Verdict::Status::Holds ? "holds" : "fails") << "\n";
            if (v.status != Verdict::Status::Holds) g_exit = 1;
        }
    });
    auto* check_sigma = check->add_subcommand("sigma", "the sigma_n identity");
    check_sigma->add_option("--monoid", monoid_specs)->required();
    check_sigma->add_option("--n", n_param)->required();
    check_sigma->callback([&] {
        FiniteMonoid m = need_monoid();
        std::cout << to_string(sigma_pair(n_param)) << "\n";
        print_verdict(satisfies(m, sigma_pair(n_param)), &m);
    });
    auto* check_long = check->add_subcommand("long", "the n-th long identity");
    check_long->add_option("--monoid", monoid_specs)->required();
    check_long->add_option("--n", n_param)->required();
    check_long->callback([&] {
        FiniteMonoid m = need_monoid();
        std::cout << to_string(long_pair(n_param)) << "\n";
        print_verdict(satisfies(m, long_pair(n_param)), &m);
    });
    auto* check_tau = check->add_subcommand("tau-term", "bounded tau-term check");
    check_tau->add_option("--monoid", monoid_specs)->required();
    check_tau->add_option("--word", word_text)->required();
    check_tau->add_option("--cong", cong_name)->required();
    check_tau->add_option("--max-len", max_len)->required();
    check_tau->callback([&] {
        FiniteMonoid m = need_monoid();
        print_verdict(tau_term_check(m, parse_word(word_text), need_cong(), max_len), &m);
    });
    auto* check_stable = check->add_subcommand("stable", "bounded class stability check");
    check_stable->add_option("--monoid", monoid_specs)->required();
    check_stable->add_option("--cong", cong_name)->required();
    check_stable->add_option("--rep", rep_text)->required();
    check_stable->add_option("--max-len", max_len)->required();
    check_stable->callback([&] {
        FiniteMonoid m = need_monoid();
        print_verdict(stability_check(m, need_cong(), parse_word(rep_text), max_len), &m);
    });
    auto* check_sep = check->add_subcommand("separate", "search for a separating identity");
    check_sep->add_option("--monoid", monoid_specs)->required()->expected(2);
    check_sep->add_option("--max-letters", max_letters)->required();
    check_sep->add_option("--max-len", max_len)->required();
    check_sep->callback([&] {
        FiniteMonoid a = monoid_from_spec(monoid_specs[0]);
        FiniteMonoid b = monoid_from_spec(monoid_specs[1]);
        auto sep = equational_separation(a, b, max_letters, max_len);
        if (!sep) {
            std::cout << "no separating identity at (" << max_letters << " letters, length <= " << max_len
                      << ")\n";
            g_exit = 1;
        } else {
            std::cout << to_string(sep->id) << "  (holds in the "
                      << (sep->m_satisfies ? "first" : "second") << " monoid, fails in the other)\n";
        }
    });
    auto* check_nfb = check->add_subcommand("nfb", "sufficient-condition premises");
    check_nfb->add_option("--monoid", monoid_specs)->required();
    check_nfb->add_option("--n-max", n_param)->required();
    check_nfb->add_option("--len-max", max_len)->required();
    check_nfb->add_flag("--dual", dual, "check the reversed-word premises");
    check_nfb->callback([&] {
        NfbReport r = nfb_premises(need_monoid(), n_param, max_len, dual);
        std::cout << r.summary();
        if (!r.all_passed()) g_exit = 1;
    });

    // repro
    auto* repro = app.add_subcommand("repro", "batch reproduction runs");
    auto* repro_paper = repro->add_subcommand("paper", "run all acceptance rows");
    repro_paper->add_flag("--quick", quick, "smaller bounds for the slow rows");
    repro_paper->callback([&] {
        std::vector<CriterionResult> rows = run_criteria(quick);
        std::cout << render_criteria(rows);
        if (!all_passed(rows)) g_exit = 1;
    });
    repro->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
