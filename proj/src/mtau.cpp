#include "wb/mtau.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace wb {

WSpec WSpec::single_class(CongruenceId c, Word rep) {
    WSpec w;
    w.kind = Kind::SingleClass;
    w.cong = std::move(c);
    w.rep = std::move(rep);
    return w;
}

WSpec WSpec::full_star(CongruenceId c, std::vector<Letter> alphabet) {
    WSpec w;
    w.kind = Kind::FullStar;
    w.cong = std::move(c);
    w.alphabet = std::move(alphabet);
    return w;
}

WSpec WSpec::predicate_union(CongruenceId c, std::vector<Letter> alphabet, std::string predicate) {
    if (predicate != "xy-limited") throw std::invalid_argument("unsupported predicate '" + predicate + "'");
    WSpec w;
    w.kind = Kind::PredicateUnion;
    w.cong = std::move(c);
    w.alphabet = std::move(alphabet);
    w.predicate = std::move(predicate);
    return w;
}

std::vector<Letter> WSpec::sigma() const {
    if (kind == Kind::SingleClass) {
        LetterSet content = word_stats(rep).content;
        return std::vector<Letter>(content.begin(), content.end());
    }
    std::vector<Letter> out = alphabet;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Membership in the downward closure W^<=: is the class of v a factor-class
// of W? Representative-independent because tau is a congruence.
class FactorMembership {
public:
    explicit FactorMembership(const WSpec& w) : w_(w), sigma_(w.sigma()) {
        if (w_.kind == WSpec::Kind::SingleClass) wdfa_ = class_dfa(w_.cong, w_.rep);
    }

    bool contains(const Word& v) {
        switch (w_.kind) {
            case WSpec::Kind::SingleClass:
                return intersect_nonempty(contains_factor_dfa(v, sigma_), *wdfa_).has_value();
            case WSpec::Kind::FullStar:
                return true;  // every word over sigma is a factor of itself
            case WSpec::Kind::PredicateUnion: {
                // Appending one extra copy of each simple letter makes every
                // letter multiple, so the extension is a single block and
                // hence xy-limited while keeping v as a factor. The closure
                // therefore contains every class; the witness is checked.
                Word witness = v;
                for (const Letter& x : word_stats(v).simple) witness += x;
                if (!classify_word(witness).xy_limited)
                    throw std::logic_error("xy-limited closure witness failed");
                return true;
            }
        }
        return false;
    }

private:
    const WSpec& w_;
    std::vector<Letter> sigma_;
    std::optional<Dfa> wdfa_;
};

// Shared closure: BFS over classes from the empty word, expanding by letters,
// keeping classes admitted by `member`. Representatives come out
// shortlex-minimal. Returns reps in discovery (shortlex) order.
std::vector<Word> class_closure(const CongruenceId& c, const std::vector<Letter>& sigma,
                                const std::function<bool(const Word&)>& member, std::size_t cap,
                                const char* what) {
    std::map<std::string, int> seen;
    std::vector<Word> reps;
    std::deque<int> todo;
    seen.emplace(canonical(c, Word{}).key, 0);
    reps.push_back(Word{});
    todo.push_back(0);
    while (!todo.empty()) {
        int cur = todo.front();
        todo.pop_front();
        for (const Letter& x : sigma) {
            Word w = reps[static_cast<std::size_t>(cur)] + x;
            std::string key = canonical(c, w).key;
            if (seen.count(key)) continue;
            if (!member(w)) continue;
            if (reps.size() >= cap)
                throw std::runtime_error(std::string(what) + ": element cap " + std::to_string(cap) +
                                         " exceeded (quotient is likely infinite)");
            seen.emplace(key, static_cast<int>(reps.size()));
            reps.push_back(w);
            todo.push_back(static_cast<int>(reps.size()) - 1);
        }
    }
    return reps;
}

std::string class_label(const Word& rep) { return rep.empty() ? "1" : to_string(rep); }

}  // namespace

FiniteMonoid m_tau(const WSpec& w, std::size_t cap) {
    std::vector<Letter> sigma = w.sigma();
    FactorMembership member(w);
    std::vector<Word> reps =
        class_closure(w.cong, sigma, [&](const Word& v) { return member.contains(v); }, cap, "m_tau");

    std::map<std::string, int> elem_of_key;
    FiniteMonoid m;
    for (const Word& r : reps) {
        elem_of_key.emplace(canonical(w.cong, r).key, m.size());
        m.elements.push_back(class_label(r));
    }
    const int zero = m.size();
    m.elements.push_back("0");
    m.identity = 0;
    m.zero = zero;
    const int n = m.size();
    m.table.assign(static_cast<std::size_t>(n) * n, zero);
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) {
            Word prod = reps[static_cast<std::size_t>(i)] + reps[static_cast<std::size_t>(j)];
            auto it = elem_of_key.find(canonical(w.cong, prod).key);
            m.table[static_cast<std::size_t>(i) * n + j] = it == elem_of_key.end() ? zero : it->second;
        }
    for (const Letter& x : sigma) {
        Word v;
        v += x;
        auto it = elem_of_key.find(canonical(w.cong, v).key);
        if (it != elem_of_key.end()) m.generators[x] = it->second;
    }
    return m;
}

FiniteMonoid relatively_free(const CongruenceId& c, const std::vector<Letter>& alphabet, std::size_t cap) {
    std::vector<Letter> sigma = alphabet;
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
    std::vector<Word> reps =
        class_closure(c, sigma, [](const Word&) { return true; }, cap, "relatively_free");

    std::map<std::string, int> elem_of_key;
    FiniteMonoid m;
    for (const Word& r : reps) {
        elem_of_key.emplace(canonical(c, r).key, m.size());
        m.elements.push_back(class_label(r));
    }
    m.identity = 0;
    const int n = m.size();
    m.table.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Word prod = reps[static_cast<std::size_t>(i)] + reps[static_cast<std::size_t>(j)];
            m.table[static_cast<std::size_t>(i) * n + j] = elem_of_key.at(canonical(c, prod).key);
        }
    for (const Letter& x : sigma) {
        Word v;
        v += x;
        m.generators[x] = elem_of_key.at(canonical(c, v).key);
    }
    return m;
}

OntoReport onto_synt_check(const CongruenceId& c, const Word& rep) {
    OntoReport r;
    FiniteMonoid mt = m_tau(WSpec::single_class(c, rep));
    FiniteMonoid ms = syntactic_of_class(c, rep);
    r.mtau_size = mt.size();
    r.synt_size = ms.size();
    r.onto = morphism_search(mt, ms, MorphismKind::Onto);
    if (r.onto && mt.size() == ms.size()) {
        auto iso = morphism_search(mt, ms, MorphismKind::Iso);
        r.iso = iso.has_value();
    }
    return r;
}

}  // namespace wb
