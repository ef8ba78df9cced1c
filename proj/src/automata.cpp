#include "wb/automata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace wb {

int Dfa::letter_index(const Letter& x) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), x);
    if (it == alphabet.end() || *it != x) return -1;
    return static_cast<int>(it - alphabet.begin());
}

bool Dfa::accepts(const Word& w) const {
    int q = start;
    for (const Letter& x : w.letters) {
        int a = letter_index(x);
        if (a < 0) return false;
        q = step(q, a);
    }
    return accepting[q] != 0;
}

LetterSet Regex::alphabet() const {
    LetterSet out;
    if (kind == Kind::Sym) out.insert(sym);
    if (left) {
        LetterSet l = left->alphabet();
        out.insert(l.begin(), l.end());
    }
    if (right) {
        LetterSet r = right->alphabet();
        out.insert(r.begin(), r.end());
    }
    return out;
}

namespace {

RegexPtr mk(Regex::Kind k, RegexPtr l = nullptr, RegexPtr r = nullptr) {
    auto n = std::make_shared<Regex>();
    n->kind = k;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

RegexPtr mk_sym(Letter x) {
    auto n = std::make_shared<Regex>();
    n->kind = Regex::Kind::Sym;
    n->sym = std::move(x);
    return n;
}

class RegexParser {
public:
    explicit RegexParser(const std::string& text) : text_(text) {}

    RegexPtr parse() {
        RegexPtr r = parse_union();
        skip_ws();
        if (pos_ < text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_atom_start() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return (c >= 'a' && c <= 'z') || c == '(' || c == '{';
    }

    RegexPtr parse_union() {
        RegexPtr r = parse_concat();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '|') {
                std::size_t bar = pos_++;
                if (!peek_atom_start()) throw ParseError("expected operand after '|'", bar);
                r = mk(Regex::Kind::Union, r, parse_concat());
            } else {
                return r;
            }
        }
    }

    RegexPtr parse_concat() {
        if (!peek_atom_start()) return mk(Regex::Kind::Epsilon);
        RegexPtr r = parse_postfix();
        while (peek_atom_start()) r = mk(Regex::Kind::Concat, r, parse_postfix());
        return r;
    }

    RegexPtr parse_postfix() {
        RegexPtr r = parse_atom();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                r = mk(Regex::Kind::Star, r);
            } else if (pos_ < text_.size() && text_[pos_] == '+') {
                ++pos_;
                r = mk(Regex::Kind::Concat, r, mk(Regex::Kind::Star, r));
            } else {
                return r;
            }
        }
    }

    Letter parse_letter() {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] < 'a' || text_[pos_] > 'z')
            throw ParseError("expected letter", pos_);
        std::string name(1, text_[pos_++]);
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
        return Letter(name);
    }

    RegexPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of regex", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RegexPtr r = parse_union();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (c == '{') {
            ++pos_;
            RegexPtr r = mk_sym(parse_letter());
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                r = mk(Regex::Kind::Union, r, mk_sym(parse_letter()));
                skip_ws();
            }
            if (pos_ >= text_.size() || text_[pos_] != '}') throw ParseError("expected '}'", pos_);
            ++pos_;
            return r;
        }
        return mk_sym(parse_letter());
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// Thompson-style NFA with epsilon moves.
struct Nfa {
    std::vector<Letter> alphabet;  // sorted
    // per state: per letter index, target set; plus epsilon targets
    std::vector<std::vector<std::vector<int>>> delta;
    std::vector<std::vector<int>> eps;
    std::vector<int> starts;
    std::vector<char> accepting;

    int add_state() {
        delta.emplace_back(alphabet.size());
        eps.emplace_back();
        accepting.push_back(0);
        return static_cast<int>(delta.size()) - 1;
    }
};

// Thompson construction; returns (start, accept) fragment.
std::pair<int, int> build_fragment(Nfa& n, const RegexPtr& r, const std::map<Letter, int>& letter_idx) {
    int s = n.add_state();
    int t = n.add_state();
    switch (r->kind) {
        case Regex::Kind::Epsilon:
            n.eps[s].push_back(t);
            break;
        case Regex::Kind::Sym:
            n.delta[s][letter_idx.at(r->sym)].push_back(t);
            break;
        case Regex::Kind::Concat: {
            auto [ls, lt] = build_fragment(n, r->left, letter_idx);
            auto [rs, rt] = build_fragment(n, r->right, letter_idx);
            n.eps[s].push_back(ls);
            n.eps[lt].push_back(rs);
            n.eps[rt].push_back(t);
            break;
        }
        case Regex::Kind::Union: {
            auto [ls, lt] = build_fragment(n, r->left, letter_idx);
            auto [rs, rt] = build_fragment(n, r->right, letter_idx);
            n.eps[s].push_back(ls);
            n.eps[s].push_back(rs);
            n.eps[lt].push_back(t);
            n.eps[rt].push_back(t);
            break;
        }
        case Regex::Kind::Star: {
            auto [ls, lt] = build_fragment(n, r->left, letter_idx);
            n.eps[s].push_back(ls);
            n.eps[s].push_back(t);
            n.eps[lt].push_back(ls);
            n.eps[lt].push_back(t);
            break;
        }
    }
    return {s, t};
}

std::set<int> eps_closure(const Nfa& n, std::set<int> states) {
    std::deque<int> todo(states.begin(), states.end());
    while (!todo.empty()) {
        int q = todo.front();
        todo.pop_front();
        for (int r : n.eps[q])
            if (states.insert(r).second) todo.push_back(r);
    }
    return states;
}

// Subset construction; the empty subset acts as the sink, so the result is complete.
Dfa determinize(const Nfa& n) {
    Dfa d;
    d.alphabet = n.alphabet;
    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> subsets;
    auto get_id = [&](const std::set<int>& s) {
        auto [it, fresh] = ids.emplace(s, static_cast<int>(subsets.size()));
        if (fresh) subsets.push_back(s);
        return it->second;
    };
    std::set<int> init = eps_closure(n, std::set<int>(n.starts.begin(), n.starts.end()));
    d.start = get_id(init);
    std::deque<int> todo{d.start};
    std::vector<std::vector<int>> rows;
    std::vector<char> acc;
    auto ensure = [&](int id) {
        while (static_cast<int>(rows.size()) <= id) {
            rows.emplace_back(n.alphabet.size(), -1);
            acc.push_back(0);
        }
    };
    ensure(d.start);
    std::set<int> processed;
    while (!todo.empty()) {
        int id = todo.front();
        todo.pop_front();
        if (!processed.insert(id).second) continue;
        const std::set<int> subset = subsets[id];
        ensure(id);
        for (int q : subset)
            if (n.accepting[q]) acc[id] = 1;
        for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
            std::set<int> next;
            for (int q : subset)
                for (int r : n.delta[q][a]) next.insert(r);
            next = eps_closure(n, next);
            int nid = get_id(next);
            ensure(nid);
            rows[id][a] = nid;
            if (!processed.count(nid)) todo.push_back(nid);
        }
    }
    d.num_states = static_cast<int>(rows.size());
    d.accepting = acc;
    d.trans.resize(rows.size() * n.alphabet.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t a = 0; a < n.alphabet.size(); ++a)
            d.trans[i * n.alphabet.size() + a] = rows[i][a];
    return d;
}

// Restrict to states reachable from the start; renumber by BFS in alphabet order.
Dfa canonical_reachable(const Dfa& d) {
    std::vector<int> order;
    std::vector<int> newid(d.num_states, -1);
    std::deque<int> todo{d.start};
    newid[d.start] = 0;
    order.push_back(d.start);
    while (!todo.empty()) {
        int q = todo.front();
        todo.pop_front();
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            int r = d.step(q, static_cast<int>(a));
            if (newid[r] < 0) {
                newid[r] = static_cast<int>(order.size());
                order.push_back(r);
                todo.push_back(r);
            }
        }
    }
    Dfa out;
    out.alphabet = d.alphabet;
    out.num_states = static_cast<int>(order.size());
    out.start = 0;
    out.accepting.resize(order.size());
    out.trans.resize(order.size() * d.alphabet.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.accepting[i] = d.accepting[order[i]];
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            out.trans[i * d.alphabet.size() + a] = newid[d.step(order[i], static_cast<int>(a))];
    }
    return out;
}

}  // namespace

RegexPtr parse_regex(const std::string& text) { return RegexParser(text).parse(); }

Dfa minimize(const Dfa& input) {
    Dfa d = canonical_reachable(input);
    const int n = d.num_states;
    const int k = static_cast<int>(d.alphabet.size());
    // Hopcroft partition refinement.
    std::vector<std::vector<std::vector<int>>> inv(
        static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(std::max(k, 1))));
    for (int q = 0; q < n; ++q)
        for (int a = 0; a < k; ++a) inv[d.step(q, a)][a].push_back(q);

    std::vector<int> block_of(n, 0);
    std::vector<std::vector<int>> blocks;
    {
        std::vector<int> acc, rej;
        for (int q = 0; q < n; ++q) (d.accepting[q] ? acc : rej).push_back(q);
        if (!acc.empty()) blocks.push_back(acc);
        if (!rej.empty()) blocks.push_back(rej);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int q : blocks[b]) block_of[q] = static_cast<int>(b);
    }
    std::deque<std::pair<int, int>> worklist;  // (block, letter)
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int a = 0; a < k; ++a) worklist.emplace_back(static_cast<int>(b), a);

    while (!worklist.empty()) {
        auto [splitter, a] = worklist.front();
        worklist.pop_front();
        std::vector<int> preimage;
        for (int q : blocks[splitter])
            for (int p : inv[q][a]) preimage.push_back(p);
        if (preimage.empty()) continue;
        std::map<int, std::vector<int>> touched;
        for (int p : preimage) touched[block_of[p]].push_back(p);
        for (auto& [b, hit] : touched) {
            if (hit.size() == blocks[b].size()) continue;
            // Split block b into hit / rest.
            std::set<int> hitset(hit.begin(), hit.end());
            std::vector<int> rest;
            for (int q : blocks[b])
                if (!hitset.count(q)) rest.push_back(q);
            int nb = static_cast<int>(blocks.size());
            blocks[b] = hit;
            blocks.push_back(rest);
            for (int q : rest) block_of[q] = nb;
            for (int c = 0; c < k; ++c) worklist.emplace_back(nb, c);
        }
    }

    Dfa m;
    m.alphabet = d.alphabet;
    m.num_states = static_cast<int>(blocks.size());
    m.start = block_of[d.start];
    m.accepting.assign(blocks.size(), 0);
    m.trans.resize(blocks.size() * static_cast<std::size_t>(k));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        int rep = blocks[b][0];
        m.accepting[b] = d.accepting[rep];
        for (int a = 0; a < k; ++a) m.trans[b * static_cast<std::size_t>(k) + a] = block_of[d.step(rep, a)];
    }
    return canonical_reachable(m);
}

Dfa compile(const RegexPtr& r, const LetterSet& extra_alphabet) {
    LetterSet sigma = r->alphabet();
    sigma.insert(extra_alphabet.begin(), extra_alphabet.end());
    Nfa n;
    n.alphabet.assign(sigma.begin(), sigma.end());
    std::map<Letter, int> idx;
    for (std::size_t a = 0; a < n.alphabet.size(); ++a) idx[n.alphabet[a]] = static_cast<int>(a);
    auto [s, t] = build_fragment(n, r, idx);
    n.starts = {s};
    n.accepting[t] = 1;
    return minimize(determinize(n));
}

Dfa compile(const std::string& regex_text, const LetterSet& extra_alphabet) {
    return compile(parse_regex(regex_text), extra_alphabet);
}

bool dfa_equivalent(const Dfa& d1, const Dfa& d2) {
    if (d1.alphabet != d2.alphabet) throw std::invalid_argument("dfa_equivalent: alphabet mismatch");
    Dfa m1 = minimize(d1);
    Dfa m2 = minimize(d2);
    // Minimization numbers states canonically, so isomorphism is table equality.
    return m1.num_states == m2.num_states && m1.start == m2.start && m1.accepting == m2.accepting &&
           m1.trans == m2.trans;
}

Dfa factor_language(const Dfa& d) {
    // Reachable from start / co-reachable to an accepting state.
    std::vector<char> reach(d.num_states, 0), coreach(d.num_states, 0);
    {
        std::deque<int> todo{d.start};
        reach[d.start] = 1;
        while (!todo.empty()) {
            int q = todo.front();
            todo.pop_front();
            for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
                int r = d.step(q, static_cast<int>(a));
                if (!reach[r]) {
                    reach[r] = 1;
                    todo.push_back(r);
                }
            }
        }
        std::vector<std::vector<int>> inv(d.num_states);
        for (int q = 0; q < d.num_states; ++q)
            for (std::size_t a = 0; a < d.alphabet.size(); ++a) inv[d.step(q, static_cast<int>(a))].push_back(q);
        std::deque<int> back;
        for (int q = 0; q < d.num_states; ++q)
            if (d.accepting[q]) {
                coreach[q] = 1;
                back.push_back(q);
            }
        while (!back.empty()) {
            int q = back.front();
            back.pop_front();
            for (int p : inv[q])
                if (!coreach[p]) {
                    coreach[p] = 1;
                    back.push_back(p);
                }
        }
    }
    Nfa n;
    n.alphabet = d.alphabet;
    for (int q = 0; q < d.num_states; ++q) {
        n.add_state();
        if (reach[q] && coreach[q]) n.starts.push_back(q);
        n.accepting[q] = coreach[q];
    }
    for (int q = 0; q < d.num_states; ++q)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            n.delta[q][a].push_back(d.step(q, static_cast<int>(a)));
    return minimize(determinize(n));
}

Dfa dfa_intersection(const Dfa& d1, const Dfa& d2) {
    if (d1.alphabet != d2.alphabet) throw std::invalid_argument("dfa_intersection: alphabet mismatch");
    const std::size_t k = d1.alphabet.size();
    Dfa p;
    p.alphabet = d1.alphabet;
    p.num_states = d1.num_states * d2.num_states;
    auto id = [&](int q1, int q2) { return q1 * d2.num_states + q2; };
    p.start = id(d1.start, d2.start);
    p.accepting.resize(p.num_states);
    p.trans.resize(static_cast<std::size_t>(p.num_states) * k);
    for (int q1 = 0; q1 < d1.num_states; ++q1)
        for (int q2 = 0; q2 < d2.num_states; ++q2) {
            int q = id(q1, q2);
            p.accepting[q] = d1.accepting[q1] && d2.accepting[q2];
            for (std::size_t a = 0; a < k; ++a)
                p.trans[static_cast<std::size_t>(q) * k + a] =
                    id(d1.step(q1, static_cast<int>(a)), d2.step(q2, static_cast<int>(a)));
        }
    return canonical_reachable(p);
}

std::optional<Word> intersect_nonempty(const Dfa& d1, const Dfa& d2) {
    if (d1.alphabet != d2.alphabet) throw std::invalid_argument("intersect_nonempty: alphabet mismatch");
    // BFS over the product, letters in alphabet (= alphabetical) order.
    std::vector<std::pair<int, Letter>> parent(static_cast<std::size_t>(d1.num_states) * d2.num_states,
                                               {-1, Letter()});
    std::vector<char> seen(static_cast<std::size_t>(d1.num_states) * d2.num_states, 0);
    auto id = [&](int q1, int q2) { return q1 * d2.num_states + q2; };
    std::deque<int> todo{id(d1.start, d2.start)};
    seen[id(d1.start, d2.start)] = 1;
    while (!todo.empty()) {
        int q = todo.front();
        todo.pop_front();
        int q1 = q / d2.num_states, q2 = q % d2.num_states;
        if (d1.accepting[q1] && d2.accepting[q2]) {
            Word w;
            int cur = q;
            while (parent[cur].first >= 0) {
                w += parent[cur].second;
                cur = parent[cur].first;
            }
            std::reverse(w.letters.begin(), w.letters.end());
            return w;
        }
        for (std::size_t a = 0; a < d1.alphabet.size(); ++a) {
            int r = id(d1.step(q1, static_cast<int>(a)), d2.step(q2, static_cast<int>(a)));
            if (!seen[r]) {
                seen[r] = 1;
                parent[r] = {q, d1.alphabet[a]};
                todo.push_back(r);
            }
        }
    }
    return std::nullopt;
}

Dfa reverse_language(const Dfa& d) {
    Nfa n;
    n.alphabet = d.alphabet;
    for (int q = 0; q < d.num_states; ++q) {
        n.add_state();
        if (d.accepting[q]) n.starts.push_back(q);
    }
    n.accepting[d.start] = 1;
    for (int q = 0; q < d.num_states; ++q)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            n.delta[d.step(q, static_cast<int>(a))][a].push_back(q);
    return minimize(determinize(n));
}

Dfa contains_factor_dfa(const Word& u, const std::vector<Letter>& alphabet) {
    // Prefix-match automaton with KMP failure links; full match is sticky.
    const int m = static_cast<int>(u.size());
    std::vector<int> fail(m + 1, 0);
    for (int i = 1; i < m; ++i) {
        int j = fail[i];
        while (j > 0 && u[i] != u[j]) j = fail[j];
        fail[i + 1] = (u[i] == u[j]) ? j + 1 : 0;
    }
    Dfa d;
    d.alphabet = alphabet;
    std::sort(d.alphabet.begin(), d.alphabet.end());
    d.alphabet.erase(std::unique(d.alphabet.begin(), d.alphabet.end()), d.alphabet.end());
    d.num_states = m + 1;
    d.start = 0;
    d.accepting.assign(m + 1, 0);
    d.accepting[m] = 1;
    d.trans.resize(static_cast<std::size_t>(m + 1) * d.alphabet.size());
    for (int q = 0; q <= m; ++q)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            int next;
            if (q == m) {
                next = m;
            } else {
                int j = q;
                while (j > 0 && d.alphabet[a] != u[j]) j = fail[j];
                next = (d.alphabet[a] == u[j]) ? j + 1 : 0;
            }
            d.trans[static_cast<std::size_t>(q) * d.alphabet.size() + a] = next;
        }
    return minimize(d);
}

Dfa singleton_dfa(const Word& w) {
    LetterSet sigma = word_stats(w).content;
    Dfa d;
    d.alphabet.assign(sigma.begin(), sigma.end());
    const std::size_t k = d.alphabet.size();
    const int n = static_cast<int>(w.size());
    d.num_states = n + 2;  // positions 0..n plus sink
    const int sink = n + 1;
    d.start = 0;
    d.accepting.assign(d.num_states, 0);
    d.accepting[n] = 1;
    d.trans.assign(static_cast<std::size_t>(d.num_states) * k, sink);
    for (int q = 0; q < n; ++q)
        for (std::size_t a = 0; a < k; ++a)
            d.trans[static_cast<std::size_t>(q) * k + a] = (d.alphabet[a] == w[q]) ? q + 1 : sink;
    return minimize(d);
}

std::vector<Word> language_upto(const Dfa& d, std::size_t max_len) {
    std::vector<Word> out;
    // DFS in shortlex layers.
    std::vector<std::pair<Word, int>> layer{{Word{}, d.start}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const auto& [w, q] : layer)
            if (d.accepting[q]) out.push_back(w);
        if (len == max_len) break;
        std::vector<std::pair<Word, int>> next;
        next.reserve(layer.size() * d.alphabet.size());
        for (const auto& [w, q] : layer)
            for (std::size_t a = 0; a < d.alphabet.size(); ++a) next.emplace_back(w + d.alphabet[a], d.step(q, static_cast<int>(a)));
        layer = std::move(next);
    }
    return out;
}

std::string dfa_to_json(const Dfa& d) {
    nlohmann::json j;
    for (const Letter& x : d.alphabet) j["alphabet"].push_back(x.name);
    j["states"] = d.num_states;
    j["start"] = d.start;
    j["accepting"] = nlohmann::json::array();
    for (int q = 0; q < d.num_states; ++q)
        if (d.accepting[q]) j["accepting"].push_back(q);
    j["transitions"] = nlohmann::json::array();
    for (int q = 0; q < d.num_states; ++q) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) row.push_back(d.step(q, static_cast<int>(a)));
        j["transitions"].push_back(row);
    }
    return j.dump(2);
}

}  // namespace wb
