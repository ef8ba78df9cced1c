#include "wb/congruence.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace wb {

CongruenceId CongruenceId::meet(std::vector<CongruenceId> components) {
    CongruenceId c(Tag::Meet);
    for (auto& p : components) {
        if (p.tag == Tag::Meet)
            c.parts.insert(c.parts.end(), p.parts.begin(), p.parts.end());
        else
            c.parts.push_back(std::move(p));
    }
    if (c.parts.empty()) throw std::invalid_argument("meet of no congruences");
    if (c.parts.size() == 1) return c.parts[0];
    return c;
}

namespace {

CongruenceId parse_atom(const std::string& s) {
    if (s == "t1") return kT1;
    if (s == "gamma") return kGamma;
    if (s == "alpha") return kAlpha;
    if (s == "zeta") return kZeta;
    if (s == "beta") return kBeta;
    if (s == "beta-dual") return kBetaDual;
    if (s == "simq") return kSimQ;
    throw std::invalid_argument("unknown congruence '" + s + "'");
}

}  // namespace

CongruenceId CongruenceId::parse(const std::string& text) {
    std::vector<CongruenceId> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t caret = text.find('^', pos);
        std::string piece = text.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos);
        parts.push_back(parse_atom(piece));
        if (caret == std::string::npos) break;
        pos = caret + 1;
    }
    return meet(std::move(parts));
}

std::string CongruenceId::name() const {
    switch (tag) {
        case Tag::T1: return "t1";
        case Tag::Gamma: return "gamma";
        case Tag::Alpha: return "alpha";
        case Tag::Zeta: return "zeta";
        case Tag::Beta: return "beta";
        case Tag::BetaDual: return "beta-dual";
        case Tag::SimQ: return "simq";
        case Tag::Meet: {
            std::string out;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) out += "^";
                out += parts[i].name();
            }
            return out;
        }
    }
    return "?";
}

namespace {

Word collapse_runs(const Word& w) {
    Word out;
    for (const Letter& x : w.letters)
        if (out.empty() || out.letters.back() != x) out += x;
    return out;
}

std::vector<Letter> first_occurrence_sequence(const Word& w) {
    std::vector<Letter> seq;
    LetterSet seen;
    for (const Letter& x : w.letters)
        if (seen.insert(x).second) seq.push_back(x);
    return seq;
}

std::string join_letters(const std::vector<Letter>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ".";
        out += xs[i].name;
    }
    return out;
}

std::string join_set(const LetterSet& xs) {
    std::string out;
    for (auto it = xs.begin(); it != xs.end(); ++it) {
        if (it != xs.begin()) out += ".";
        out += it->name;
    }
    return out;
}

std::string beta_key(const Word& w) {
    BlockDecomposition d = block_decompose(w);
    std::string key = "skel=" + join_letters(d.skeleton) + "|blocks=";
    for (const Word& b : d.blocks) key += "[" + join_letters(first_occurrence_sequence(b)) + "]";
    return key;
}

std::string simq_key(const Word& w) {
    BlockDecomposition d = block_decompose(w);
    std::string key = "skel=" + join_letters(d.skeleton) + "|blocks=";
    for (const Word& b : d.blocks) key += "{" + join_set(word_stats(b).content) + "}";
    return key;
}

}  // namespace

CanonicalForm canonical(const CongruenceId& c, const Word& w) {
    switch (c.tag) {
        case CongruenceId::Tag::T1:
            return {"t1:" + to_string(collapse_runs(w))};
        case CongruenceId::Tag::Gamma: {
            WordStats st = word_stats(w);
            return {"gamma:simp={" + join_set(st.simple) + "}|mul={" + join_set(st.multiple) + "}"};
        }
        case CongruenceId::Tag::Alpha:
            return {"alpha:" + join_letters(first_occurrence_sequence(w))};
        case CongruenceId::Tag::Zeta:
            return {"zeta:" + to_string(ini2(w))};
        case CongruenceId::Tag::Beta:
            return {"beta:" + beta_key(w)};
        case CongruenceId::Tag::BetaDual:
            return {"beta-dual:" + beta_key(reverse(w))};
        case CongruenceId::Tag::SimQ:
            return {"simq:" + simq_key(w)};
        case CongruenceId::Tag::Meet: {
            std::string key = "meet:";
            for (const CongruenceId& p : c.parts) key += canonical(p, w).key + ";";
            return {key};
        }
    }
    throw std::logic_error("unreachable");
}

bool equivalent(const CongruenceId& c, const Word& u, const Word& v) {
    return canonical(c, u) == canonical(c, v);
}

std::vector<Word> enumerate_class(const CongruenceId& c, const Word& rep, std::size_t max_len) {
    LetterSet content = word_stats(rep).content;
    std::vector<Letter> sigma(content.begin(), content.end());
    CanonicalForm target = canonical(c, rep);
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const Word& w : layer)
            if (canonical(c, w) == target) out.push_back(w);
        if (len == max_len || sigma.empty()) break;
        std::vector<Word> next;
        next.reserve(layer.size() * sigma.size());
        for (const Word& w : layer)
            for (const Letter& x : sigma) next.push_back(w + x);
        layer = std::move(next);
    }
    return out;
}

namespace {

// Generic deterministic profile automaton: BFS over profile states with an
// explicit dead sink, then minimization.
Dfa build_profile_dfa(std::vector<Letter> alphabet, std::vector<int> init,
                      const std::function<std::optional<std::vector<int>>(const std::vector<int>&, std::size_t)>& step,
                      const std::function<bool(const std::vector<int>&)>& accept) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    const std::size_t k = alphabet.size();
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> states;
    auto get_id = [&](const std::vector<int>& s) {
        auto [it, fresh] = ids.emplace(s, static_cast<int>(states.size()));
        if (fresh) states.push_back(s);
        return it->second;
    };
    int start = get_id(init);
    std::vector<std::vector<int>> rows;
    std::vector<char> acc;
    std::deque<int> todo{start};
    std::set<int> done;
    std::vector<std::vector<int>> pending_rows;
    while (!todo.empty()) {
        int id = todo.front();
        todo.pop_front();
        if (!done.insert(id).second) continue;
        std::vector<int> state = states[id];
        while (static_cast<int>(rows.size()) <= id) {
            rows.emplace_back(k, -1);
            acc.push_back(0);
        }
        acc[id] = accept(state) ? 1 : 0;
        for (std::size_t a = 0; a < k; ++a) {
            std::optional<std::vector<int>> next = step(state, a);
            int nid = next ? get_id(*next) : -1;  // -1 = dead
            rows[id][a] = nid;
            if (nid >= 0 && !done.count(nid)) todo.push_back(nid);
        }
    }
    Dfa d;
    d.alphabet = alphabet;
    d.num_states = static_cast<int>(rows.size()) + 1;
    const int dead = d.num_states - 1;
    d.start = start;
    d.accepting.assign(d.num_states, 0);
    d.trans.assign(static_cast<std::size_t>(d.num_states) * k, dead);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        d.accepting[i] = acc[i];
        for (std::size_t a = 0; a < k; ++a)
            d.trans[i * k + a] = rows[i][a] < 0 ? dead : rows[i][a];
    }
    return minimize(d);
}

std::vector<Letter> sorted_content(const Word& rep) {
    LetterSet content = word_stats(rep).content;
    return std::vector<Letter>(content.begin(), content.end());
}

Dfa t1_class_dfa(const Word& rep) {
    std::vector<Letter> sigma = sorted_content(rep);
    Word target = collapse_runs(rep);
    const int n = static_cast<int>(target.size());
    auto step = [&, target](const std::vector<int>& s, std::size_t a) -> std::optional<std::vector<int>> {
        int i = s[0];
        const Letter& x = sigma[a];
        if (i > 0 && target[static_cast<std::size_t>(i - 1)] == x) return s;  // run continues
        if (i < n && target[static_cast<std::size_t>(i)] == x) return std::vector<int>{i + 1};
        return std::nullopt;
    };
    auto accept = [n](const std::vector<int>& s) { return s[0] == n; };
    return build_profile_dfa(sigma, {0}, step, accept);
}

Dfa gamma_class_dfa(const Word& rep) {
    std::vector<Letter> sigma = sorted_content(rep);
    std::vector<int> target(sigma.size(), 0);
    for (const Letter& x : rep.letters) {
        std::size_t a = static_cast<std::size_t>(std::lower_bound(sigma.begin(), sigma.end(), x) - sigma.begin());
        target[a] = std::min(target[a] + 1, 2);
    }
    auto step = [](const std::vector<int>& s, std::size_t a) -> std::optional<std::vector<int>> {
        std::vector<int> n = s;
        n[a] = std::min(n[a] + 1, 2);
        return n;
    };
    auto accept = [target](const std::vector<int>& s) { return s == target; };
    return build_profile_dfa(sigma, std::vector<int>(sigma.size(), 0), step, accept);
}

Dfa alpha_class_dfa(const Word& rep) {
    std::vector<Letter> sigma = sorted_content(rep);
    std::vector<Letter> target = first_occurrence_sequence(rep);
    const int n = static_cast<int>(target.size());
    auto step = [&, target](const std::vector<int>& s, std::size_t a) -> std::optional<std::vector<int>> {
        int i = s[0];
        const Letter& x = sigma[a];
        for (int j = 0; j < i; ++j)
            if (target[static_cast<std::size_t>(j)] == x) return s;
        if (i < n && target[static_cast<std::size_t>(i)] == x) return std::vector<int>{i + 1};
        return std::nullopt;
    };
    auto accept = [n](const std::vector<int>& s) { return s[0] == n; };
    return build_profile_dfa(sigma, {0}, step, accept);
}

Dfa zeta_class_dfa(const Word& rep) {
    std::vector<Letter> sigma = sorted_content(rep);
    Word target = ini2(rep);
    const int n = static_cast<int>(target.size());
    auto step = [&, target](const std::vector<int>& s, std::size_t a) -> std::optional<std::vector<int>> {
        int i = s[0];
        const Letter& x = sigma[a];
        int count = 0;
        for (int j = 0; j < i; ++j)
            if (target[static_cast<std::size_t>(j)] == x) ++count;
        if (count >= 2) return s;  // third and later occurrences do not enter ini2
        if (i < n && target[static_cast<std::size_t>(i)] == x) return std::vector<int>{i + 1};
        return std::nullopt;
    };
    auto accept = [n](const std::vector<int>& s) { return s[0] == n; };
    return build_profile_dfa(sigma, {0}, step, accept);
}

// Shared target data for the block congruences beta and ~Q.
struct BlockTarget {
    std::vector<Letter> skeleton;
    std::vector<std::vector<Letter>> block_seqs;  // per-block first-occurrence orders
    std::vector<Letter> block_letters;            // sorted union of block contents

    int letter_bit(const Letter& x) const {
        auto it = std::lower_bound(block_letters.begin(), block_letters.end(), x);
        if (it == block_letters.end() || *it != x) return -1;
        return static_cast<int>(it - block_letters.begin());
    }
};

BlockTarget block_target(const Word& rep) {
    BlockTarget t;
    BlockDecomposition d = block_decompose(rep);
    t.skeleton = d.skeleton;
    LetterSet all;
    for (const Word& b : d.blocks) {
        t.block_seqs.push_back(first_occurrence_sequence(b));
        for (const Letter& x : b.letters) all.insert(x);
    }
    t.block_letters.assign(all.begin(), all.end());
    return t;
}

// State: (block index j, first-occurrence position p within block j, bitmask of
// block letters seen exactly once so far). Dead on any deviation from the target
// skeleton, block contents, or block first-occurrence orders.
Dfa beta_class_dfa(const Word& rep) {
    std::vector<Letter> sigma = sorted_content(rep);
    BlockTarget t = block_target(rep);
    const int m = static_cast<int>(t.skeleton.size());
    auto seen_before = [&t](int j, int p, const Letter& x) {
        for (int b = 0; b < j; ++b)
            for (const Letter& y : t.block_seqs[static_cast<std::size_t>(b)])
                if (y == x) return true;
        const auto& cur = t.block_seqs[static_cast<std::size_t>(j)];
        for (int i = 0; i < p; ++i)
            if (cur[static_cast<std::size_t>(i)] == x) return true;
        return false;
    };
    auto step = [&, t](const std::vector<int>& s, std::size_t a) -> std::optional<std::vector<int>> {
        int j = s[0], p = s[1], singles = s[2];
        const Letter& x = sigma[a];
        const auto& cur = t.block_seqs[static_cast<std::size_t>(j)];
        if (j < m && x == t.skeleton[static_cast<std::size_t>(j)]) {
            if (p != static_cast<int>(cur.size())) return std::nullopt;  // block incomplete
            return std::vector<int>{j + 1, 0, singles};
        }
        int bit = t.letter_bit(x);
        if (bit < 0) return std::nullopt;  // skeleton letter out of order, or foreign letter
        bool in_prefix = false;
        for (int i = 0; i < p; ++i)
            if (cur[static_cast<std::size_t>(i)] == x) in_prefix = true;
        if (in_prefix) {
            return std::vector<int>{j, p, singles & ~(1 << bit)};
        }
        if (p < static_cast<int>(cur.size()) && cur[static_cast<std::size_t>(p)] == x) {
            int ns = singles;
            if (!seen_before(j, p, x))
                ns |= (1 << bit);
            else
                ns &= ~(1 << bit);
            return std::vector<int>{j, p + 1, ns};
        }
        return std::nullopt;
    };
    auto accept = [&, t](const std::vector<int>& s) {
        return s[0] == m && s[1] == static_cast<int>(t.block_seqs.back().size()) && s[2] == 0;
    };
    return build_profile_dfa(sigma, {0, 0, 0}, step, accept);
}

// Same skeleton/content machinery as beta but block contents are compared as
// sets: state (j, subset of block j's content seen, singles mask).
Dfa simq_class_dfa(const Word& rep) {
    std::vector<Letter> sigma = sorted_content(rep);
    BlockTarget t = block_target(rep);
    const int m = static_cast<int>(t.skeleton.size());
    std::vector<int> full_mask(t.block_seqs.size(), 0);
    std::vector<std::vector<int>> block_bits(t.block_seqs.size());
    for (std::size_t j = 0; j < t.block_seqs.size(); ++j)
        for (const Letter& x : t.block_seqs[j]) {
            int bit = t.letter_bit(x);
            block_bits[j].push_back(bit);
            full_mask[j] |= (1 << bit);
        }
    auto step = [&, t, full_mask](const std::vector<int>& s, std::size_t a) -> std::optional<std::vector<int>> {
        int j = s[0], subset = s[1], singles = s[2];
        const Letter& x = sigma[a];
        if (j < m && x == t.skeleton[static_cast<std::size_t>(j)]) {
            if (subset != full_mask[static_cast<std::size_t>(j)]) return std::nullopt;
            return std::vector<int>{j + 1, 0, singles};
        }
        int bit = t.letter_bit(x);
        if (bit < 0 || !(full_mask[static_cast<std::size_t>(j)] & (1 << bit))) return std::nullopt;
        bool seen_global = (subset & (1 << bit)) != 0;
        for (int b = 0; b < j && !seen_global; ++b)
            if (full_mask[static_cast<std::size_t>(b)] & (1 << bit)) seen_global = true;
        int nsingles = singles;
        if (!seen_global)
            nsingles |= (1 << bit);
        else
            nsingles &= ~(1 << bit);
        return std::vector<int>{j, subset | (1 << bit), nsingles};
    };
    auto accept = [&, full_mask, m](const std::vector<int>& s) {
        return s[0] == m && s[1] == full_mask.back() && s[2] == 0;
    };
    return build_profile_dfa(sigma, {0, 0, 0}, step, accept);
}

}  // namespace

Dfa class_dfa(const CongruenceId& c, const Word& rep) {
    switch (c.tag) {
        case CongruenceId::Tag::T1: return t1_class_dfa(rep);
        case CongruenceId::Tag::Gamma: return gamma_class_dfa(rep);
        case CongruenceId::Tag::Alpha: return alpha_class_dfa(rep);
        case CongruenceId::Tag::Zeta: return zeta_class_dfa(rep);
        case CongruenceId::Tag::Beta: return beta_class_dfa(rep);
        case CongruenceId::Tag::BetaDual: return minimize(reverse_language(beta_class_dfa(reverse(rep))));
        case CongruenceId::Tag::SimQ: return simq_class_dfa(rep);
        case CongruenceId::Tag::Meet: {
            Dfa d = class_dfa(c.parts[0], rep);
            for (std::size_t i = 1; i < c.parts.size(); ++i)
                d = dfa_intersection(d, class_dfa(c.parts[i], rep));
            return minimize(d);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace wb
