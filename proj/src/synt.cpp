#include "wb/synt.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace wb {

namespace {

// Widens d with a fresh junk letter standing in for the rest of the countably
// infinite ambient alphabet: it sends every state to a dead sink.
Dfa with_ambient_letter(const Dfa& input) {
    Letter junk("z");
    for (int i = 1; input.letter_index(junk) >= 0; ++i) junk = Letter("z" + std::to_string(i));
    Dfa d;
    d.alphabet = input.alphabet;
    d.alphabet.push_back(junk);
    std::sort(d.alphabet.begin(), d.alphabet.end());
    const int jpos = d.letter_index(junk);
    d.num_states = input.num_states + 1;
    const int sink = input.num_states;
    d.start = input.start;
    d.accepting = input.accepting;
    d.accepting.push_back(0);
    const std::size_t k = d.alphabet.size();
    d.trans.assign(static_cast<std::size_t>(d.num_states) * k, sink);
    for (int s = 0; s < input.num_states; ++s)
        for (std::size_t a = 0; a < k; ++a) {
            if (static_cast<int>(a) == jpos) continue;
            int old_a = input.letter_index(d.alphabet[a]);
            d.trans[static_cast<std::size_t>(s) * k + a] = input.step(s, old_a);
        }
    return d;
}

}  // namespace

FiniteMonoid syntactic_monoid(const Dfa& input, bool ambient_zero) {
    Dfa d = minimize(ambient_zero ? with_ambient_letter(input) : input);
    const int n = d.num_states;
    const std::size_t k = d.alphabet.size();

    using StateMap = std::vector<int>;
    std::vector<StateMap> letter_map(k, StateMap(static_cast<std::size_t>(n)));
    for (std::size_t a = 0; a < k; ++a)
        for (int s = 0; s < n; ++s) letter_map[a][static_cast<std::size_t>(s)] = d.step(s, static_cast<int>(a));

    StateMap id(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) id[static_cast<std::size_t>(s)] = s;

    // BFS closure in shortlex witness order: shortest witness first,
    // alphabetical tie-break within a length layer.
    std::map<StateMap, int> index;
    std::vector<StateMap> maps;
    std::vector<Word> witness;
    std::deque<int> todo;
    index.emplace(id, 0);
    maps.push_back(id);
    witness.emplace_back();
    todo.push_back(0);
    constexpr int kElementCap = 100000;
    while (!todo.empty()) {
        int cur = todo.front();
        todo.pop_front();
        for (std::size_t a = 0; a < k; ++a) {
            StateMap next(static_cast<std::size_t>(n));
            for (int s = 0; s < n; ++s)
                next[static_cast<std::size_t>(s)] = letter_map[a][static_cast<std::size_t>(maps[static_cast<std::size_t>(cur)][static_cast<std::size_t>(s)])];
            auto [it, fresh] = index.emplace(next, static_cast<int>(maps.size()));
            if (fresh) {
                if (static_cast<int>(maps.size()) >= kElementCap)
                    throw std::runtime_error("transition monoid exceeds element cap");
                maps.push_back(next);
                witness.push_back(witness[static_cast<std::size_t>(cur)] + d.alphabet[a]);
                todo.push_back(it->second);
            }
        }
    }

    FiniteMonoid m;
    const int sz = static_cast<int>(maps.size());
    m.elements.resize(static_cast<std::size_t>(sz));
    m.identity = 0;
    m.table.assign(static_cast<std::size_t>(sz) * sz, -1);
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
            // action of witness_i then witness_j
            StateMap comp(static_cast<std::size_t>(n));
            for (int s = 0; s < n; ++s)
                comp[static_cast<std::size_t>(s)] =
                    maps[static_cast<std::size_t>(j)][static_cast<std::size_t>(maps[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)])];
            m.table[static_cast<std::size_t>(i) * sz + j] = index.at(comp);
        }
    for (int i = 0; i < sz; ++i) {
        bool absorbing = true;
        for (int j = 0; j < sz && absorbing; ++j)
            absorbing = (m.mul(i, j) == i && m.mul(j, i) == i);
        if (absorbing && sz > 1) {
            m.zero = i;
            break;
        }
    }
    for (int i = 0; i < sz; ++i) {
        if (i == m.identity)
            m.elements[static_cast<std::size_t>(i)] = "1";
        else if (i == m.zero)
            m.elements[static_cast<std::size_t>(i)] = "0";
        else
            m.elements[static_cast<std::size_t>(i)] = to_string(witness[static_cast<std::size_t>(i)]);
    }
    for (std::size_t a = 0; a < k; ++a) {
        // the junk letter standing in for the ambient alphabet is not a generator
        if (ambient_zero && input.letter_index(d.alphabet[a]) < 0) continue;
        m.generators[d.alphabet[a]] = index.at(letter_map[a]);
    }
    return m;
}

FiniteMonoid syntactic_of_class(const CongruenceId& c, const Word& rep) {
    return syntactic_monoid(class_dfa(c, rep));
}

FiniteMonoid syntactic_of_word(const Word& w) { return syntactic_monoid(singleton_dfa(w)); }

}  // namespace wb
