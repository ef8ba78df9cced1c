#include "wb/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <initializer_list>
#include <set>
#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>

namespace wb {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

RelSide parse_rel_side(const std::string& text) {
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "0") return {true, Word{}};
    RelSide s{false, parse_word(trimmed)};
    if (s.word.empty()) throw ParseError("empty relation side", 0);
    return s;
}

}  // namespace

std::vector<Relation> parse_relations(const std::string& text) {
    std::vector<std::string> sides;
    std::size_t pos = 0;
    while (true) {
        std::size_t eq = text.find('=', pos);
        sides.push_back(text.substr(pos, eq == std::string::npos ? std::string::npos : eq - pos));
        if (eq == std::string::npos) break;
        pos = eq + 1;
    }
    if (sides.size() < 2) throw ParseError("relation needs at least two sides", 0);
    std::vector<Relation> out;
    for (std::size_t i = 0; i + 1 < sides.size(); ++i)
        out.emplace_back(parse_rel_side(sides[i]), parse_rel_side(sides[i + 1]));
    return out;
}

FiniteMonoid from_presentation(const std::vector<Letter>& gens, const std::vector<Relation>& relations,
                               std::size_t cap) {
    bool has_zero = false;
    for (const auto& [l, r] : relations) has_zero = has_zero || l.is_zero || r.is_zero;

    // All non-empty words over the generators up to length cap.
    std::vector<Word> words;
    std::map<Word, int> word_id;
    {
        std::vector<Word> layer{Word{}};
        for (std::size_t len = 1; len <= cap; ++len) {
            std::vector<Word> next;
            for (const Word& w : layer)
                for (const Letter& g : gens) next.push_back(w + g);
            for (const Word& w : next) {
                word_id.emplace(w, static_cast<int>(words.size()));
                words.push_back(w);
            }
            layer = std::move(next);
        }
    }
    const int zero_node = static_cast<int>(words.size());
    UnionFind uf(words.size() + 1);

    auto occurrences_replace = [&](const Word& w, const Word& pat, const Word& repl) {
        if (pat.size() > w.size()) return;
        for (std::size_t i = 0; i + pat.size() <= w.size(); ++i) {
            bool match = true;
            for (std::size_t j = 0; j < pat.size() && match; ++j) match = (w[i + j] == pat[j]);
            if (!match) continue;
            Word w2;
            w2.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(i));
            w2 += repl;
            w2.letters.insert(w2.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(i + pat.size()),
                              w.letters.end());
            if (w2.size() >= 1 && w2.size() <= cap) uf.unite(word_id.at(w), word_id.at(w2));
        }
    };
    auto occurrences_zero = [&](const Word& w, const Word& pat) {
        if (pat.size() > w.size()) return;
        for (std::size_t i = 0; i + pat.size() <= w.size(); ++i) {
            bool match = true;
            for (std::size_t j = 0; j < pat.size() && match; ++j) match = (w[i + j] == pat[j]);
            if (match) {
                uf.unite(word_id.at(w), zero_node);
                return;
            }
        }
    };

    // A single syntactic pass is complete: derivations are paths in the graph
    // whose edges are one-step relation applications, and union-find takes the
    // connected components.
    for (const Word& w : words) {
        for (const auto& [l, r] : relations) {
            if (l.is_zero && r.is_zero) continue;
            if (l.is_zero) {
                occurrences_zero(w, r.word);
            } else if (r.is_zero) {
                occurrences_zero(w, l.word);
            } else {
                occurrences_replace(w, l.word, r.word);
                occurrences_replace(w, r.word, l.word);
            }
        }
    }

    // Shortlex-minimal representative per class (words are generated in
    // shortlex order, so the first word of a class is its representative).
    std::map<int, int> rep_of_root;  // root -> word index of representative
    const int zero_root = uf.find(zero_node);
    for (int i = 0; i < static_cast<int>(words.size()); ++i) {
        int root = uf.find(i);
        if (has_zero && root == zero_root) continue;
        rep_of_root.emplace(root, i);
    }

    // Only classes reachable as products of generators form the semigroup;
    // junk classes of long words whose reductions need intermediates beyond
    // cap must not leak in.
    std::vector<int> reps;  // word indices, shortlex order (BFS in shortlex order)
    {
        std::set<int> seen_roots;
        std::deque<int> todo;
        for (const Letter& g : gens) {
            Word w;
            w += g;
            int root = uf.find(word_id.at(w));
            if ((has_zero && root == zero_root) || !seen_roots.insert(root).second) continue;
            reps.push_back(rep_of_root.at(root));
            todo.push_back(rep_of_root.at(root));
        }
        while (!todo.empty()) {
            int rep = todo.front();
            todo.pop_front();
            for (const Letter& g : gens) {
                Word w = words[static_cast<std::size_t>(rep)] + g;
                if (w.size() > cap)
                    throw std::runtime_error("presentation not closed within cap " + std::to_string(cap) +
                                             ": representative " + to_string(w) + " too long");
                int root = uf.find(word_id.at(w));
                if ((has_zero && root == zero_root) || !seen_roots.insert(root).second) continue;
                reps.push_back(rep_of_root.at(root));
                todo.push_back(rep_of_root.at(root));
            }
        }
        std::sort(reps.begin(), reps.end(), [&](int a, int b) {
            return shortlex_less(words[static_cast<std::size_t>(a)], words[static_cast<std::size_t>(b)]);
        });
    }

    FiniteMonoid m;
    std::map<int, int> root_to_elem;
    for (int rep : reps) {
        root_to_elem[uf.find(rep)] = m.size();
        m.elements.push_back(to_string(words[static_cast<std::size_t>(rep)]));
    }
    int zero_elem = -1;
    if (has_zero) {
        zero_elem = m.size();
        root_to_elem[uf.find(zero_node)] = zero_elem;
        m.elements.push_back("0");
    }
    m.zero = zero_elem;
    const int n = m.size();
    m.table.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int val;
            if (i == zero_elem || j == zero_elem) {
                val = zero_elem;
            } else {
                Word prod = words[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])] +
                            words[static_cast<std::size_t>(reps[static_cast<std::size_t>(j)])];
                if (prod.size() > cap)
                    throw std::runtime_error("presentation not closed within cap " + std::to_string(cap) +
                                             ": product " + to_string(prod) + " too long");
                int root = uf.find(word_id.at(prod));
                auto it = root_to_elem.find(root);
                if (it == root_to_elem.end())
                    throw std::runtime_error("presentation closure error on product " + to_string(prod));
                val = it->second;
            }
            m.table[static_cast<std::size_t>(i) * n + j] = val;
        }
    }
    for (const Letter& g : gens) {
        Word w;
        w += g;
        m.generators[g] = root_to_elem.at(uf.find(word_id.at(w)));
    }
    return m;
}

std::vector<std::string> validate(const FiniteMonoid& m) {
    std::vector<std::string> problems;
    const int n = m.size();
    if (static_cast<int>(m.table.size()) != n * n) {
        problems.push_back("table size mismatch");
        return problems;
    }
    for (int v : m.table)
        if (v < 0 || v >= n) {
            problems.push_back("table entry out of range");
            return problems;
        }
    for (int i = 0; i < n && problems.size() < 20; ++i)
        for (int j = 0; j < n && problems.size() < 20; ++j)
            for (int k = 0; k < n && problems.size() < 20; ++k)
                if (m.mul(m.mul(i, j), k) != m.mul(i, m.mul(j, k)))
                    problems.push_back("associativity fails at (" + m.label(i) + "," + m.label(j) + "," +
                                       m.label(k) + ")");
    if (m.identity >= 0) {
        if (m.identity >= n) problems.push_back("identity index out of range");
        for (int i = 0; m.identity < n && i < n; ++i)
            if (m.mul(m.identity, i) != i || m.mul(i, m.identity) != i)
                problems.push_back("identity law fails at " + m.label(i));
    }
    if (m.zero >= 0) {
        if (m.zero >= n) problems.push_back("zero index out of range");
        for (int i = 0; m.zero < n && i < n; ++i)
            if (m.mul(m.zero, i) != m.zero || m.mul(i, m.zero) != m.zero)
                problems.push_back("zero absorption fails at " + m.label(i));
    }
    for (const auto& [g, e] : m.generators)
        if (e < 0 || e >= n) problems.push_back("generator " + g.name + " out of range");
    return problems;
}

FiniteMonoid adjoin_identity(const FiniteMonoid& s) {
    FiniteMonoid m;
    const int n = s.size();
    m.elements.push_back("1");
    m.elements.insert(m.elements.end(), s.elements.begin(), s.elements.end());
    m.identity = 0;
    m.zero = s.zero >= 0 ? s.zero + 1 : -1;
    m.table.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    for (int i = 0; i <= n; ++i) {
        m.table[static_cast<std::size_t>(0) * (n + 1) + i] = i;
        m.table[static_cast<std::size_t>(i) * (n + 1) + 0] = i;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.table[static_cast<std::size_t>(i + 1) * (n + 1) + (j + 1)] = s.mul(i, j) + 1;
    for (const auto& [g, e] : s.generators) m.generators[g] = e + 1;
    return m;
}

namespace {

std::vector<std::shared_ptr<const FiniteMonoid>> factor_list(const FiniteMonoid& m) {
    if (!m.factors.empty()) return m.factors;
    return {std::make_shared<const FiniteMonoid>(m)};
}

}  // namespace

FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n) {
    FiniteMonoid p;
    const int nm = m.size(), nn = n.size();
    p.elements.reserve(static_cast<std::size_t>(nm) * nn);
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nn; ++j) p.elements.push_back("(" + m.label(i) + "," + n.label(j) + ")");
    auto pair_id = [nn](int i, int j) { return i * nn + j; };
    p.identity = (m.identity >= 0 && n.identity >= 0) ? pair_id(m.identity, n.identity) : -1;
    p.zero = (m.zero >= 0 && n.zero >= 0) ? pair_id(m.zero, n.zero) : -1;
    const int np = nm * nn;
    p.table.assign(static_cast<std::size_t>(np) * np, 0);
    for (int i1 = 0; i1 < nm; ++i1)
        for (int j1 = 0; j1 < nn; ++j1)
            for (int i2 = 0; i2 < nm; ++i2)
                for (int j2 = 0; j2 < nn; ++j2)
                    p.table[static_cast<std::size_t>(pair_id(i1, j1)) * np + pair_id(i2, j2)] =
                        pair_id(m.mul(i1, i2), n.mul(j1, j2));
    for (const auto& [g, e] : m.generators) {
        auto it = n.generators.find(g);
        if (it != n.generators.end()) p.generators[g] = pair_id(e, it->second);
    }
    auto fs = factor_list(m);
    auto gs = factor_list(n);
    p.factors = fs;
    p.factors.insert(p.factors.end(), gs.begin(), gs.end());
    return p;
}

FiniteMonoid opposite(const FiniteMonoid& m) {
    FiniteMonoid o = m;
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) o.table[static_cast<std::size_t>(i) * n + j] = m.mul(j, i);
    o.factors.clear();
    for (const auto& f : m.factors) o.factors.push_back(std::make_shared<const FiniteMonoid>(opposite(*f)));
    return o;
}

int eval_word(const FiniteMonoid& m, const std::map<Letter, int>& assignment, const Word& w) {
    if (w.empty()) {
        if (m.identity < 0) throw std::invalid_argument("empty word needs an identity element");
        return m.identity;
    }
    int acc = -1;
    for (const Letter& x : w.letters) {
        auto it = assignment.find(x);
        if (it == assignment.end()) throw std::invalid_argument("letter '" + x.name + "' unassigned");
        acc = acc < 0 ? it->second : m.mul(acc, it->second);
    }
    return acc;
}

int eval_generators(const FiniteMonoid& m, const Word& w) { return eval_word(m, m.generators, w); }

bool is_homomorphism(const FiniteMonoid& m, const FiniteMonoid& n, const Hom& h) {
    if (static_cast<int>(h.map.size()) != m.size()) return false;
    for (int v : h.map)
        if (v < 0 || v >= n.size()) return false;
    if (m.identity >= 0 && n.identity >= 0 && h.map[static_cast<std::size_t>(m.identity)] != n.identity)
        return false;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            if (h.map[static_cast<std::size_t>(m.mul(i, j))] !=
                n.mul(h.map[static_cast<std::size_t>(i)], h.map[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

namespace {

bool extend_morphism(const FiniteMonoid& m, const FiniteMonoid& n, MorphismKind kind, std::vector<int>& f,
                     int next) {
    const int nm = m.size(), nn = n.size();
    if (next == nm) {
        if (kind == MorphismKind::Onto || kind == MorphismKind::Iso) {
            std::vector<char> hit(static_cast<std::size_t>(nn), 0);
            for (int v : f) hit[static_cast<std::size_t>(v)] = 1;
            for (char h : hit)
                if (!h) return false;
        }
        return true;
    }
    if (f[static_cast<std::size_t>(next)] >= 0) return extend_morphism(m, n, kind, f, next + 1);
    for (int t = 0; t < nn; ++t) {
        if (kind == MorphismKind::Iso) {
            bool used = false;
            for (int i = 0; i < next && !used; ++i) used = (f[static_cast<std::size_t>(i)] == t);
            if (used) continue;
        }
        f[static_cast<std::size_t>(next)] = t;
        bool ok = true;
        // check all products lying entirely within the assigned prefix
        for (int i = 0; i <= next && ok; ++i) {
            if (f[static_cast<std::size_t>(i)] < 0) continue;
            for (int j = 0; j <= next && ok; ++j) {
                if (f[static_cast<std::size_t>(j)] < 0) continue;
                int p = m.mul(i, j);
                if (p <= next && f[static_cast<std::size_t>(p)] >= 0)
                    ok = (f[static_cast<std::size_t>(p)] ==
                          n.mul(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]));
            }
        }
        if (ok && extend_morphism(m, n, kind, f, next + 1)) return true;
        f[static_cast<std::size_t>(next)] = -1;
    }
    return false;
}

}  // namespace

std::optional<Hom> morphism_search(const FiniteMonoid& m, const FiniteMonoid& n, MorphismKind kind) {
    if (kind == MorphismKind::Iso && m.size() != n.size()) return std::nullopt;
    if (kind == MorphismKind::Onto && m.size() < n.size()) return std::nullopt;
    std::vector<int> f(static_cast<std::size_t>(m.size()), -1);
    if (m.identity >= 0 && n.identity >= 0) f[static_cast<std::size_t>(m.identity)] = n.identity;
    if (!extend_morphism(m, n, kind, f, 0)) return std::nullopt;
    Hom h{std::move(f)};
    if (!is_homomorphism(m, n, h)) return std::nullopt;  // defensive; should not happen
    return h;
}

namespace {

FiniteMonoid build_fixture(const std::string& name) {
    auto gens = [](const char* s) {
        std::vector<Letter> out;
        for (const char* p = s; *p; ++p) out.emplace_back(*p);
        return out;
    };
    auto rels = [](std::initializer_list<const char*> rs) {
        std::vector<Relation> out;
        for (const char* r : rs)
            for (auto& rel : parse_relations(r)) out.push_back(rel);
        return out;
    };
    if (name == "A") return from_presentation(gens("abc"), rels({"a^2=a", "b^2=b", "ab=ca=0", "ac=cb=c"}));
    if (name == "E") return from_presentation(gens("abc"), rels({"a^2=ab=0", "ba=ca=a", "b^2=bc=b", "c^2=cb=c"}));
    if (name == "A0") return from_presentation(gens("ab"), rels({"a^2=a", "b^2=b", "ab=0"}));
    if (name == "B0") return from_presentation(gens("efc"), rels({"e^2=e", "f^2=f", "ef=fe=0", "ec=cf=c"}));
    if (name == "Q") return from_presentation(gens("ebc"), rels({"e^2=e", "eb=b", "ce=c", "ec=be=cb=0"}));
    if (name == "L2") return from_presentation(gens("ab"), rels({"a^2=ab=a", "b^2=ba=b"}));
    if (!name.empty() && name.back() == '1') return adjoin_identity(build_fixture(name.substr(0, name.size() - 1)));
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace

FiniteMonoid fixture(const std::string& name) {
    static std::map<std::string, FiniteMonoid> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build_fixture(name)).first;
    return it->second;
}

std::string monoid_to_json(const FiniteMonoid& m) {
    nlohmann::ordered_json j;
    j["elements"] = m.elements;
    if (m.identity >= 0)
        j["identity"] = m.label(m.identity);
    else
        j["identity"] = nullptr;
    if (m.zero >= 0)
        j["zero"] = m.label(m.zero);
    else
        j["zero"] = nullptr;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(m.label(m.mul(i, k)));
        table.push_back(row);
    }
    j["table"] = table;
    return j.dump(2) + "\n";
}

FiniteMonoid monoid_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FiniteMonoid m;
    std::map<std::string, int> index;
    for (const auto& e : j.at("elements")) {
        std::string label = e.get<std::string>();
        if (!index.emplace(label, m.size()).second)
            throw std::invalid_argument("duplicate element label '" + label + "'");
        m.elements.push_back(label);
    }
    auto lookup = [&](const nlohmann::json& v) {
        if (v.is_null()) return -1;
        auto it = index.find(v.get<std::string>());
        if (it == index.end()) throw std::invalid_argument("unknown element label '" + v.get<std::string>() + "'");
        return it->second;
    };
    m.identity = lookup(j.at("identity"));
    m.zero = lookup(j.at("zero"));
    const auto& table = j.at("table");
    if (static_cast<int>(table.size()) != m.size()) throw std::invalid_argument("table row count mismatch");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != m.size()) throw std::invalid_argument("table column count mismatch");
        for (const auto& cell : row) {
            int v = lookup(cell);
            if (v < 0) throw std::invalid_argument("null table cell");
            m.table.push_back(v);
        }
    }
    return m;
}

}  // namespace wb
