#include "wb/word.hpp"

#include <algorithm>
#include <cctype>

namespace wb {

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters < b.letters;
}

Word parse_word(const std::string& text) {
    Word out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        char c = text[i];
        if (c < 'a' || c > 'z') throw ParseError("expected letter, got '" + std::string(1, c) + "'", i);
        std::string name(1, c);
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) name += text[i++];
        std::size_t count = 1;
        if (i < n && text[i] == '^') {
            std::size_t expo_pos = i;
            ++i;
            if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected exponent digits after '^'", expo_pos);
            count = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                count = count * 10 + static_cast<std::size_t>(text[i] - '0');
                if (count > 100000) throw ParseError("exponent too large", expo_pos);
                ++i;
            }
            if (count == 0) throw ParseError("exponent must be at least 1", expo_pos);
        }
        Letter x(name);
        for (std::size_t k = 0; k < count; ++k) out.letters.push_back(x);
    }
    return out;
}

std::string to_string(const Word& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        std::size_t run = j - i;
        out += w[i].name;
        if (run >= 2) out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

WordStats word_stats(const Word& w) {
    std::map<Letter, std::size_t> counts;
    for (const Letter& x : w.letters) ++counts[x];
    WordStats st;
    for (const auto& [x, c] : counts) {
        st.content.insert(x);
        if (c == 1)
            st.simple.insert(x);
        else
            st.multiple.insert(x);
    }
    return st;
}

Word BlockDecomposition::reassemble() const {
    Word out = blocks.at(0);
    for (std::size_t i = 0; i < skeleton.size(); ++i) {
        out += skeleton[i];
        out += blocks.at(i + 1);
    }
    return out;
}

BlockDecomposition block_decompose(const Word& w) {
    WordStats st = word_stats(w);
    BlockDecomposition d;
    d.blocks.emplace_back();
    for (const Letter& x : w.letters) {
        if (st.simple.count(x)) {
            d.skeleton.push_back(x);
            d.blocks.emplace_back();
        } else {
            d.blocks.back() += x;
        }
    }
    return d;
}

WordClass classify_word(const Word& w) {
    BlockDecomposition d = block_decompose(w);
    WordClass c{true, true};
    // pair -> number of blocks containing both letters
    std::map<std::pair<Letter, Letter>, int> shared;
    for (const Word& b : d.blocks) {
        LetterSet content = word_stats(b).content;
        if (content.size() > 1) c.block_simple = false;
        for (auto it = content.begin(); it != content.end(); ++it)
            for (auto jt = std::next(it); jt != content.end(); ++jt)
                if (++shared[{*it, *jt}] > 1) c.xy_limited = false;
    }
    return c;
}

Word ini2(const Word& w) {
    std::map<Letter, int> seen;
    Word out;
    for (const Letter& x : w.letters)
        if (++seen[x] <= 2) out += x;
    return out;
}

Word reverse(const Word& w) {
    Word out = w;
    std::reverse(out.letters.begin(), out.letters.end());
    return out;
}

bool is_factor(const Word& u, const Word& w) {
    if (u.empty()) return true;
    if (u.size() > w.size()) return false;
    auto it = std::search(w.letters.begin(), w.letters.end(), u.letters.begin(), u.letters.end());
    return it != w.letters.end();
}

Word apply_substitution(const Word& w, const std::map<Letter, Word>& theta) {
    Word out;
    for (const Letter& x : w.letters) {
        auto it = theta.find(x);
        if (it == theta.end())
            throw std::invalid_argument("substitution does not cover letter '" + x.name + "'");
        if (it->second.empty())
            throw std::invalid_argument("substitution image of '" + x.name + "' is empty");
        out += it->second;
    }
    return out;
}

}  // namespace wb
