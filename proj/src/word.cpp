#include "tilelab/word.hpp"

#include <algorithm>
#include <sstream>

namespace tilelab {

std::vector<Letter> Word::free_reduce(std::vector<Letter> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (auto& l : raw) {
        if (l.exp != 1 && l.exp != -1) throw bad_input("letter exponent must be +1 or -1");
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
            out.pop_back();
        } else {
            out.push_back(std::move(l));
        }
    }
    return out;
}

Word reduce(const std::vector<Letter>& raw) { return Word(raw); }

Word multiply(const Word& a, const Word& b) {
    std::vector<Letter> raw = a.letters();
    raw.insert(raw.end(), b.letters().begin(), b.letters().end());
    return Word(std::move(raw));
}

Word invert(const Word& w) {
    std::vector<Letter> raw;
    raw.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) raw.push_back(it->inverse());
    return Word(std::move(raw));
}

Word power(const Word& w, int n) {
    Word base = n < 0 ? invert(w) : w;
    Word acc;
    for (int i = 0; i < std::abs(n); ++i) acc = multiply(acc, base);
    return acc;
}

Word rotate_left(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    std::vector<Letter> raw(w.letters().begin() + static_cast<std::ptrdiff_t>(k), w.letters().end());
    raw.insert(raw.end(), w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(k));
    return Word(std::move(raw));
}

CyclicReduction cyclic_reduce(const Word& w) {
    std::vector<Letter> core = w.letters();
    std::vector<Letter> conj;
    while (core.size() >= 2 && core.front().gen == core.back().gen &&
           core.front().exp == -core.back().exp) {
        conj.push_back(core.front());
        core.erase(core.begin());
        core.pop_back();
    }
    return CyclicReduction{Word(std::move(core)), Word(std::move(conj))};
}

std::optional<Word> conjugacy_witness(const Word& w1, const Word& w2) {
    CyclicReduction r1 = cyclic_reduce(w1);
    CyclicReduction r2 = cyclic_reduce(w2);
    if (r1.core.size() != r2.core.size()) return std::nullopt;
    // w1 = c1 * core1 * c1^{-1}. If core2 = rotate_left(core1, k) then with
    // s = first k letters of core1 we have core1 = s^{-1} * core2 * s, hence
    // u = c2 * s * c1^{-1} conjugates w1 onto w2.
    for (std::size_t k = 0; k < std::max<std::size_t>(1, r1.core.size()); ++k) {
        if (rotate_left(r1.core, k) == r2.core) {
            std::vector<Letter> s_raw(r1.core.letters().begin(),
                                      r1.core.letters().begin() + static_cast<std::ptrdiff_t>(k));
            Word u = multiply(multiply(r2.conjugator, invert(Word(std::move(s_raw)))),
                              invert(r1.conjugator));
            if (multiply(multiply(u, w1), invert(u)) != w2)
                throw std::logic_error("conjugacy witness failed verification");
            return u;
        }
    }
    return std::nullopt;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto& n : names_) {
        if (n.empty() || n == "1") throw bad_input("invalid generator name: '" + n + "'");
        if (n.find_first_of(" \t\n^*+-|:,") != std::string::npos)
            throw bad_input("generator name contains reserved character: '" + n + "'");
        if (!set_.insert(n).second) throw bad_input("duplicate generator name: '" + n + "'");
    }
}

bool Alphabet::contains(const Word& w) const {
    return std::all_of(w.letters().begin(), w.letters().end(),
                       [&](const Letter& l) { return contains(l.gen); });
}

void Alphabet::require(const Word& w, const char* where) const {
    for (const auto& l : w.letters())
        if (!contains(l.gen))
            throw bad_input(std::string(where) + ": generator '" + l.gen + "' not in alphabet");
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w.letters()[i].gen;
        if (w.letters()[i].exp == -1) out += "^-1";
    }
    return out;
}

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<Letter> raw;
    std::string tok;
    while (in >> tok) {
        if (tok == "1" && raw.empty()) continue;
        int exp = 1;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            std::string suffix = tok.substr(pos + 1);
            if (suffix != "-1" && suffix != "1") throw bad_input("bad exponent in token '" + tok + "'");
            if (suffix == "-1") exp = -1;
            tok = tok.substr(0, pos);
        }
        if (tok.empty()) throw bad_input("empty generator token");
        raw.emplace_back(tok, exp);
    }
    return Word(std::move(raw));
}

} // namespace tilelab
