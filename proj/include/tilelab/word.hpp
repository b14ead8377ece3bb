#ifndef TILELAB_WORD_HPP
#define TILELAB_WORD_HPP

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tilelab {

struct bad_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A single letter g^{+1} or g^{-1} of a free-group word.
struct Letter {
    std::string gen;
    int exp = 1; // +1 or -1

    Letter() = default;
    Letter(std::string g, int e) : gen(std::move(g)), exp(e) {}
    Letter inverse() const { return Letter(gen, -exp); }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter& a, const Letter& b) {
        if (auto c = a.gen <=> b.gen; c != 0) return c;
        return a.exp <=> b.exp;
    }
};

// Freely reduced word. The empty word is the identity. Reduction happens at
// construction; instances are immutable by convention after that.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> raw) : letters_(free_reduce(std::move(raw))) {}
    static Word gen(const std::string& name, int exp = 1) {
        return Word(std::vector<Letter>{Letter(name, exp)});
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const Word&, const Word&) = default;
    // Length-lexicographic order; used as the canonical term order everywhere.
    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;

    static std::vector<Letter> free_reduce(std::vector<Letter> raw);
};

Word reduce(const std::vector<Letter>& raw);
Word multiply(const Word& a, const Word& b);
Word invert(const Word& w);
Word power(const Word& w, int n);
Word rotate_left(const Word& w, std::size_t k); // cyclic rotation of a cyclically reduced word

// w = conjugator * core * conjugator^{-1} with core cyclically reduced.
struct CyclicReduction {
    Word core;
    Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

// A word u with  u * w1 * u^{-1} == w2, if the two are conjugate.
// Always verified by substitution before returning.
std::optional<Word> conjugacy_witness(const Word& w1, const Word& w2);

// Generator universe used for input validation at module boundaries.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    const std::vector<std::string>& names() const { return names_; }
    bool contains(const std::string& gen) const { return set_.count(gen) != 0; }
    bool contains(const Word& w) const;
    void require(const Word& w, const char* where) const;
    std::size_t rank() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::set<std::string> set_;
};

// Token format: whitespace-separated `g` / `g^-1`; the empty word prints as `1`.
std::string to_string(const Word& w);
Word parse_word(const std::string& text);

} // namespace tilelab

#endif
