#include "tilelab/whitehead.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace tilelab {
namespace {

// Letters are coded as chars: generator i -> 2i, its inverse -> 2i+1.
using CWord = std::string;

char inv(char c) { return static_cast<char>(c ^ 1); }

CWord reduce_codes(const CWord& raw) {
    CWord out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (!out.empty() && out.back() == inv(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

CWord cyclic_core(CWord w) {
    w = reduce_codes(w);
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == inv(w[hi - 1])) {
        ++lo;
        --hi;
    }
    return w.substr(lo, hi - lo);
}

CWord invert_codes(const CWord& w) {
    CWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
    return out;
}

CWord min_rotation(const CWord& w) {
    if (w.empty()) return w;
    CWord best = w;
    CWord cur = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

// Whitehead automorphism of the second kind (A, a): a in A, inv(a) not in A.
// mask holds A as a bitset over letter codes.
struct WAuto {
    char a = 0;
    std::uint32_t mask = 0;

    bool in_A(char c) const { return (mask >> c) & 1u; }

    // Image of a single letter, appended to out (not reduced). On the
    // generator g: g -> ga (g in A only), a^-1 g (g^-1 in A only), a^-1 g a
    // (both), g (neither); inverse letters map to the inverse image.
    void map_letter(char c, CWord& out) const {
        char g = static_cast<char>(c & ~1); // positive form
        if (g == (a & ~1)) {
            out.push_back(c); // sigma fixes the multiplier and its inverse
            return;
        }
        bool mg = in_A(g), mG = in_A(inv(g));
        if ((c & 1) == 0) {
            if (mG) out.push_back(inv(a));
            out.push_back(g);
            if (mg) out.push_back(a);
        } else {
            if (mg) out.push_back(inv(a));
            out.push_back(inv(g));
            if (mG) out.push_back(a);
        }
    }

    CWord apply(const CWord& w) const {
        CWord raw;
        raw.reserve(w.size() * 3);
        for (char c : w) map_letter(c, raw);
        return reduce_codes(raw);
    }

    WAuto inverse() const {
        WAuto r;
        r.a = inv(a);
        r.mask = (mask & ~(1u << a)) | (1u << inv(a));
        return r;
    }
};

// Code-level free-group endomorphism: image word per generator.
struct CodeMap {
    std::vector<CWord> gen_image; // index = generator, image over codes

    static CodeMap identity(std::size_t rank) {
        CodeMap m;
        m.gen_image.resize(rank);
        for (std::size_t i = 0; i < rank; ++i) m.gen_image[i] = CWord(1, static_cast<char>(2 * i));
        return m;
    }

    CWord apply(const CWord& w) const {
        CWord raw;
        for (char c : w) {
            const CWord& img = gen_image[static_cast<std::size_t>(c) / 2];
            if ((c & 1) == 0)
                raw += img;
            else
                raw += invert_codes(img);
        }
        return reduce_codes(raw);
    }

    // (this.compose_after(g))(w) == this(g(w))
    CodeMap compose_after(const CodeMap& g) const {
        CodeMap r;
        r.gen_image.reserve(g.gen_image.size());
        for (const auto& img : g.gen_image) r.gen_image.push_back(apply(img));
        return r;
    }
};

CodeMap from_wauto(const WAuto& s, std::size_t rank) {
    CodeMap m;
    m.gen_image.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) m.gen_image[i] = s.apply(CWord(1, static_cast<char>(2 * i)));
    return m;
}

std::vector<WAuto> all_wautos(std::size_t rank) {
    std::vector<WAuto> out;
    const std::size_t letters = 2 * rank;
    for (std::size_t ai = 0; ai < letters; ++ai) {
        char a = static_cast<char>(ai);
        std::vector<char> others;
        for (std::size_t c = 0; c < letters; ++c)
            if (c != ai && c != static_cast<std::size_t>(inv(a))) others.push_back(static_cast<char>(c));
        const std::size_t subsets = std::size_t(1) << others.size();
        for (std::size_t s = 1; s < subsets; ++s) { // s == 0 is the identity
            WAuto w;
            w.a = a;
            w.mask = 1u << a;
            for (std::size_t b = 0; b < others.size(); ++b)
                if ((s >> b) & 1) w.mask |= 1u << others[b];
            out.push_back(w);
        }
    }
    return out;
}

// All signed permutations (Whitehead automorphisms of the first kind) as
// letter tables: perm[c] = image letter of c.
std::vector<std::vector<char>> all_signed_perms(std::size_t rank) {
    std::vector<std::vector<char>> out;
    std::vector<std::size_t> p(rank);
    std::iota(p.begin(), p.end(), 0);
    do {
        for (std::size_t signs = 0; signs < (std::size_t(1) << rank); ++signs) {
            std::vector<char> table(2 * rank);
            for (std::size_t i = 0; i < rank; ++i) {
                bool flip = (signs >> i) & 1;
                table[2 * i] = static_cast<char>(2 * p[i] + (flip ? 1 : 0));
                table[2 * i + 1] = inv(table[2 * i]);
            }
            out.push_back(std::move(table));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

CWord apply_perm(const std::vector<char>& table, const CWord& w) {
    CWord out;
    out.reserve(w.size());
    for (char c : w) out.push_back(table[static_cast<std::size_t>(c)]);
    return out;
}

// Canonical representative of the class of a cyclic word modulo rotation and
// signed relabeling of generators.
CWord canonical_class(const CWord& w, const std::vector<std::vector<char>>& perms) {
    CWord best;
    bool first = true;
    for (const auto& table : perms) {
        CWord cand = min_rotation(apply_perm(table, w));
        if (first || cand < best) {
            best = cand;
            first = false;
        }
    }
    return best;
}

struct Minimized {
    CWord core;                // min-rotation representative of the minimal cyclic word
    std::vector<WAuto> chain;  // chain.back() applied last
};

// Greedy peak reduction: while some second-kind automorphism strictly
// shortens the cyclic word, apply the one with the (length, letters)-least
// image. Whitehead's lemma guarantees this reaches the orbit minimum.
Minimized minimize(const CWord& start, const std::vector<WAuto>& autos) {
    Minimized m;
    m.core = min_rotation(cyclic_core(start));
    for (;;) {
        bool improved = false;
        CWord best;
        WAuto best_auto;
        for (const auto& s : autos) {
            CWord img = min_rotation(cyclic_core(s.apply(m.core)));
            if (img.size() >= m.core.size()) continue;
            if (!improved || img.size() < best.size() ||
                (img.size() == best.size() && img < best)) {
                improved = true;
                best = img;
                best_auto = s;
            }
        }
        if (!improved) return m;
        m.core = best;
        m.chain.push_back(best_auto);
    }
}

CWord to_codes(const Word& w, const Alphabet& alpha) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < alpha.names().size(); ++i) index[alpha.names()[i]] = i;
    CWord out;
    out.reserve(w.size());
    for (const auto& l : w.letters()) {
        auto it = index.find(l.gen);
        if (it == index.end()) throw bad_input("word uses generator '" + l.gen + "' outside its alphabet");
        out.push_back(static_cast<char>(2 * it->second + (l.exp == -1 ? 1 : 0)));
    }
    return out;
}

Word from_codes(const CWord& w, const Alphabet& alpha) {
    std::vector<Letter> raw;
    raw.reserve(w.size());
    for (char c : w)
        raw.emplace_back(alpha.names()[static_cast<std::size_t>(c) / 2], (c & 1) ? -1 : 1);
    return Word(std::move(raw));
}

FreeGroupMap realize(const CodeMap& m, const Alphabet& from, const Alphabet& to) {
    std::map<std::string, Word> images;
    for (std::size_t i = 0; i < from.names().size(); ++i)
        images[from.names()[i]] = from_codes(m.gen_image[i], to);
    return FreeGroupMap(std::move(images));
}

CodeMap fold_chain(const std::vector<WAuto>& chain, std::size_t rank) {
    CodeMap m = CodeMap::identity(rank);
    for (const auto& s : chain) m = from_wauto(s, rank).compose_after(m);
    return m;
}

CodeMap fold_chain_inverse(const std::vector<WAuto>& chain, std::size_t rank) {
    CodeMap m = CodeMap::identity(rank);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        m = from_wauto(it->inverse(), rank).compose_after(m);
    return m;
}

} // namespace

Word whitehead_minimal_form(const Word& w, const Alphabet& alpha) {
    auto autos = all_wautos(alpha.rank());
    Minimized m = minimize(to_codes(w, alpha), autos);
    return from_codes(m.core, alpha);
}

std::vector<FreeGroupMap> whitehead_automorphisms(const Alphabet& alpha) {
    std::vector<FreeGroupMap> out;
    for (const auto& s : all_wautos(alpha.rank()))
        out.push_back(realize(from_wauto(s, alpha.rank()), alpha, alpha));
    return out;
}

OrbitResult whitehead_orbit_witness(const Word& w, const Word& target, const Alphabet& source,
                                    const Alphabet& target_alpha, std::size_t budget) {
    const std::size_t rank = source.rank();
    if (rank < 2) throw bad_input("whitehead search needs rank >= 2");
    if (target_alpha.rank() != rank) throw bad_input("alphabet ranks differ");
    source.require(w, "whitehead");
    target_alpha.require(target, "whitehead");

    const auto autos = all_wautos(rank);
    const auto perms = all_signed_perms(rank);

    // Identify the two alphabets positionally for the internal search; the
    // final maps translate letters back to their own alphabets.
    Minimized mw = minimize(to_codes(w, source), autos);
    Minimized mt = minimize(to_codes(target, target_alpha), autos);

    OrbitResult res;
    if (mw.core.size() != mt.core.size()) {
        res.status = OrbitStatus::absent; // orbit-minimal lengths differ
        return res;
    }

    const CWord target_plus = canonical_class(mt.core, perms);
    const CWord target_minus = canonical_class(invert_codes(mt.core), perms);

    struct Node {
        CWord rep;
        std::size_t parent;
        WAuto move;
    };
    std::vector<Node> nodes;
    std::unordered_set<CWord> visited;
    std::deque<std::size_t> frontier;

    int found_c = 0;
    std::size_t found_at = SIZE_MAX;
    bool out_of_budget = false;

    auto add_node = [&](CWord rep, std::size_t parent, WAuto move) {
        CWord canon = canonical_class(rep, perms);
        if (!visited.insert(canon).second) return;
        if (nodes.size() >= budget) {
            out_of_budget = true;
            return;
        }
        nodes.push_back(Node{std::move(rep), parent, move});
        if (found_at == SIZE_MAX) {
            if (canon == target_plus) {
                found_c = 1;
                found_at = nodes.size() - 1;
            } else if (canon == target_minus) {
                found_c = -1;
                found_at = nodes.size() - 1;
            }
        }
        frontier.push_back(nodes.size() - 1);
    };

    add_node(mw.core, SIZE_MAX, WAuto{});
    while (found_at == SIZE_MAX && !frontier.empty() && !out_of_budget) {
        std::size_t id = frontier.front();
        frontier.pop_front();
        CWord rep = nodes[id].rep;
        for (const auto& s : autos) {
            CWord img = cyclic_core(s.apply(rep));
            if (img.size() != rep.size()) continue; // minimal level only
            add_node(std::move(img), id, s);
            if (found_at != SIZE_MAX || out_of_budget) break;
        }
    }
    res.nodes = nodes.size();

    if (found_at == SIZE_MAX) {
        // The minimal level of an orbit is connected under length-preserving
        // Whitehead moves, so a completed sweep that misses the target class
        // proves the orbits are disjoint.
        res.status = out_of_budget ? OrbitStatus::unknown : OrbitStatus::absent;
        return res;
    }

    // Reassemble the witness: eps = mu_t^{-1} . pi . beta . mu_w, where beta
    // is the BFS path and pi the signed relabeling aligning the final
    // representative with the (possibly inverted) minimized target.
    std::vector<WAuto> path;
    for (std::size_t id = found_at; nodes[id].parent != SIZE_MAX; id = nodes[id].parent)
        path.push_back(nodes[id].move);
    std::reverse(path.begin(), path.end());

    const CWord tc_rep = found_c == 1 ? mt.core : invert_codes(mt.core);
    const CWord final_rep = nodes[found_at].rep;
    const std::vector<char>* matching_perm = nullptr;
    for (const auto& table : perms) {
        if (min_rotation(apply_perm(table, final_rep)) == min_rotation(tc_rep)) {
            matching_perm = &table;
            break;
        }
    }
    if (!matching_perm) throw std::logic_error("whitehead: canonical classes matched but no relabeling found");

    CodeMap eps = fold_chain(mw.chain, rank);
    eps = fold_chain(path, rank).compose_after(eps);
    CodeMap pi_map;
    pi_map.gen_image.resize(rank);
    for (std::size_t i = 0; i < rank; ++i)
        pi_map.gen_image[i] = CWord(1, (*matching_perm)[2 * i]);
    eps = pi_map.compose_after(eps);
    eps = fold_chain_inverse(mt.chain, rank).compose_after(eps);

    CodeMap eps_inv = fold_chain(mt.chain, rank);
    {
        CodeMap pi_inv;
        pi_inv.gen_image.resize(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            char img = (*matching_perm)[2 * i];
            pi_inv.gen_image[static_cast<std::size_t>(img) / 2] =
                CWord(1, static_cast<char>(2 * i + (img & 1)));
        }
        eps_inv = pi_inv.compose_after(eps_inv);
    }
    std::vector<WAuto> all_forward = mw.chain;
    all_forward.insert(all_forward.end(), path.begin(), path.end());
    eps_inv = fold_chain_inverse(all_forward, rank).compose_after(eps_inv);

    OrbitWitness witness;
    witness.eps = realize(eps, source, target_alpha);
    witness.eps_inv = realize(eps_inv, target_alpha, source);
    witness.c = found_c;

    for (const auto& name : source.names()) {
        if (witness.eps_inv.apply(witness.eps.image(name)) != Word::gen(name))
            throw std::logic_error("whitehead: eps_inv is not a left inverse of eps");
    }
    for (const auto& name : target_alpha.names()) {
        if (witness.eps.apply(witness.eps_inv.image(name)) != Word::gen(name))
            throw std::logic_error("whitehead: eps_inv is not a right inverse of eps");
    }

    Word image = witness.eps.apply(w);
    Word tc = found_c == 1 ? target : invert(target);
    std::optional<Word> u = conjugacy_witness(tc, image);
    if (!u) throw std::logic_error("whitehead: witness image is not conjugate to target");
    witness.u = *u;

    res.status = OrbitStatus::found;
    res.witness = std::move(witness);
    return res;
}

} // namespace tilelab
