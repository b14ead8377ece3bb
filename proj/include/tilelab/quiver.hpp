#ifndef TILELAB_QUIVER_HPP
#define TILELAB_QUIVER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tilelab/ncpoly.hpp"
#include "tilelab/tiling.hpp"
#include "tilelab/word.hpp"

namespace tilelab {

struct Quiver {
    struct Arrow {
        std::string id;
        std::string src;
        std::string tgt;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    const Arrow* find_arrow(const std::string& id) const;
    const Arrow& arrow(const std::string& id) const;
    bool has_vertex(const std::string& id) const;
};

// Signed formal sum of cyclic arrow paths. Paths are written in composition
// order: the rightmost arrow is traversed first.
struct Potential {
    struct Term {
        int sign = 1; // +1 or -1
        std::vector<std::string> arrows;
    };
    std::vector<Term> terms;
};

void validate_quiver(const Quiver& q);
// Checks each term is a closed composable cycle over the given arrow universe.
void validate_potential(const Quiver& q, const Potential& w);

// Dual quiver of a brane tiling: one vertex per face, one arrow per edge
// (oriented so the minimal cycles run clockwise around white vertices), and
// one potential term per tiling vertex with sign + for white. Rejects
// degenerate tilings containing a vertex of degree < 2.
std::pair<Quiver, Potential> dual_quiver(const RotationSystem& t);

// Sum over occurrences of `arrow` of (sign * term rotated to start at the
// occurrence, with it deleted); zero if the arrow is absent.
NcPoly cyclic_derivative(const Potential& w, const std::string& arrow);

// True iff every term contains exactly one arrow of E.
bool validate_cut(const Potential& w, const std::set<std::string>& cut);

struct CutData {
    std::set<std::string> cut;  // E
    std::set<std::string> tree; // T, inside Q \ E
};

// Result of contracting the tree T: `quiver` has a single vertex and the
// arrows of Q minus (E union T); `potential` lives on Q minus T, so its terms
// still contain the cut arrows.
struct ContractedQP {
    Quiver quiver;
    Potential potential;
    std::vector<std::string> cut; // sorted
};

ContractedQP contract_tree(const Quiver& q, const Potential& w, const CutData& cd);

// Canonical form for equality up to cyclic rotation of terms: every term is
// rotated to its lexicographically least form, then terms are sorted.
Potential canonical_potential(const Potential& w);
bool potentials_equal(const Potential& a, const Potential& b);

// Serialization: `vertex <id>`, `arrow <id>: <src> -> <tgt>`, `term <+|-> : <arrows>`.
std::string to_string(const Quiver& q, const Potential& w);
std::pair<Quiver, Potential> parse_quiver(const std::string& text);

} // namespace tilelab

#endif
