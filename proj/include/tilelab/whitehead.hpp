#ifndef TILELAB_WHITEHEAD_HPP
#define TILELAB_WHITEHEAD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tilelab/group_map.hpp"
#include "tilelab/word.hpp"

namespace tilelab {

// Witness that eps(w) == u * target^c * u^{-1}, with eps an isomorphism from
// the free group on the source alphabet to the free group on the target
// alphabet. eps_inv is the exact inverse map; both directions are verified.
struct OrbitWitness {
    FreeGroupMap eps;
    FreeGroupMap eps_inv;
    Word u; // over the target alphabet
    int c = 1;
};

enum class OrbitStatus {
    found,   // witness returned
    absent,  // minimal levels fully explored and disjoint: proven no witness
    unknown, // node budget exhausted before the search finished
};

struct OrbitResult {
    OrbitStatus status = OrbitStatus::unknown;
    std::optional<OrbitWitness> witness;
    std::size_t nodes = 0;
};

inline constexpr std::size_t kDefaultWhiteheadBudget = 1'000'000;

// Peak reduction + minimal-level search for the Aut(F)-orbit problem, up to
// conjugacy and inversion of the target. Both alphabets must have equal rank
// >= 2; w and target are pre-minimized internally. Deterministic for a fixed
// budget: candidate moves are tie-broken by (length, letter sequence).
OrbitResult whitehead_orbit_witness(const Word& w, const Word& target,
                                    const Alphabet& source, const Alphabet& target_alpha,
                                    std::size_t budget = kDefaultWhiteheadBudget);

// Cyclic word of minimal length in the Aut(F)-orbit of w (a concrete
// representative: the lexicographically least rotation).
Word whitehead_minimal_form(const Word& w, const Alphabet& alpha);

// All Whitehead automorphisms of the second kind as explicit maps; used by
// tests to probe minimality independently and to build random orbit elements.
std::vector<FreeGroupMap> whitehead_automorphisms(const Alphabet& alpha);

} // namespace tilelab

#endif
