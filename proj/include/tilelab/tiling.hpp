#ifndef TILELAB_TILING_HPP
#define TILELAB_TILING_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tilelab/word.hpp"

namespace tilelab {

// Bipartite combinatorial map: cyclic dart orders at vertices (read
// counterclockwise) plus the dart pairing into edges.
struct RotationSystem {
    struct Vertex {
        std::string id;
        bool white = false;
        std::vector<std::string> darts; // ccw cyclic order
    };
    struct Edge {
        std::string id;
        std::string dart_a;
        std::string dart_b;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::optional<int> declared_genus;

    const Vertex* find_vertex(const std::string& id) const;
    const Edge* find_edge(const std::string& id) const;
};

struct Diagnostic {
    std::string code; // e.g. "bipartiteness", "connectivity", "dart-consistency"
    std::string message;
};

struct Diagnostics {
    std::vector<Diagnostic> items;
    bool ok() const { return items.empty(); }
    std::string summary() const;
};

Diagnostics validate(const RotationSystem& t);
void require_valid(const RotationSystem& t);

struct Face {
    std::vector<std::string> darts; // cyclic orbit of the face permutation
};

// Orbits of the face permutation dart -> successor (at the far endpoint) of
// the partner dart. Requires a valid map.
std::vector<Face> faces(const RotationSystem& t);

// g = (2 - V + E - F) / 2; cross-checked against declared_genus if present.
int genus(const RotationSystem& t);

struct Dimer {
    std::set<std::string> edges;
};

// Perfect matching via augmenting paths; throws bad_input("no dimer") when
// none exists.
Dimer find_dimer(const RotationSystem& t);
bool is_dimer(const RotationSystem& t, const Dimer& d);
// All perfect matchings, in a deterministic order.
std::vector<Dimer> enumerate_dimers(const RotationSystem& t, std::size_t cap = 10000);

struct SpanningTree {
    std::set<std::string> tree_edges;       // F: spans all vertices, contains the seed
    std::set<std::string> complement_edges; // H = F minus the seed dimer
};

// Extends the dimer to a maximal tree: BFS from the lowest-id vertex, edges
// taken in id order. Deterministic.
SpanningTree extend_to_spanning_tree(const RotationSystem& t, const Dimer& seed);
// All spanning trees containing the seed, deterministic order, capped.
std::vector<SpanningTree> enumerate_spanning_trees(const RotationSystem& t, const Dimer& seed,
                                                   std::size_t cap);

// Text format: `genus: g` header, `vertex <id> <black|white> : <darts ccw>`,
// `edge <id> : <dart> <dart>`. Parse errors carry 1-based line numbers.
RotationSystem parse_tiling(const std::string& text);
RotationSystem load_tiling(const std::string& path);
std::string to_string(const RotationSystem& t);

} // namespace tilelab

#endif
