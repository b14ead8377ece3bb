#include "tilelab/tiling.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace tilelab {
namespace {

struct DartIndex {
    // dart -> (vertex index, position in rotation)
    std::map<std::string, std::pair<std::size_t, std::size_t>> at_vertex;
    // dart -> partner dart
    std::map<std::string, std::string> partner;
    // dart -> edge id
    std::map<std::string, std::string> edge_of;
};

DartIndex index_darts(const RotationSystem& t) {
    DartIndex ix;
    for (std::size_t vi = 0; vi < t.vertices.size(); ++vi)
        for (std::size_t p = 0; p < t.vertices[vi].darts.size(); ++p)
            ix.at_vertex[t.vertices[vi].darts[p]] = {vi, p};
    for (const auto& e : t.edges) {
        ix.partner[e.dart_a] = e.dart_b;
        ix.partner[e.dart_b] = e.dart_a;
        ix.edge_of[e.dart_a] = e.id;
        ix.edge_of[e.dart_b] = e.id;
    }
    return ix;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::map<std::string, std::size_t> vertex_index(const RotationSystem& t) {
    std::map<std::string, std::size_t> ix;
    for (std::size_t i = 0; i < t.vertices.size(); ++i) ix[t.vertices[i].id] = i;
    return ix;
}

// Endpoints of an edge as vertex indices, via its darts.
std::pair<std::size_t, std::size_t> edge_ends(const RotationSystem::Edge& e, const DartIndex& ix) {
    return {ix.at_vertex.at(e.dart_a).first, ix.at_vertex.at(e.dart_b).first};
}

} // namespace

const RotationSystem::Vertex* RotationSystem::find_vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

const RotationSystem::Edge* RotationSystem::find_edge(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

std::string Diagnostics::summary() const {
    std::string out;
    for (const auto& d : items) out += d.code + ": " + d.message + "\n";
    return out;
}

Diagnostics validate(const RotationSystem& t) {
    Diagnostics diag;
    auto fail = [&](const std::string& code, const std::string& msg) {
        diag.items.push_back(Diagnostic{code, msg});
    };

    std::map<std::string, int> dart_vertex_count;
    std::map<std::string, int> dart_edge_count;
    std::set<std::string> vertex_ids;
    for (const auto& v : t.vertices) {
        if (!vertex_ids.insert(v.id).second) fail("dart-consistency", "duplicate vertex id '" + v.id + "'");
        for (const auto& d : v.darts) ++dart_vertex_count[d];
    }
    std::set<std::string> edge_ids;
    for (const auto& e : t.edges) {
        if (!edge_ids.insert(e.id).second) fail("dart-consistency", "duplicate edge id '" + e.id + "'");
        if (e.dart_a == e.dart_b) fail("dart-consistency", "edge '" + e.id + "' repeats dart '" + e.dart_a + "'");
        ++dart_edge_count[e.dart_a];
        ++dart_edge_count[e.dart_b];
    }
    for (const auto& [d, c] : dart_vertex_count)
        if (c != 1) fail("dart-consistency", "dart '" + d + "' appears at " + std::to_string(c) + " vertex slots");
    for (const auto& [d, c] : dart_edge_count)
        if (c != 1) fail("dart-consistency", "dart '" + d + "' appears in " + std::to_string(c) + " edges");
    for (const auto& [d, c] : dart_vertex_count)
        if (!dart_edge_count.count(d)) fail("dart-consistency", "dart '" + d + "' has no edge");
    for (const auto& [d, c] : dart_edge_count)
        if (!dart_vertex_count.count(d)) fail("dart-consistency", "dart '" + d + "' has no vertex");
    if (!diag.ok()) return diag; // structure unreliable past this point

    auto ix = index_darts(t);
    auto vix = vertex_index(t);
    for (const auto& e : t.edges) {
        auto [a, b] = edge_ends(e, ix);
        if (t.vertices[a].white == t.vertices[b].white)
            fail("bipartiteness", "edge '" + e.id + "' joins two " +
                                      (t.vertices[a].white ? std::string("white") : std::string("black")) +
                                      " vertices");
    }

    if (!t.vertices.empty()) {
        UnionFind uf(t.vertices.size());
        for (const auto& e : t.edges) {
            auto [a, b] = edge_ends(e, ix);
            uf.unite(a, b);
        }
        std::size_t root = uf.find(0);
        for (std::size_t i = 1; i < t.vertices.size(); ++i)
            if (uf.find(i) != root) {
                fail("connectivity", "vertex '" + t.vertices[i].id + "' unreachable from '" + t.vertices[0].id + "'");
                break;
            }
    }
    (void)vix;
    return diag;
}

void require_valid(const RotationSystem& t) {
    Diagnostics d = validate(t);
    if (!d.ok()) throw bad_input("invalid tiling:\n" + d.summary());
}

std::vector<Face> faces(const RotationSystem& t) {
    require_valid(t);
    auto ix = index_darts(t);
    // next(d) = rotation successor, at the far endpoint, of the partner dart
    auto next = [&](const std::string& d) {
        const std::string& p = ix.partner.at(d);
        auto [vi, pos] = ix.at_vertex.at(p);
        const auto& darts = t.vertices[vi].darts;
        return darts[(pos + 1) % darts.size()];
    };
    std::set<std::string> seen;
    std::vector<Face> out;
    for (const auto& v : t.vertices) {
        for (const auto& d : v.darts) {
            if (seen.count(d)) continue;
            Face f;
            std::string cur = d;
            do {
                f.darts.push_back(cur);
                seen.insert(cur);
                cur = next(cur);
            } while (cur != d);
            out.push_back(std::move(f));
        }
    }
    return out;
}

int genus(const RotationSystem& t) {
    auto fs = faces(t); // validates
    long long v = static_cast<long long>(t.vertices.size());
    long long e = static_cast<long long>(t.edges.size());
    long long f = static_cast<long long>(fs.size());
    long long num = 2 - v + e - f;
    if (num % 2 != 0) throw bad_input("odd Euler numerator: 2 - V + E - F = " + std::to_string(num));
    if (num < 0) throw bad_input("negative genus from Euler count");
    int g = static_cast<int>(num / 2);
    if (t.declared_genus && *t.declared_genus != g)
        throw bad_input("declared genus " + std::to_string(*t.declared_genus) +
                        " does not match Euler count " + std::to_string(g));
    return g;
}

bool is_dimer(const RotationSystem& t, const Dimer& d) {
    auto ix = index_darts(t);
    std::map<std::size_t, int> hits;
    for (const auto& id : d.edges) {
        const auto* e = t.find_edge(id);
        if (!e) return false;
        auto [a, b] = edge_ends(*e, ix);
        ++hits[a];
        ++hits[b];
    }
    if (hits.size() != t.vertices.size()) return false;
    return std::all_of(hits.begin(), hits.end(), [](const auto& kv) { return kv.second == 1; });
}

Dimer find_dimer(const RotationSystem& t) {
    require_valid(t);
    auto ix = index_darts(t);
    std::vector<std::size_t> whites, blacks;
    std::map<std::size_t, std::size_t> side; // vertex index -> index within its side
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        if (t.vertices[i].white) {
            side[i] = whites.size();
            whites.push_back(i);
        } else {
            side[i] = blacks.size();
            blacks.push_back(i);
        }
    }
    if (whites.size() != blacks.size())
        throw bad_input("no dimer: " + std::to_string(whites.size()) + " white vs " +
                        std::to_string(blacks.size()) + " black vertices");

    // adj[w] = (black side-index, edge id), in edge id order for determinism
    std::vector<std::vector<std::pair<std::size_t, std::string>>> adj(whites.size());
    for (const auto& e : t.edges) {
        auto [a, b] = edge_ends(e, ix);
        std::size_t w = t.vertices[a].white ? a : b;
        std::size_t u = t.vertices[a].white ? b : a;
        adj[side[w]].emplace_back(side[u], e.id);
    }
    for (auto& v : adj)
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.second < y.second; });

    std::vector<std::ptrdiff_t> match_black(blacks.size(), -1);
    std::vector<std::string> match_edge(blacks.size());
    std::vector<char> used;
    std::function<bool(std::size_t)> augment = [&](std::size_t w) {
        for (const auto& [u, eid] : adj[w]) {
            if (used[u]) continue;
            used[u] = 1;
            if (match_black[u] < 0 || augment(static_cast<std::size_t>(match_black[u]))) {
                match_black[u] = static_cast<std::ptrdiff_t>(w);
                match_edge[u] = eid;
                return true;
            }
        }
        return false;
    };
    for (std::size_t w = 0; w < whites.size(); ++w) {
        used.assign(blacks.size(), 0);
        if (!augment(w))
            throw bad_input("no dimer: vertex '" + t.vertices[whites[w]].id + "' cannot be matched");
    }
    Dimer d;
    for (const auto& e : match_edge) d.edges.insert(e);
    return d;
}

std::vector<Dimer> enumerate_dimers(const RotationSystem& t, std::size_t cap) {
    require_valid(t);
    auto ix = index_darts(t);
    std::vector<std::size_t> whites;
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
        if (t.vertices[i].white) whites.push_back(i);

    std::vector<std::vector<std::pair<std::size_t, std::string>>> adj(whites.size());
    for (const auto& e : t.edges) {
        auto [a, b] = edge_ends(e, ix);
        std::size_t w = t.vertices[a].white ? a : b;
        std::size_t u = t.vertices[a].white ? b : a;
        for (std::size_t wi = 0; wi < whites.size(); ++wi)
            if (whites[wi] == w) adj[wi].emplace_back(u, e.id);
    }
    for (auto& v : adj)
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.second < y.second; });

    std::vector<Dimer> out;
    std::set<std::size_t> used_black;
    std::vector<std::string> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t wi) {
        if (out.size() >= cap) return;
        if (wi == whites.size()) {
            if (used_black.size() == t.vertices.size() - whites.size()) {
                Dimer d;
                d.edges.insert(chosen.begin(), chosen.end());
                out.push_back(std::move(d));
            }
            return;
        }
        for (const auto& [u, eid] : adj[wi]) {
            if (used_black.count(u)) continue;
            used_black.insert(u);
            chosen.push_back(eid);
            rec(wi + 1);
            chosen.pop_back();
            used_black.erase(u);
        }
    };
    rec(0);
    return out;
}

SpanningTree extend_to_spanning_tree(const RotationSystem& t, const Dimer& seed) {
    require_valid(t);
    if (!is_dimer(t, seed)) throw bad_input("seed is not a dimer");
    auto ix = index_darts(t);
    UnionFind uf(t.vertices.size());

    SpanningTree out;
    for (const auto& id : seed.edges) {
        const auto* e = t.find_edge(id);
        auto [a, b] = edge_ends(*e, ix);
        uf.unite(a, b);
        out.tree_edges.insert(id);
    }
    std::vector<const RotationSystem::Edge*> rest;
    for (const auto& e : t.edges)
        if (!seed.edges.count(e.id)) rest.push_back(&e);
    std::sort(rest.begin(), rest.end(), [](auto* x, auto* y) { return x->id < y->id; });
    for (const auto* e : rest) {
        auto [a, b] = edge_ends(*e, ix);
        if (uf.unite(a, b)) {
            out.tree_edges.insert(e->id);
            out.complement_edges.insert(e->id);
        }
    }
    if (out.tree_edges.size() != t.vertices.size() - 1)
        throw std::logic_error("spanning tree construction failed"); // cannot happen on a connected map
    return out;
}

std::vector<SpanningTree> enumerate_spanning_trees(const RotationSystem& t, const Dimer& seed,
                                                   std::size_t cap) {
    require_valid(t);
    if (!is_dimer(t, seed)) throw bad_input("seed is not a dimer");
    auto ix = index_darts(t);
    std::vector<const RotationSystem::Edge*> rest;
    for (const auto& e : t.edges)
        if (!seed.edges.count(e.id)) rest.push_back(&e);
    std::sort(rest.begin(), rest.end(), [](auto* x, auto* y) { return x->id < y->id; });

    const std::size_t need = t.vertices.size() - 1 - seed.edges.size();
    std::vector<SpanningTree> out;
    std::vector<std::string> chosen;
    std::function<void(std::size_t, UnionFind)> rec = [&](std::size_t i, UnionFind uf) {
        if (out.size() >= cap) return;
        if (chosen.size() == need) {
            SpanningTree st;
            st.tree_edges = seed.edges;
            for (const auto& id : chosen) {
                st.tree_edges.insert(id);
                st.complement_edges.insert(id);
            }
            out.push_back(std::move(st));
            return;
        }
        if (i == rest.size()) return;
        auto [a, b] = edge_ends(*rest[i], ix);
        UnionFind with = uf;
        if (with.unite(a, b)) {
            chosen.push_back(rest[i]->id);
            rec(i + 1, with);
            chosen.pop_back();
        }
        rec(i + 1, uf);
    };
    UnionFind uf0(t.vertices.size());
    for (const auto& id : seed.edges) {
        auto [a, b] = edge_ends(*t.find_edge(id), ix);
        uf0.unite(a, b);
    }
    rec(0, uf0);
    return out;
}

RotationSystem parse_tiling(const std::string& text) {
    RotationSystem t;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::set<std::string> seen_darts;
    auto err = [&](const std::string& msg) {
        throw bad_input("tiling parse error at line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        if (kw == "genus:") {
            int g;
            if (!(ls >> g) || g < 0) err("expected nonnegative genus");
            t.declared_genus = g;
        } else if (kw == "vertex") {
            RotationSystem::Vertex v;
            std::string color, colon;
            if (!(ls >> v.id >> color >> colon) || colon != ":") err("expected 'vertex <id> <black|white> : <darts>'");
            if (color == "white")
                v.white = true;
            else if (color == "black")
                v.white = false;
            else
                err("vertex color must be black or white, got '" + color + "'");
            std::string d;
            while (ls >> d) {
                if (!seen_darts.insert(d).second) err("duplicate dart '" + d + "'");
                v.darts.push_back(d);
            }
            if (v.darts.empty()) err("vertex '" + v.id + "' has no darts");
            t.vertices.push_back(std::move(v));
        } else if (kw == "edge") {
            RotationSystem::Edge e;
            std::string colon;
            if (!(ls >> e.id >> colon >> e.dart_a >> e.dart_b) || colon != ":") err("expected 'edge <id> : <dart> <dart>'");
            std::string extra;
            if (ls >> extra) err("trailing token '" + extra + "'");
            t.edges.push_back(std::move(e));
        } else {
            err("unknown keyword '" + kw + "'");
        }
    }
    return t;
}

RotationSystem load_tiling(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bad_input("cannot open tiling file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tiling(buf.str());
}

std::string to_string(const RotationSystem& t) {
    std::ostringstream out;
    if (t.declared_genus) out << "genus: " << *t.declared_genus << "\n";
    for (const auto& v : t.vertices) {
        out << "vertex " << v.id << ' ' << (v.white ? "white" : "black") << " :";
        for (const auto& d : v.darts) out << ' ' << d;
        out << "\n";
    }
    for (const auto& e : t.edges) out << "edge " << e.id << " : " << e.dart_a << ' ' << e.dart_b << "\n";
    return out.str();
}

} // namespace tilelab
