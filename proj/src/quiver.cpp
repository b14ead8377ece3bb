#include "tilelab/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace tilelab {

const Quiver::Arrow* Quiver::find_arrow(const std::string& id) const {
    for (const auto& a : arrows)
        if (a.id == id) return &a;
    return nullptr;
}

const Quiver::Arrow& Quiver::arrow(const std::string& id) const {
    const Arrow* a = find_arrow(id);
    if (!a) throw bad_input("no arrow '" + id + "'");
    return *a;
}

bool Quiver::has_vertex(const std::string& id) const {
    return std::find(vertices.begin(), vertices.end(), id) != vertices.end();
}

void validate_quiver(const Quiver& q) {
    std::set<std::string> vs(q.vertices.begin(), q.vertices.end());
    if (vs.size() != q.vertices.size()) throw bad_input("duplicate quiver vertex");
    std::set<std::string> as;
    for (const auto& a : q.arrows) {
        if (!as.insert(a.id).second) throw bad_input("duplicate arrow id '" + a.id + "'");
        if (!vs.count(a.src) || !vs.count(a.tgt))
            throw bad_input("arrow '" + a.id + "' has missing endpoint");
    }
}

void validate_potential(const Quiver& q, const Potential& w) {
    for (const auto& term : w.terms) {
        if (term.sign != 1 && term.sign != -1) throw bad_input("potential term sign must be +1/-1");
        if (term.arrows.empty()) throw bad_input("empty potential term");
        // rightmost arrow applies first; check target chains and closure
        for (std::size_t i = 0; i < term.arrows.size(); ++i) {
            const auto& cur = q.arrow(term.arrows[term.arrows.size() - 1 - i]);
            const auto& nxt = q.arrow(term.arrows[term.arrows.size() - 1 - (i + 1) % term.arrows.size()]);
            if (cur.tgt != nxt.src) throw bad_input("potential term not composable at arrow '" + cur.id + "'");
        }
    }
}

std::pair<Quiver, Potential> dual_quiver(const RotationSystem& t) {
    require_valid(t);
    for (const auto& v : t.vertices)
        if (v.darts.size() < 2)
            throw bad_input("degenerate tiling: vertex '" + v.id + "' has degree " +
                            std::to_string(v.darts.size()) + " < 2");

    std::vector<Face> fs = faces(t);
    std::map<std::string, std::size_t> face_of; // dart -> face index
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (const auto& d : fs[i].darts) face_of[d] = i;

    Quiver q;
    for (std::size_t i = 0; i < fs.size(); ++i) q.vertices.push_back(std::to_string(i + 1));

    // dart -> (edge id, is at a white vertex)
    std::map<std::string, std::string> white_dart, black_dart; // edge id -> dart
    for (const auto& e : t.edges) {
        bool a_white = false;
        for (const auto& v : t.vertices)
            if (std::find(v.darts.begin(), v.darts.end(), e.dart_a) != v.darts.end()) a_white = v.white;
        white_dart[e.id] = a_white ? e.dart_a : e.dart_b;
        black_dart[e.id] = a_white ? e.dart_b : e.dart_a;
    }

    // The arrow dual to an edge runs from the face traced through the black
    // dart to the face traced through the white dart; this is the clockwise
    // orientation around white vertices. Pinned by the genus-2 example.
    for (const auto& e : t.edges) {
        Quiver::Arrow a;
        a.id = e.id;
        a.src = q.vertices[face_of.at(black_dart[e.id])];
        a.tgt = q.vertices[face_of.at(white_dart[e.id])];
        q.arrows.push_back(std::move(a));
    }
    std::sort(q.arrows.begin(), q.arrows.end(), [](const auto& x, const auto& y) { return x.id < y.id; });

    // One term per tiling vertex: dual arrows in rotation order, written
    // left-to-right for white vertices and right-to-left for black ones, so
    // that the cycle is traversed clockwise around white and anticlockwise
    // around black under right-to-left path composition.
    std::map<std::string, std::string> edge_of_dart;
    for (const auto& e : t.edges) {
        edge_of_dart[e.dart_a] = e.id;
        edge_of_dart[e.dart_b] = e.id;
    }
    Potential w;
    for (const auto& v : t.vertices) {
        Potential::Term term;
        term.sign = v.white ? 1 : -1;
        for (const auto& d : v.darts) term.arrows.push_back(edge_of_dart.at(d));
        if (!v.white) std::reverse(term.arrows.begin(), term.arrows.end());
        w.terms.push_back(std::move(term));
    }
    validate_potential(q, w);
    return {std::move(q), std::move(w)};
}

NcPoly cyclic_derivative(const Potential& w, const std::string& arrow) {
    NcPoly out;
    for (const auto& term : w.terms) {
        for (std::size_t i = 0; i < term.arrows.size(); ++i) {
            if (term.arrows[i] != arrow) continue;
            // rotate the occurrence to the front, then delete it
            std::vector<Letter> raw;
            for (std::size_t k = 1; k < term.arrows.size(); ++k)
                raw.emplace_back(term.arrows[(i + k) % term.arrows.size()], 1);
            out.add_term(Word(std::move(raw)), Rational(term.sign));
        }
    }
    return out;
}

bool validate_cut(const Potential& w, const std::set<std::string>& cut) {
    for (const auto& term : w.terms) {
        int hits = 0;
        for (const auto& a : term.arrows)
            if (cut.count(a)) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

ContractedQP contract_tree(const Quiver& q, const Potential& w, const CutData& cd) {
    validate_quiver(q);
    validate_potential(q, w);
    for (const auto& id : cd.cut)
        if (!q.find_arrow(id)) throw bad_input("cut arrow '" + id + "' not in quiver");
    for (const auto& id : cd.tree) {
        if (!q.find_arrow(id)) throw bad_input("tree arrow '" + id + "' not in quiver");
        if (cd.cut.count(id)) throw bad_input("tree arrow '" + id + "' lies in the cut");
    }
    if (!validate_cut(w, cd.cut)) throw bad_input("cut is not degree-1 homogeneous for the potential");

    // T must be a spanning tree of the underlying graph of Q \ E.
    std::map<std::string, std::size_t> vix;
    for (std::size_t i = 0; i < q.vertices.size(); ++i) vix[q.vertices[i]] = i;
    if (cd.tree.size() != q.vertices.size() - 1)
        throw bad_input("tree has " + std::to_string(cd.tree.size()) + " arrows, expected " +
                        std::to_string(q.vertices.size() - 1));
    {
        std::vector<std::size_t> parent(q.vertices.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& id : cd.tree) {
            const auto& a = q.arrow(id);
            auto ra = find(vix[a.src]), rb = find(vix[a.tgt]);
            if (ra == rb) throw bad_input("tree arrows contain a cycle at '" + id + "'");
            parent[ra] = rb;
        }
    }

    ContractedQP out;
    out.quiver.vertices.push_back("0");
    for (const auto& a : q.arrows)
        if (!cd.cut.count(a.id) && !cd.tree.count(a.id))
            out.quiver.arrows.push_back(Quiver::Arrow{a.id, "0", "0"});
    out.cut.assign(cd.cut.begin(), cd.cut.end());

    for (const auto& term : w.terms) {
        Potential::Term t2;
        t2.sign = term.sign;
        for (const auto& a : term.arrows)
            if (!cd.tree.count(a)) t2.arrows.push_back(a);
        if (t2.arrows.empty())
            throw bad_input("potential term vanished entirely under tree contraction");
        out.potential.terms.push_back(std::move(t2));
    }
    if (!validate_cut(out.potential, cd.cut))
        throw std::logic_error("cut stopped being a cut after contraction");
    return out;
}

Potential canonical_potential(const Potential& w) {
    Potential out = w;
    for (auto& term : out.terms) {
        std::vector<std::string> best = term.arrows;
        std::vector<std::string> cur = term.arrows;
        for (std::size_t i = 1; i < term.arrows.size(); ++i) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        term.arrows = best;
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
        if (a.sign != b.sign) return a.sign > b.sign;
        return a.arrows < b.arrows;
    });
    return out;
}

bool potentials_equal(const Potential& a, const Potential& b) {
    Potential ca = canonical_potential(a);
    Potential cb = canonical_potential(b);
    if (ca.terms.size() != cb.terms.size()) return false;
    for (std::size_t i = 0; i < ca.terms.size(); ++i)
        if (ca.terms[i].sign != cb.terms[i].sign || ca.terms[i].arrows != cb.terms[i].arrows) return false;
    return true;
}

std::string to_string(const Quiver& q, const Potential& w) {
    std::ostringstream out;
    for (const auto& v : q.vertices) out << "vertex " << v << "\n";
    for (const auto& a : q.arrows) out << "arrow " << a.id << ": " << a.src << " -> " << a.tgt << "\n";
    for (const auto& t : w.terms) {
        out << "term " << (t.sign > 0 ? '+' : '-') << " :";
        for (const auto& a : t.arrows) out << ' ' << a;
        out << "\n";
    }
    return out.str();
}

std::pair<Quiver, Potential> parse_quiver(const std::string& text) {
    Quiver q;
    Potential w;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto err = [&](const std::string& msg) {
        throw bad_input("quiver parse error at line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        if (kw == "vertex") {
            std::string id;
            if (!(ls >> id)) err("expected vertex id");
            q.vertices.push_back(id);
        } else if (kw == "arrow") {
            std::string id, src, arrow_tok, tgt;
            if (!(ls >> id >> src >> arrow_tok >> tgt) || arrow_tok != "->") err("expected 'arrow <id>: <src> -> <tgt>'");
            if (id.empty() || id.back() != ':') err("expected ':' after arrow id");
            id.pop_back();
            q.arrows.push_back(Quiver::Arrow{id, src, tgt});
        } else if (kw == "term") {
            std::string sign, colon;
            if (!(ls >> sign >> colon) || colon != ":" || (sign != "+" && sign != "-")) err("expected 'term <+|-> : <arrows>'");
            Potential::Term t;
            t.sign = sign == "+" ? 1 : -1;
            std::string a;
            while (ls >> a) t.arrows.push_back(a);
            if (t.arrows.empty()) err("empty term");
            w.terms.push_back(std::move(t));
        } else {
            err("unknown keyword '" + kw + "'");
        }
    }
    validate_quiver(q);
    validate_potential(q, w);
    return {std::move(q), std::move(w)};
}

} // namespace tilelab
