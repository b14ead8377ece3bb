#include "tilelab/sigma.hpp"

#include <algorithm>
#include <deque>

namespace tilelab {

NcMatrix nc_matrix_mul(const NcMatrix& a, const NcMatrix& b) {
    std::size_t n = a.size();
    NcMatrix out(n, std::vector<NcPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) out[i][j] = nc_add(out[i][j], nc_mul(a[i][k], b[k][j]));
        }
    return out;
}

MatrixUnitsIso::MatrixUnitsIso(const Quiver& q, CutData cd) : q_(q), cd_(std::move(cd)) {
    validate_quiver(q_);
    for (const auto& id : cd_.tree) {
        if (!q_.find_arrow(id)) throw bad_input("tree arrow '" + id + "' not in quiver");
        if (cd_.cut.count(id)) throw bad_input("tree arrow '" + id + "' lies in the cut");
    }
    if (cd_.tree.size() + 1 != q_.vertices.size())
        throw bad_input("tree arrow count " + std::to_string(cd_.tree.size()) + " does not match " +
                        std::to_string(q_.vertices.size()) + " vertices");

    // Tree paths by BFS over the undirected tree, one source at a time.
    const std::size_t r = q_.vertices.size();
    std::vector<std::vector<std::pair<std::size_t, Letter>>> adj(r); // (neighbor, step letter)
    for (const auto& id : cd_.tree) {
        const auto& a = q_.arrow(id);
        std::size_t s = vertex_index(a.src), t = vertex_index(a.tgt);
        adj[s].emplace_back(t, Letter(id, 1));
        adj[t].emplace_back(s, Letter(id, -1));
    }
    tree_paths_.assign(r, std::vector<Word>(r));
    for (std::size_t from = 0; from < r; ++from) {
        std::vector<char> seen(r, 0);
        std::vector<std::vector<Letter>> steps(r); // display order, rightmost first
        std::deque<std::size_t> queue{from};
        seen[from] = 1;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (const auto& [w, step] : adj[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                steps[w] = steps[v];
                steps[w].insert(steps[w].begin(), step); // later steps go to the left
                queue.push_back(w);
            }
        }
        for (std::size_t to = 0; to < r; ++to) {
            if (!seen[to])
                throw bad_input("tree does not span: no path from '" + q_.vertices[from] + "' to '" +
                                q_.vertices[to] + "'");
            tree_paths_[from][to] = Word(steps[to]);
        }
    }
}

std::size_t MatrixUnitsIso::vertex_index(const std::string& v) const {
    auto it = std::find(q_.vertices.begin(), q_.vertices.end(), v);
    if (it == q_.vertices.end()) throw bad_input("no quiver vertex '" + v + "'");
    return static_cast<std::size_t>(it - q_.vertices.begin());
}

std::pair<std::string, std::string> MatrixUnitsIso::letter_ends(const Letter& l) const {
    const auto& a = q_.arrow(l.gen);
    if (cd_.cut.count(l.gen)) throw bad_input("cut arrow '" + l.gen + "' used in a localized path");
    return l.exp == 1 ? std::make_pair(a.src, a.tgt) : std::make_pair(a.tgt, a.src);
}

std::string MatrixUnitsIso::path_target(const Word& path, const std::string& src_vertex) const {
    std::string cur = src_vertex;
    for (auto it = path.letters().rbegin(); it != path.letters().rend(); ++it) {
        auto [start, end] = letter_ends(*it);
        if (start != cur)
            throw bad_input("path not composable: letter '" + it->gen + "' starts at '" + start +
                            "', expected '" + cur + "'");
        cur = end;
    }
    return cur;
}

MatrixUnitsIso::Unit MatrixUnitsIso::sigma_path(const Word& path, const std::string& src_vertex) const {
    Unit u;
    u.col = vertex_index(src_vertex);
    u.row = vertex_index(path_target(path, src_vertex));
    std::vector<Letter> kept;
    for (const auto& l : path.letters())
        if (!cd_.tree.count(l.gen)) kept.push_back(l);
    u.entry = Word(std::move(kept));
    return u;
}

NcMatrix MatrixUnitsIso::sigma(const NcPoly& p, const std::string& src_vertex) const {
    NcMatrix out(rank(), std::vector<NcPoly>(rank()));
    for (const auto& [w, c] : p.terms()) {
        Unit u = sigma_path(w, src_vertex);
        out[u.row][u.col].add_term(u.entry, c);
    }
    return out;
}

Word MatrixUnitsIso::sigma_inv(std::size_t row, std::size_t col, const Word& entry) const {
    if (row >= rank() || col >= rank()) throw bad_input("matrix unit position out of range");
    // Interleave tree connectors: E_{i,j}(x_m ... x_1) pulls back to
    // t_{end(x_m), i} x_m t_{end(x_{m-1}), start(x_m)} ... x_1 t_{j, start(x_1)}.
    std::vector<Letter> raw;
    std::string expect = q_.vertices[row]; // building from the left
    for (const auto& l : entry.letters()) {
        auto [start, end] = letter_ends(l);
        const Word& conn = tree_paths_[vertex_index(end)][vertex_index(expect)];
        raw.insert(raw.end(), conn.letters().begin(), conn.letters().end());
        raw.push_back(l);
        expect = start;
    }
    const Word& last = tree_paths_[col][vertex_index(expect)];
    raw.insert(raw.end(), last.letters().begin(), last.letters().end());
    return Word(std::move(raw));
}

Word MatrixUnitsIso::tree_path(const std::string& from, const std::string& to) const {
    return tree_paths_[vertex_index(from)][vertex_index(to)];
}

} // namespace tilelab
