#ifndef TILELAB_SIGMA_HPP
#define TILELAB_SIGMA_HPP

#include <string>
#include <vector>

#include "tilelab/ncpoly.hpp"
#include "tilelab/quiver.hpp"

namespace tilelab {

using NcMatrix = std::vector<std::vector<NcPoly>>;

NcMatrix nc_matrix_mul(const NcMatrix& a, const NcMatrix& b);

// The isomorphism between the localized path algebra of Q \ E and r x r
// matrices over the localized one-vertex algebra, for a fixed cut E and
// maximal tree T: constant paths map to diagonal units, tree arrows to
// identity entries, and the remaining arrows a: i -> j to E_{j,i}(a).
class MatrixUnitsIso {
public:
    MatrixUnitsIso(const Quiver& q, CutData cd);

    std::size_t rank() const { return q_.vertices.size(); }
    std::size_t vertex_index(const std::string& v) const;

    struct Unit {
        std::size_t row = 0;
        std::size_t col = 0;
        Word entry; // over the non-tree, non-cut arrows
    };

    // Image of a single localized path. The path is a word in non-cut arrows,
    // rightmost letter first, starting at src_vertex; composability is
    // checked and violations throw.
    Unit sigma_path(const Word& path, const std::string& src_vertex) const;

    // Linear extension; constant terms sit at src_vertex.
    NcMatrix sigma(const NcPoly& p, const std::string& src_vertex) const;

    // Preimage of E_{row,col}(entry): the tree-connector interleaving of the
    // entry's letters, a reduced path from vertex col to vertex row.
    Word sigma_inv(std::size_t row, std::size_t col, const Word& entry) const;

    // Unique reduced tree path from one vertex to another.
    Word tree_path(const std::string& from, const std::string& to) const;

    // Endpoints of a localized path word starting at src (for test plumbing).
    std::string path_target(const Word& path, const std::string& src_vertex) const;

private:
    Quiver q_;
    CutData cd_;
    std::vector<std::vector<Word>> tree_paths_; // [from][to]

    std::pair<std::string, std::string> letter_ends(const Letter& l) const; // (start, end)
};

} // namespace tilelab

#endif
