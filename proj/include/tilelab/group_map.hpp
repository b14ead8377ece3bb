#ifndef TILELAB_GROUP_MAP_HPP
#define TILELAB_GROUP_MAP_HPP

#include <map>
#include <string>

#include "tilelab/ncpoly.hpp"
#include "tilelab/word.hpp"

namespace tilelab {

// Homomorphism of free groups given by generator images over a target
// alphabet; extends multiplicatively to words and linearly to polynomials.
class FreeGroupMap {
public:
    FreeGroupMap() = default;
    explicit FreeGroupMap(std::map<std::string, Word> images) : images_(std::move(images)) {}

    static FreeGroupMap identity_on(const Alphabet& a);

    const std::map<std::string, Word>& images() const { return images_; }
    const Word& image(const std::string& gen) const;
    void set_image(const std::string& gen, Word w) { images_[gen] = std::move(w); }
    bool has_image(const std::string& gen) const { return images_.count(gen) != 0; }

    Word apply(const Word& w) const;
    NcPoly apply(const NcPoly& p) const;

    // (f.compose_after(g))(w) == f(g(w))
    FreeGroupMap compose_after(const FreeGroupMap& g) const;

    friend bool operator==(const FreeGroupMap&, const FreeGroupMap&) = default;

private:
    std::map<std::string, Word> images_;
};

} // namespace tilelab

#endif
