#ifndef TILELAB_NCPOLY_HPP
#define TILELAB_NCPOLY_HPP

#include <map>
#include <string>

#include <boost/rational.hpp>

#include "tilelab/word.hpp"

namespace tilelab {

using Rational = boost::rational<long long>;

// Finite rational linear combination of freely reduced words: an element of
// the group algebra of the free group on the working alphabet. Zero
// coefficients are never stored.
class NcPoly {
public:
    NcPoly() = default;
    explicit NcPoly(const Word& w, Rational c = Rational(1)) {
        if (c != 0) terms_[w] = c;
    }

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    NcPoly& add_term(const Word& w, Rational c);

    friend bool operator==(const NcPoly&, const NcPoly&) = default;

private:
    std::map<Word, Rational> terms_;
};

NcPoly nc_add(const NcPoly& p, const NcPoly& q);
NcPoly nc_sub(const NcPoly& p, const NcPoly& q);
NcPoly nc_scale(const NcPoly& p, const Rational& c);
NcPoly nc_mul(const NcPoly& p, const NcPoly& q);
NcPoly nc_mul(const Word& w, const NcPoly& q);
NcPoly nc_mul(const NcPoly& p, const Word& w);

// Terms joined by ` + `, each `q/r * word`; zero prints as `0`.
std::string to_string(const NcPoly& p);
NcPoly parse_ncpoly(const std::string& text);

} // namespace tilelab

#endif
