#include "tilelab/ncpoly.hpp"

#include <sstream>

namespace tilelab {

NcPoly& NcPoly::add_term(const Word& w, Rational c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

NcPoly nc_add(const NcPoly& p, const NcPoly& q) {
    NcPoly out = p;
    for (const auto& [w, c] : q.terms()) out.add_term(w, c);
    return out;
}

NcPoly nc_sub(const NcPoly& p, const NcPoly& q) {
    NcPoly out = p;
    for (const auto& [w, c] : q.terms()) out.add_term(w, -c);
    return out;
}

NcPoly nc_scale(const NcPoly& p, const Rational& c) {
    NcPoly out;
    if (c == 0) return out;
    for (const auto& [w, k] : p.terms()) out.add_term(w, k * c);
    return out;
}

NcPoly nc_mul(const NcPoly& p, const NcPoly& q) {
    NcPoly out;
    for (const auto& [w1, c1] : p.terms())
        for (const auto& [w2, c2] : q.terms()) out.add_term(multiply(w1, w2), c1 * c2);
    return out;
}

NcPoly nc_mul(const Word& w, const NcPoly& q) { return nc_mul(NcPoly(w), q); }
NcPoly nc_mul(const NcPoly& p, const Word& w) { return nc_mul(p, NcPoly(w)); }

std::string to_string(const NcPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        if (!first) out << " + ";
        out << c.numerator() << "/" << c.denominator() << " * " << to_string(w);
        first = false;
    }
    return out.str();
}

NcPoly parse_ncpoly(const std::string& text) {
    NcPoly out;
    if (text == "0") return out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string chunk = text.substr(pos, next == std::string::npos ? next : next - pos);
        std::size_t star = chunk.find(" * ");
        if (star == std::string::npos) throw bad_input("ncpoly term missing ' * ': '" + chunk + "'");
        std::string coeff = chunk.substr(0, star);
        std::size_t slash = coeff.find('/');
        if (slash == std::string::npos) throw bad_input("ncpoly coefficient missing '/': '" + coeff + "'");
        long long num = std::stoll(coeff.substr(0, slash));
        long long den = std::stoll(coeff.substr(slash + 1));
        out.add_term(parse_word(chunk.substr(star + 3)), Rational(num, den));
        pos = next == std::string::npos ? text.size() : next + 3;
    }
    return out;
}

} // namespace tilelab
