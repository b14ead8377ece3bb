#include "tilelab/group_map.hpp"

namespace tilelab {

FreeGroupMap FreeGroupMap::identity_on(const Alphabet& a) {
    std::map<std::string, Word> images;
    for (const auto& g : a.names()) images[g] = Word::gen(g);
    return FreeGroupMap(std::move(images));
}

const Word& FreeGroupMap::image(const std::string& gen) const {
    auto it = images_.find(gen);
    if (it == images_.end()) throw bad_input("free-group map has no image for generator '" + gen + "'");
    return it->second;
}

Word FreeGroupMap::apply(const Word& w) const {
    std::vector<Letter> raw;
    for (const auto& l : w.letters()) {
        const Word& img = image(l.gen);
        if (l.exp == 1) {
            raw.insert(raw.end(), img.letters().begin(), img.letters().end());
        } else {
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
                raw.push_back(it->inverse());
        }
    }
    return Word(std::move(raw));
}

NcPoly FreeGroupMap::apply(const NcPoly& p) const {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) out.add_term(apply(w), c);
    return out;
}

FreeGroupMap FreeGroupMap::compose_after(const FreeGroupMap& g) const {
    std::map<std::string, Word> images;
    for (const auto& [gen, img] : g.images()) images[gen] = apply(img);
    return FreeGroupMap(std::move(images));
}

} // namespace tilelab
