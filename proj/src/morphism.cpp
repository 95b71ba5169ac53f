#include "reflecto/morphism.hpp"

#include <string>

#include "reflecto/errors.hpp"

namespace reflecto {

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
    if (images_.empty()) throw SpecError("morphism needs at least one image");
    for (const Word& im : images_) {
        if (im.max_symbol() >= static_cast<int>(images_.size()))
            throw SpecError("morphism image '" + im.text() +
                            "' uses a letter outside the alphabet of size " +
                            std::to_string(images_.size()));
    }
}

Morphism::Morphism(std::initializer_list<std::string_view> images) {
    std::vector<Word> parsed;
    parsed.reserve(images.size());
    for (std::string_view s : images) parsed.push_back(Word::from_text(s));
    *this = Morphism(std::move(parsed));
}

const Word& Morphism::image(Symbol s) const {
    if (s >= images_.size())
        throw SpecError("letter " + std::to_string(s) +
                        " outside morphism alphabet");
    return images_[s];
}

bool Morphism::is_coding() const {
    for (const Word& im : images_)
        if (im.size() != 1) return false;
    return true;
}

bool Morphism::is_prolongable(Symbol seed) const {
    if (seed >= images_.size()) return false;
    const Word& im = images_[seed];
    return im.size() >= 2 && im[0] == seed;
}

Word apply_morphism(const Morphism& m, const Word& w) {
    std::uint64_t total = 0;
    for (Symbol s : w) total += m.image(s).size();
    Word out;
    out.reserve(total);
    for (Symbol s : w) out.append(m.image(s));
    return out;
}

Word fixed_point_prefix(const Morphism& m, Symbol seed, std::uint64_t length) {
    if (!m.is_prolongable(seed))
        throw SpecError("morphism is not prolongable at letter " +
                        std::to_string(seed));
    if (length == 0) return Word();
    Word w = m.image(seed);
    while (w.size() < length) {
        std::uint64_t before = w.size();
        w = apply_morphism(m, w);
        w.truncate(length);
        if (w.size() <= before)
            throw SpecError("fixed point iteration stalled (erasing images)");
    }
    w.truncate(length);
    return w;
}

Word apply_coding(const std::vector<Symbol>& table, const Word& w) {
    if (table.empty()) return w;
    Word out;
    out.reserve(w.size());
    for (Symbol s : w) {
        if (s >= table.size())
            throw SpecError("coding table has no entry for letter " +
                            std::to_string(s));
        out.push_back(table[s]);
    }
    return out;
}

}  // namespace reflecto
