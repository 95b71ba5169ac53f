#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "reflecto/word.hpp"

namespace reflecto {

// A morphism on words over {0, .., k-1}, given by the image of each letter.
class Morphism {
  public:
    Morphism() = default;
    explicit Morphism(std::vector<Word> images);

    // Convenience: Morphism({"01", "10"}) in display form.
    Morphism(std::initializer_list<std::string_view> images);

    std::uint32_t alphabet_size() const {
        return static_cast<std::uint32_t>(images_.size());
    }
    const Word& image(Symbol s) const;
    const std::vector<Word>& images() const { return images_; }

    // All images have length exactly one.
    bool is_coding() const;

    // image(seed) starts with seed and has length at least two, so iterating
    // from seed converges to an infinite fixed point.
    bool is_prolongable(Symbol seed) const;

    bool operator==(const Morphism&) const = default;

  private:
    std::vector<Word> images_;
};

Word apply_morphism(const Morphism& m, const Word& w);

// The length-`length` prefix of the fixed point obtained by iterating `m`
// from `seed`.  Iterates on a truncated prefix: since the image of a prefix
// of the fixed point is again a prefix of it, truncation is sound and keeps
// memory proportional to the requested length.
Word fixed_point_prefix(const Morphism& m, Symbol seed, std::uint64_t length);

// Letter-to-letter relabeling; an empty table means the identity.
Word apply_coding(const std::vector<Symbol>& table, const Word& w);

}  // namespace reflecto
