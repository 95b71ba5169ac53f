#pragma once

#include <cstdint>
#include <vector>

#include "reflecto/word.hpp"

namespace reflecto {

// First differences mod 2 of a binary word: delta(w) has length |w| - 1.
// A single letter maps to the empty word.
Word delta(const Word& w);

// Partial sums mod 2 starting from `initial`: the inverse of delta up to the
// choice of first letter.  delta_inverse(u, b) has length |u| + 1.
Word delta_inverse(const Word& u, Symbol initial);

// An infinite binary instruction stream: a finite preperiod followed by a
// repeated nonempty period.
class UnfoldingInstructions {
  public:
    UnfoldingInstructions(Word preperiod, Word period);

    Symbol at(std::uint64_t index0) const;

    const Word& preperiod() const { return preperiod_; }
    const Word& period() const { return period_; }

  private:
    Word preperiod_;
    Word period_;
};

// Prefix of the paperfolding sequence driven by the instruction stream:
// starting from the empty word, each step appends the next instruction and
// then the reversal of the current word with 0 and 1 exchanged.
Word paperfolding_prefix(const UnfoldingInstructions& instructions,
                         std::uint64_t length);

// Running sum mod 2 of the corresponding paperfolding sequence.
Word golay_shapiro_prefix(const UnfoldingInstructions& instructions,
                          std::uint64_t length);

// Directive integers (all at least 1) with a preperiod and repeated period.
class SturmianDirective {
  public:
    SturmianDirective(std::vector<std::uint32_t> preperiod,
                      std::vector<std::uint32_t> period);

    std::uint32_t at(std::uint64_t index0) const;

    const std::vector<std::uint32_t>& preperiod() const { return preperiod_; }
    const std::vector<std::uint32_t>& period() const { return period_; }

  private:
    std::vector<std::uint32_t> preperiod_;
    std::vector<std::uint32_t> period_;
};

// Prefix of the standard word built from the directive: s_{-1} = 1, s_0 = 0,
// and s_k = s_{k-1}^{d_k} s_{k-2}.
Word sturmian_prefix(const SturmianDirective& directive, std::uint64_t length);

// Prefix of the limit of x_0 = 01, x_{k+1} = x_k 01 x_k^R.
Word halffactor_prefix(std::uint64_t length);

}  // namespace reflecto
