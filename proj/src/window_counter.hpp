#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "reflecto/word.hpp"

namespace reflecto::detail {

struct RawCounts {
    std::uint64_t rho = 0;
    std::uint64_t pal = 0;
    std::uint64_t refl = 0;
    std::uint64_t unr = 0;
    std::uint64_t r = 0;
};

// Counts distinct length-n windows of a fixed text, their palindromes,
// reflected factors and reversal classes.  Windows are deduplicated through
// a rolling fingerprint table; every fingerprint hit is confirmed against
// the text itself, so results are exact whatever the hash does.
//
// One count() call costs O(|text|) probes plus O(rho * n) confirmation work.
// The counter keeps its table between calls; it is cheap to reuse for many n
// over the same text.  Not thread-safe; use one instance per thread.
class WindowCounter {
  public:
    explicit WindowCounter(std::span<const Symbol> text);

    // Requires n <= |text|.
    RawCounts count(std::uint32_t n);

  private:
    struct Slot {
        std::uint64_t hash = 0;
        std::uint32_t pos = 0;
        std::uint32_t epoch = 0;
    };

    std::uint64_t window_hash(std::uint64_t pos, std::uint32_t n) const;
    std::uint64_t reverse_window_hash(std::uint64_t pos, std::uint32_t n) const;
    bool window_equal(std::uint64_t a, std::uint64_t b, std::uint32_t n) const;
    bool window_equal_reversed(std::uint64_t a, std::uint64_t b,
                               std::uint32_t n) const;
    bool find(std::uint64_t hash, std::uint64_t pos, std::uint32_t n,
              bool reversed) const;
    void grow();

    std::span<const Symbol> text_;
    std::vector<std::uint64_t> powers_;
    std::vector<std::uint64_t> forward_;   // prefix hashes of the text
    std::vector<std::uint64_t> backward_;  // prefix hashes of the reversed text
    std::vector<Slot> slots_;
    std::vector<std::uint32_t> firsts_;    // first position of each distinct window
    std::uint64_t mask_ = 0;
    std::uint32_t epoch_ = 0;
};

}  // namespace reflecto::detail
