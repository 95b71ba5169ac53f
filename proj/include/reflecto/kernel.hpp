#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace reflecto {

// Result of probing an integer sequence for base-k self-similarity: for each
// level e up to `depth` and each offset c < base^e, the probe reads the first
// `window` entries of the subsequence n -> values[base^e * n + c] as one
// block.  `cumulative[e]` is the number of distinct blocks seen across levels
// 0..e; for a k-automatic sequence these counts stop growing once the levels
// cover the kernel.
struct KernelProbe {
    std::uint32_t base = 2;
    std::uint32_t depth = 0;
    std::uint32_t window = 0;
    std::vector<std::size_t> cumulative;

    std::size_t distinct() const { return cumulative.back(); }
};

KernelProbe kernel_probe(std::span<const std::int64_t> values, std::uint32_t base,
                         std::uint32_t depth, std::uint32_t window);

}  // namespace reflecto
