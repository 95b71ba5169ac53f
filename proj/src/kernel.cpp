#include "reflecto/kernel.hpp"

#include <set>

#include "reflecto/errors.hpp"

namespace reflecto {

KernelProbe kernel_probe(std::span<const std::int64_t> values, std::uint32_t base,
                         std::uint32_t depth, std::uint32_t window) {
    if (base < 2) throw SpecError("probe base must be at least 2");
    if (window == 0) throw SpecError("probe window must be positive");

    std::uint64_t step = 1;
    for (std::uint32_t e = 0; e < depth; ++e) {
        step *= base;
        if (step > (1ull << 40)) throw SpecError("probe depth too large");
    }
    if (values.size() < step * window) {
        throw BudgetError("need at least base^depth * window values for the probe");
    }

    KernelProbe probe;
    probe.base = base;
    probe.depth = depth;
    probe.window = window;
    probe.cumulative.reserve(depth + 1);

    std::set<std::vector<std::int64_t>> seen;
    std::uint64_t level_step = 1;
    std::vector<std::int64_t> block(window);
    for (std::uint32_t e = 0; e <= depth; ++e) {
        for (std::uint64_t offset = 0; offset < level_step; ++offset) {
            for (std::uint32_t t = 0; t < window; ++t) {
                block[t] = values[offset + level_step * t];
            }
            seen.insert(block);
        }
        probe.cumulative.push_back(seen.size());
        level_step *= base;
    }
    return probe;
}

}  // namespace reflecto
