#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reflecto/complexity.hpp"
#include "reflecto/seq_spec.hpp"
#include "reflecto/word.hpp"

namespace reflecto {

// A sequence the tool knows by name: how to generate it, how much prefix the
// checks should request by default, and the structural facts the check
// registry relies on.
struct CatalogEntry {
    std::string name;
    std::string summary;
    std::function<Word(std::uint64_t)> generate;  // prefix of a given length
    std::optional<SequenceSpec> spec;  // absent for closure-only constructions
    PrefixBudget default_budget;
    bool eventually_periodic = false;
    bool uniformly_recurrent = false;
};

const std::vector<CatalogEntry>& catalog();

// Entry with the given name, or nullptr.
const CatalogEntry* find_catalog_entry(std::string_view name);

// Convenience: generate the default-budget profile of a catalog entry.
ComplexityProfile catalog_profile(const CatalogEntry& entry, std::uint32_t n_max);

}  // namespace reflecto
