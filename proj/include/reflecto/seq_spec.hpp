#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "reflecto/dfao.hpp"
#include "reflecto/morphism.hpp"
#include "reflecto/sequences.hpp"
#include "reflecto/word.hpp"

namespace reflecto {

// How much of a sequence to materialize.  `stability` asks computations to
// re-run on a prefix `stability` times longer and compare, to detect counts
// that were cut short by the window; 1 disables the re-run.
struct PrefixBudget {
    std::uint64_t length = 4096;
    std::uint32_t stability = 2;
};

struct BuiltinSpec {
    std::string name;
    bool operator==(const BuiltinSpec&) const = default;
};

struct MorphicSpec {
    Morphism morphism;
    Symbol seed = 0;
    std::vector<Symbol> coding;  // empty = identity
    bool operator==(const MorphicSpec&) const = default;
};

struct PeriodicSpec {
    Word preperiod;
    Word period;  // nonempty
    bool operator==(const PeriodicSpec&) const = default;
};

struct PaperfoldingSpec {
    Word preperiod;
    Word period;
    bool operator==(const PaperfoldingSpec&) const = default;
};

struct GolayShapiroSpec {
    Word preperiod;
    Word period;
    bool operator==(const GolayShapiroSpec&) const = default;
};

struct SturmianSpec {
    std::vector<std::uint32_t> preperiod;
    std::vector<std::uint32_t> period;
    bool operator==(const SturmianSpec&) const = default;
};

struct RoteSpec {
    std::vector<std::uint32_t> preperiod;
    std::vector<std::uint32_t> period;
    Symbol initial = 0;
    bool operator==(const RoteSpec&) const = default;
};

struct HalfFactorSpec {
    bool operator==(const HalfFactorSpec&) const = default;
};

struct AutomaticSpec {
    Dfao machine;  // term n (1-based) is the machine's value at n - 1
    bool operator==(const AutomaticSpec&) const = default;
};

using SequenceSpec =
    std::variant<BuiltinSpec, MorphicSpec, PeriodicSpec, PaperfoldingSpec,
                 GolayShapiroSpec, SturmianSpec, RoteSpec, HalfFactorSpec,
                 AutomaticSpec>;

// The length-`length` prefix x(1) .. x(length).
Word prefix(const SequenceSpec& spec, std::uint64_t length);

// Throws SpecError for structurally invalid descriptions.
void validate(const SequenceSpec& spec);

const std::vector<std::string>& builtin_names();

// Resolves a builtin name to its concrete description.
SequenceSpec builtin_spec(const std::string& name);

SequenceSpec spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json spec_to_json(const SequenceSpec& spec);

}  // namespace reflecto
