#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace reflecto {

// Deterministic finite automaton with output, fed the base-k digits of n
// most significant first.  n = 0 is represented by the empty digit string,
// so its value is the output of the initial state.
struct Dfao {
    std::uint32_t base = 2;
    std::uint32_t initial = 0;
    std::vector<std::uint32_t> outputs;                  // one per state
    std::vector<std::vector<std::uint32_t>> transitions; // [state][digit]

    std::uint32_t states() const {
        return static_cast<std::uint32_t>(outputs.size());
    }

    // Throws SpecError unless the table is total and all targets in range.
    void validate() const;

    bool operator==(const Dfao&) const = default;
};

std::uint32_t dfao_term(const Dfao& machine, std::uint64_t n);

// Output after reading an explicit digit string (may carry leading zeros).
std::uint32_t dfao_read(const Dfao& machine,
                        const std::vector<std::uint32_t>& digits);

// Text format, one machine per file:
//
//   base 2 states 3 initial 0
//   0 1 0:0 1:1
//   ...
//
// Each state line gives "state output digit:target ..." with every digit of
// the base appearing exactly once.
Dfao parse_dfao(std::istream& in);
std::string serialize_dfao(const Dfao& machine);

// Base-k digits of n, most significant first; empty for n = 0.
std::vector<std::uint32_t> base_digits(std::uint64_t n, std::uint32_t base);

}  // namespace reflecto
