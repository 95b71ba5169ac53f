#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "reflecto/rational.hpp"

namespace reflecto {

// A linear representation (row, mats, col) over the rationals: the value on a
// digit string d1..dl is row * mats[d1] * ... * mats[dl] * col.  Terms of the
// represented sequence are obtained by feeding in base-k digits, most
// significant first, with the empty string standing for zero.
struct LinearRepresentation {
    std::uint32_t base = 2;
    std::uint32_t dim = 0;
    std::vector<Rational> row;                // 1 x dim
    std::vector<std::vector<Rational>> mats;  // base matrices, dim x dim row-major
    std::vector<Rational> col;                // dim x 1

    void validate() const;

    bool operator==(const LinearRepresentation&) const = default;
};

Rational linrep_eval_digits(const LinearRepresentation& rep,
                            std::span<const std::uint32_t> digits);

// Value at n, using the canonical digit expansion of n.
Rational linrep_eval(const LinearRepresentation& rep, std::uint64_t n);

// Whether the two representations compute the same value on every digit
// string (not just canonical expansions).  Checking all strings shorter than
// the sum of the dimensions is sufficient, and that is what this does.
bool linrep_equal(const LinearRepresentation& a, const LinearRepresentation& b);

LinearRepresentation parse_linrep(std::istream& in);
std::string serialize_linrep(const LinearRepresentation& rep);

// Rank-9 representation of the reflection complexity r(n) of the Thue-Morse
// sequence, base 2.
LinearRepresentation thue_morse_r_rep();

// Rank-4 representation of n -> rho(n+1), the shifted factor complexity of
// the Thue-Morse sequence, base 2.
LinearRepresentation thue_morse_rho_shift_rep();

}  // namespace reflecto
