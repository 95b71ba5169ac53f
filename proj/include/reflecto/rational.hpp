#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace reflecto {

// Exact arithmetic used by the linear-representation module.  Counting
// functions grow fast enough that fixed-width integers are not an option once
// matrix products get involved.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace reflecto
