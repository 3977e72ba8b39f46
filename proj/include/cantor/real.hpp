#pragma once

// High-precision floating point for valuations, logarithms and dimensions.
// 50 decimal digits comfortably covers the 1e-14 relative targets.

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cantor/rational.hpp"

namespace cantor {

using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& x);
Real to_real(const BigInt& x);

// Full-precision rendering, for counterexample dumps and reproducible JSON.
std::string to_string(const Real& x, int digits = 40);

}  // namespace cantor
