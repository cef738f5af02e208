// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ctlspec {

// Arbitrary-precision integers and rationals. Constraint coefficients are
// kept integral (denominators cleared at construction); rationals appear in
// parsing, witness evaluation and test oracles.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

}  // namespace ctlspec
