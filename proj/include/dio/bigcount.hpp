#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "dio/errors.hpp"

namespace dio {

/// Arbitrary-precision integer used for every count.  Counts never wrap or
/// truncate; intermediate polynomial values are kept exact as well.
using BigCount = boost::multiprecision::cpp_int;

/// Quotient of an exact division.  Throws InternalError on a nonzero
/// remainder: the closed forms divide evenly by construction, so a remainder
/// means the formula was transcribed wrongly.
inline BigCount exact_div(const BigCount& numerator, long long denominator) {
  BigCount q, r;
  boost::multiprecision::divide_qr(numerator, BigCount(denominator), q, r);
  if (r != 0) {
    throw InternalError("non-exact division: " + numerator.str() + " / " +
                        std::to_string(denominator));
  }
  return q;
}

}  // namespace dio
