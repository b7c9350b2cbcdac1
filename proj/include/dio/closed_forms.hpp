#pragma once

#include <string>

#include "dio/bigcount.hpp"

namespace dio {

/// Constant-time evaluators.  All of them evaluate an integer polynomial in
/// arbitrary precision and assert that the final division is exact; a nonzero
/// remainder throws InternalError because it would mean the formula text was
/// mistranscribed.

enum class Formula { EvenMain, OddMain, EvenReindexed, OddReindexed, Floyd, MagicConstant };

std::string to_string(Formula f);

struct ClosedFormResult {
  long long l = 0;
  BigCount count;
  Formula formula = Formula::EvenMain;
};

/// Count for the uniform 4-equation system at even l:
/// (l+2)(l+4)(l(l+5)(l(l+4)+12)+72) / 576.  Throws OddInput on odd l.
BigCount closed_count_even(long long l);

/// Count for the uniform 4-equation system at odd l:
/// (l+1)(l+3)(l(l+5)(l(l+6)+17)+72) / 576.  Throws EvenInput on even l.
BigCount closed_count_odd(long long l);

/// The even-l counts reindexed by m = 1, 2, 3, ... over l = 0, 2, 4, ...:
/// m(m+1)(3+2m+m^2+m^3+2m^4) / 18, equal to closed_count_even(2m-2).
/// Requires m >= 1.
BigCount closed_count_even_reindexed(long long m);

/// The odd-l counts reindexed by m = 2, 3, 4, ... over l = 1, 3, 5, ...:
/// m(m-1)(3-2m+m^2-m^3+2m^4) / 18, equal to closed_count_odd(2m-3).
/// Requires m >= 2.
BigCount closed_count_odd_reindexed(long long m);

/// Count for the uniform 3-equation system: (l+2)(l^2+4l+8) / 16 for even l
/// and 0 for odd l (odd l admits no solution, so 0 is the value, not an
/// error).
BigCount floyd_count(long long l);

/// n(1+n^2) / 2 for n >= 1: the common line sum of a normal magic square of
/// order n, also the n-th row sum of Floyd's triangle.  Equals
/// floyd_count(2n-2).
BigCount magic_constant(long long n);

/// n(n+1)/2.  The multiplicity weight attached to an admissible a34 value in
/// the strip-counter geometry.
BigCount triangle_number(long long n);

/// Parity dispatch: closed_count_even for even l, closed_count_odd for odd l.
BigCount closed_count(long long l);

ClosedFormResult evaluate_closed_form(Formula f, long long l);

}  // namespace dio
