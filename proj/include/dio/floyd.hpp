#pragma once

#include <array>
#include <vector>

#include "dio/bigcount.hpp"

namespace dio {

/// Counter for the 3-equation system.  Here a triple of reduced right-hand
/// sides determines its off-diagonal solution uniquely (no multiplicities),
/// so counting solutions means counting admissible triples.

struct FloydTriple {
  long long l11 = 0;
  long long l22 = 0;
  long long l33 = 0;

  friend bool operator==(const FloydTriple&, const FloydTriple&) = default;
};

struct FloydOffDiagonal {
  long long a12 = 0;
  long long a13 = 0;
  long long a23 = 0;

  friend bool operator==(const FloydOffDiagonal&, const FloydOffDiagonal&) = default;
};

struct FloydItem {
  FloydTriple triple;
  FloydOffDiagonal alpha;

  friend bool operator==(const FloydItem&, const FloydItem&) = default;
};

/// True iff the triple admits a nonnegative off-diagonal solution:
/// |l22 - l11| <= l33 <= l11 + l22 together with an even total (an odd total
/// would force half-integer entries, so the parity obstruction is part of the
/// predicate).  Fields must be nonnegative.
bool floyd_exists(const FloydTriple& t);

/// The unique off-diagonal solution 2*a_ij = l_ii + l_jj - l_kk.  Throws
/// NoSolution when floyd_exists(t) is false.
FloydOffDiagonal floyd_solution(const FloydTriple& t);

/// Count for even l assembled from the per-residue case sums (the l = 0 and
/// l = 2 (mod 4) branches are kept separate on purpose, so each can be
/// checked against the closed form).  Must equal floyd_count(l).  Throws
/// OddInput on odd l; floyd_count handles odd l directly as 0.
BigCount floyd_count_cases(long long l);

/// All admissible triples in lexicographic (l11, l22, l33) order with their
/// unique off-diagonal solutions.  Empty for odd l.
std::vector<FloydItem> floyd_enumerate(long long l);

// Row sums of Floyd's triangle (OEIS A006003), kept as constants so the
// regression check needs no lookup.  floyd_count(2n-2) reproduces these.
inline constexpr std::array<long long, 20> floyd_triangle_row_sums = {
    1,    5,    15,   34,   65,   111,  175,  260,  369,  505,
    671,  870,  1105, 1379, 1695, 2056, 2465, 2925, 3439, 4010,
};

}  // namespace dio
