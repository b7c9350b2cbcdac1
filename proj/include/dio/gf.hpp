#pragma once

#include <cstdint>
#include <vector>

#include "dio/bigcount.hpp"

namespace dio {

/// Generating-function engine: the count is the coefficient of
/// x_0^{l_0} ... x_{k-1}^{l_{k-1}} in the product of 1/(1 - x_i x_j) over
/// i <= j, extracted by a truncated dynamic program over residual budgets.
/// Works for any k and any (possibly unequal) right-hand sides.

/// Cell cap used when a call does not pass one: the DIO_MAX_CELLS environment
/// variable (decimal integer) when set and parseable, else 10^8.
std::uint64_t default_max_cells();

/// Exact number of nonnegative solutions of
/// 2*a(i,i) + sum_{j != i} a(i,j) = rhs[i] over symmetric matrices.
/// Processes the diagonal variables first, then the off-diagonal ones in
/// lexicographic order, each as an in-place unbounded-knapsack pass over a
/// dense table of prod(rhs[i]+1) cells.  Throws CapacityError when that
/// product exceeds the cap (pass max_cells = 0 to use default_max_cells()).
BigCount count_general(const std::vector<long long>& rhs, std::uint64_t max_cells = 0);

/// Counts for the uniform systems rhs = [l,...,l] (k entries) for every
/// l in [0, lmax].
std::vector<BigCount> count_general_table(int k, long long lmax,
                                          std::uint64_t max_cells = 0);

}  // namespace dio
