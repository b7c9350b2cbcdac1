#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dio/bigcount.hpp"
#include "dio/system.hpp"

namespace dio {

/// Brute-force reference engine.  Recursive descent over the upper-triangle
/// variables in row-major order; within each row the final variable is forced
/// by the remaining budget, which keeps lexicographic order intact.  Trusted
/// precisely because it stays structurally trivial: every other engine is
/// validated against it.

/// Visits every solution in strictly increasing lexicographic order of the
/// upper-triangle tuple.  Return false from the callback to stop early.
void enumerate_solutions(const ValidatedSpec& spec,
                         const std::function<bool(const SolutionMatrix&)>& visit);

/// Materialized prefix of the enumeration stream (all of it when `limit` is
/// not given).
std::vector<SolutionMatrix> list_solutions(
    const ValidatedSpec& spec, std::optional<std::uint64_t> limit = std::nullopt);

/// Exact cardinality of the solution set.  Practical up to roughly l = 16 at
/// k = 4; scaling beyond that is the generating-function engine's job.
BigCount count_bruteforce(const ValidatedSpec& spec);

/// Number of nonnegative off-diagonal six-tuples (a12,a13,a14,a23,a24,a34)
/// of the reduced 4-equation system with right-hand sides r.  Requires each
/// l_ii in [0, l] with the parity of l.
BigCount count_fixed_diagonal(long long l, const ReducedRhs& r);

/// Sum of count_fixed_diagonal over all (l33, l44) of matching parity in
/// [0, l]^2 whose delta class is `dc`, for fixed (l11, l22).  This is the
/// reference value for each strip-counter case expression.
BigCount count_fixed_diagonal_by_delta(long long l, long long l11, long long l22,
                                       DeltaClass dc);

}  // namespace dio
