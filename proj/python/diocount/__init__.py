"""Exact counters and enumerators for symmetric row-sum Diophantine systems.

The systems have the form 2*a(i,i) + sum_{j != i} a(i,j) = rhs[i] over
symmetric nonnegative integer matrices.  Four engines are exposed: a
brute-force oracle, closed-form polynomials for the uniform k=4 and k=3
families, a strip-geometry counter and a generating-function counter for
arbitrary k and mixed right-hand sides.  All results are exact python ints.
"""

from ._core import (
    SolutionMatrix,
    aggregate_count,
    case_count,
    classify_delta,
    closed_count,
    closed_count_even,
    closed_count_even_reindexed,
    closed_count_odd,
    closed_count_odd_reindexed,
    count_bruteforce,
    count_fixed_diagonal,
    count_fixed_diagonal_by_delta,
    count_general,
    count_general_table,
    enumerate_solutions,
    floyd_count,
    floyd_count_cases,
    floyd_enumerate,
    floyd_exists,
    floyd_solution,
    floyd_triangle_row_sums,
    magic_constant,
    proof_block_value,
    proof_blocks,
    residue_class,
    triangle_number,
)

__version__ = "0.1.0"

__all__ = [
    "SolutionMatrix",
    "aggregate_count",
    "case_count",
    "classify_delta",
    "closed_count",
    "closed_count_even",
    "closed_count_even_reindexed",
    "closed_count_odd",
    "closed_count_odd_reindexed",
    "count_bruteforce",
    "count_fixed_diagonal",
    "count_fixed_diagonal_by_delta",
    "count_general",
    "count_general_table",
    "enumerate_solutions",
    "floyd_count",
    "floyd_count_cases",
    "floyd_enumerate",
    "floyd_exists",
    "floyd_solution",
    "floyd_triangle_row_sums",
    "magic_constant",
    "proof_block_value",
    "proof_blocks",
    "residue_class",
    "triangle_number",
]
