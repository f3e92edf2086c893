#pragma once

#include <cstddef>
#include <vector>

#include "crystcohom/abelian.hpp"
#include "crystcohom/execution.hpp"
#include "crystcohom/matrix.hpp"

namespace crystcohom {

/// U * A * V = D with U, V unimodular and D = diag(d_1, ..., d_k, 0, ...),
/// d_1 | d_2 | ... and every d_i > 0.
struct SmithForm {
  MatrixZ D;
  MatrixZ U;
  MatrixZ V;
  std::vector<BigInt> diagonal;  // length min(rows, cols), zeros last
  std::size_t rank = 0;
};

/// Minimal-absolute-value pivoting. The parallel variant distributes the row
/// and column eliminations of each pivot step over OpenMP threads.
SmithForm smith_normal_form(const MatrixZ& a, Execution exec = Execution::serial);

/// The diagonal of the Smith form only; skips the transforms.
std::vector<BigInt> smith_diagonal(const MatrixZ& a, Execution exec = Execution::serial);

std::size_t rank(const MatrixZ& a, Execution exec = Execution::serial);

/// Saturated basis of {x : A x = 0}, as columns.
MatrixZ integer_kernel(const MatrixZ& a);

/// X with A X = B. Throws NoIntegerSolution.
MatrixZ solve_exact(const MatrixZ& a, const MatrixZ& b);

/// ker A / im B. Throws ChainConditionError unless A B = 0.
AbelianGroupInvariants subquotient_invariants(const MatrixZ& a, const MatrixZ& b);

/// Matrix of the j-th exterior power on the lexicographically ordered wedge
/// basis: entry (S, T) is the minor with rows S and columns T.
MatrixZ compound_matrix(const MatrixZ& a, std::size_t degree);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const MatrixZ& a);

/// Cohomology of 0 -> F_0 -> F_1 -> ... -> F_{k} -> 0 where deltas[i] maps
/// F_i -> F_{i+1} (a dims[i+1] x dims[i] matrix). Returns H^0 .. H^k; maps past
/// the end of the list are taken to be zero.
std::vector<AbelianGroupInvariants> cohomology_from_coboundaries(
    const std::vector<MatrixZ>& deltas, const std::vector<std::size_t>& dims,
    Execution exec = Execution::serial);

/// Same read-off, from precomputed Smith diagonals of each delta.
std::vector<AbelianGroupInvariants> cohomology_from_smith_diagonals(
    const std::vector<std::vector<BigInt>>& diagonals, const std::vector<std::size_t>& dims);

/// Lexicographically ordered j-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> lexicographic_subsets(std::size_t n, std::size_t j);

}  // namespace crystcohom
