#ifndef BCA_RATIONAL_LINALG_HPP_
#define BCA_RATIONAL_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "bca/numeric.hpp"
#include "bca/vec.hpp"

namespace bca {

using RationalMatrix = std::vector<RationalVector>;

// Gauss-Jordan reduction to reduced row echelon form, pivoting on the first
// nonzero column in row order. Returns the pivot column of each pivot row.
std::vector<std::size_t> rref_in_place(RationalMatrix& m);

std::size_t rational_rank(RationalMatrix m);

// For a rows x cols matrix A of full row rank, returns the cols x rows
// matrix B with A*B = I. Returns nullopt when rank(A) < rows.
std::optional<RationalMatrix> right_inverse(const RationalMatrix& a);

// Basis of { z : z * A = 0 } (row vectors annihilating A on the left),
// produced in ascending free-column order.
std::vector<RationalVector> left_nullspace_basis(const RationalMatrix& a);

// Clears denominators: smallest positive multiple of v with integer entries.
IntVector scale_to_integers(const RationalVector& v);

Rational rational_row_norm(const RationalVector& v);

Int integer_determinant(const std::vector<IntVector>& m);

std::vector<IntVector> integer_matrix_multiply(const std::vector<IntVector>& a,
                                               const std::vector<IntVector>& b);

// Matrix-vector product A*v for an n x n integer matrix acting on column
// vectors.
IntVector apply_matrix(const std::vector<IntVector>& a, const IntVector& v);

}  // namespace bca

#endif  // BCA_RATIONAL_LINALG_HPP_
