#pragma once

// Exact integer matrices whose rows are the extended f-vectors of two
// classical polytope families, a one-pass row-subtraction triangularization,
// and membership tests for the integer affine lattices those rows span.
// Both matrices triangularize to echelon form with all pivots 1, so integer
// solvability coincides with rational solvability and membership reduces to
// exact forward substitution.

#include "fvec/fvector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fvec {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols);
  static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::vector<Int> row(std::size_t r) const;

  bool operator==(const IntegerMatrix& o) const = default;

  /// One "(a,b,c)" row per line.
  std::string str() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> entries_;
};

/// d×(d+1) matrix whose row k is pkd_fvector(k, d), k = 0..d−1.  The
/// integer linear combinations of the rows are exactly the integer points
/// of the Euler hyperplane in extended coordinates.  Requires d ≥ 2.
IntegerMatrix build_n_matrix(int d);

/// (⌊d/2⌋+1)×(d+1) matrix whose row k is skd_fvector(k, d).  The integer
/// linear combinations of the rows are exactly the integer points of the
/// Dehn–Sommerville subspace in extended coordinates.  Requires d ≥ 2.
IntegerMatrix build_m_matrix(int d);

/// Single bottom-up pass row_k ← row_k − row_{k−1} for k from the last row
/// down to 1.  These are determinant-one row operations, so the integer row
/// span is unchanged; applied to the two builders above the result is upper
/// echelon with pivot 1 at position (k, k).
IntegerMatrix triangularize_by_row_subtraction(const IntegerMatrix& m);

/// Exact rational solution x of x·echelon = target, if one exists.  The
/// matrix must be in row echelon form (each row's first nonzero entry
/// strictly right of the previous row's); rows of zeroes are not allowed.
std::optional<std::vector<Rat>> solve_row_combination(const IntegerMatrix& echelon,
                                                      const std::vector<Int>& target);

/// True iff v is an integer linear combination of the rows of basis.  Every
/// row of the two builders has leading entry 1, so matching coordinate 0 of
/// an extended f-vector forces the coefficients to sum to 1 — membership in
/// the affine lattice generated by the rows.
bool affine_lattice_member(const ExtendedFVector& v, const IntegerMatrix& basis);

/// The integer coefficients c with c·triangularize(basis) = v, if they
/// exist; c[0] = 1 for every member.
std::optional<std::vector<Int>> affine_lattice_coordinates(const ExtendedFVector& v,
                                                           const IntegerMatrix& basis);

/// Membership in the affine lattice spanned by the build_n_matrix family:
/// holds exactly when euler_defect(f) = 0.
bool euler_lattice_member(const FVector& f);

/// Membership in the affine lattice spanned by the build_m_matrix family:
/// the Dehn–Sommerville relations hold with integer coordinates.
bool ds_lattice_member(const FVector& f);

}  // namespace fvec
