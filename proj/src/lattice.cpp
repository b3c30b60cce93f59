#include "fvec/lattice.hpp"

#include "fvec/constructions.hpp"

#include <sstream>
#include <stdexcept>

namespace fvec {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw error("matrix needs at least one row and column");
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) throw error("matrix needs at least one row and column");
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw error("ragged rows in matrix construction");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Int> IntegerMatrix::row(std::size_t r) const {
  return std::vector<Int>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::string IntegerMatrix::str() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '(';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ',';
      out << at(r, c);
    }
    out << ')';
    if (r + 1 < rows_) out << '\n';
  }
  return out.str();
}

namespace {

IntegerMatrix from_extended_rows(const std::vector<ExtendedFVector>& rows) {
  std::vector<std::vector<Int>> data;
  for (const ExtendedFVector& r : rows) data.push_back(r.entries());
  IntegerMatrix m = IntegerMatrix::from_rows(data);
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m.at(r, 0) != 1)
      throw std::logic_error("family matrix row without leading entry 1");
  return m;
}

}  // namespace

IntegerMatrix build_n_matrix(int d) {
  if (d < 2) throw dimension_error("family matrices need dimension >= 2");
  std::vector<ExtendedFVector> rows;
  for (int k = 0; k < d; ++k) rows.push_back(pkd_fvector(k, d));
  return from_extended_rows(rows);
}

IntegerMatrix build_m_matrix(int d) {
  if (d < 2) throw dimension_error("family matrices need dimension >= 2");
  std::vector<ExtendedFVector> rows;
  for (int k = 0; k <= d / 2; ++k) rows.push_back(skd_fvector(k, d));
  return from_extended_rows(rows);
}

IntegerMatrix triangularize_by_row_subtraction(const IntegerMatrix& m) {
  IntegerMatrix t = m;
  for (std::size_t r = m.rows(); r-- > 1;)
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(r, c) -= t.at(r - 1, c);
  return t;
}

std::optional<std::vector<Rat>> solve_row_combination(const IntegerMatrix& echelon,
                                                      const std::vector<Int>& target) {
  if (target.size() != echelon.cols()) throw error("target length does not match matrix columns");
  std::vector<Rat> residual(target.begin(), target.end());
  std::vector<Rat> coeffs(echelon.rows());
  std::size_t previous_pivot = 0;
  for (std::size_t r = 0; r < echelon.rows(); ++r) {
    std::size_t pivot = 0;
    while (pivot < echelon.cols() && echelon.at(r, pivot) == 0) ++pivot;
    if (pivot == echelon.cols()) throw error("echelon matrix has a zero row");
    if (r > 0 && pivot <= previous_pivot) throw error("matrix is not in row echelon form");
    previous_pivot = pivot;
    coeffs[r] = residual[pivot] / Rat(echelon.at(r, pivot));
    if (coeffs[r] != 0)
      for (std::size_t c = pivot; c < echelon.cols(); ++c)
        residual[c] -= coeffs[r] * Rat(echelon.at(r, c));
  }
  for (const Rat& x : residual)
    if (x != 0) return std::nullopt;
  return coeffs;
}

std::optional<std::vector<Int>> affine_lattice_coordinates(const ExtendedFVector& v,
                                                           const IntegerMatrix& basis) {
  if (v.entries().size() != basis.cols())
    throw error("vector length does not match matrix columns");
  auto rational = solve_row_combination(triangularize_by_row_subtraction(basis), v.entries());
  if (!rational) return std::nullopt;
  std::vector<Int> integral;
  integral.reserve(rational->size());
  for (const Rat& x : *rational) {
    if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
    integral.push_back(Int(boost::multiprecision::numerator(x)));
  }
  return integral;
}

bool affine_lattice_member(const ExtendedFVector& v, const IntegerMatrix& basis) {
  return affine_lattice_coordinates(v, basis).has_value();
}

bool euler_lattice_member(const FVector& f) { return euler_defect(f) == 0; }

bool ds_lattice_member(const FVector& f) {
  int d = f.dimension();
  if (d == 1) return f[0] == 2;  // the segment spans the whole family
  return affine_lattice_member(ExtendedFVector::extend(f), build_m_matrix(d));
}

}  // namespace fvec
