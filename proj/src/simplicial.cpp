#include "fvec/simplicial.hpp"

#include "fvec/lattice.hpp"

#include <sstream>

namespace fvec {

GVector::GVector(int d, std::vector<Int> entries) : d_(d), entries_(std::move(entries)) {
  if (d_ < 2) throw dimension_error("g-coordinates need dimension >= 2");
  if (entries_.size() != static_cast<std::size_t>(d_ / 2 + 1))
    throw error("a g-vector for dimension d has floor(d/2)+1 entries");
  if (entries_.front() != 1) throw error("g-vectors start with entry 1");
}

std::string GVector::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

Int macaulay_pseudopower(const Int& a, int i) {
  if (i < 1) throw error("the Macaulay pseudopower needs index i >= 1");
  if (a < 0) throw error("the Macaulay pseudopower needs a >= 0");
  if (a == 0) return 0;
  Int rest = a;
  Int result = 0;
  int j = i;
  while (rest > 0) {
    if (j < 1) throw std::logic_error("binomial representation ran out of indices");
    // Largest m with C(m, j) <= rest; C(j, j) = 1 <= rest, so m >= j.
    Int m = j;
    while (binomial(m + 1, j) <= rest) ++m;
    rest -= binomial(m, j);
    result += binomial(m + 1, j + 1);
    --j;
  }
  return result;
}

bool is_m_sequence(const std::vector<Int>& g) {
  if (g.empty() || g.front() != 1) return false;
  for (const Int& x : g)
    if (x < 0) return false;
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    if (g[i + 1] > macaulay_pseudopower(g[i], static_cast<int>(i))) return false;
  return true;
}

bool is_m_sequence(const GVector& g) { return is_m_sequence(g.entries()); }

namespace {

IntegerMatrix triangular_m_matrix(int d) {
  return triangularize_by_row_subtraction(build_m_matrix(d));
}

}  // namespace

FToGResult f_to_g(const FVector& f) {
  int d = f.dimension();
  if (d < 2) throw dimension_error("g-coordinates need dimension >= 2");
  auto coords =
      solve_row_combination(triangular_m_matrix(d), ExtendedFVector::extend(f).entries());
  if (!coords) return {FToGStatus::NotInSubspace, std::nullopt};
  std::vector<Int> integral;
  integral.reserve(coords->size());
  for (const Rat& x : *coords) {
    if (boost::multiprecision::denominator(x) != 1) return {FToGStatus::NotInLattice, std::nullopt};
    integral.push_back(Int(boost::multiprecision::numerator(x)));
  }
  return {FToGStatus::Ok, GVector(d, std::move(integral))};
}

FVector g_to_f(const GVector& g) {
  int d = g.dimension();
  IntegerMatrix t = triangular_m_matrix(d);
  std::vector<Int> v(t.cols(), 0);
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) v[c] += g[static_cast<int>(r)] * t.at(r, c);
  if (v.front() != 1) throw std::logic_error("g-to-f product lost the leading 1");
  return ExtendedFVector(std::move(v)).fvector();
}

bool simplicial_member(const FVector& f) {
  FToGResult r = f_to_g(f);
  return r.status == FToGStatus::Ok && is_m_sequence(*r.g);
}

}  // namespace fvec
