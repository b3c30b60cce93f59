#include "fvec/fvector.hpp"

#include <cctype>
#include <sstream>

namespace fvec {

Int binomial(const Int& n, const Int& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  // Symmetric choice keeps the loop short for k close to n.
  Int kk = (k > n - k) ? Int(n - k) : k;
  Int result = 1;
  for (Int i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // exact: result is a binomial coefficient at every step
  }
  return result;
}

FVector::FVector(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw dimension_error("f-vector needs at least one entry");
}

FVector FVector::parse(const std::string& text) {
  const auto fail = [&text]() -> void { throw error("malformed f-vector literal: " + text); };
  std::size_t pos = 0;
  const auto skip_space = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  char close = '\0';  // required closing bracket, if an opening one was seen
  if (pos < text.size() && (text[pos] == '(' || text[pos] == '[')) {
    close = text[pos] == '(' ? ')' : ']';
    ++pos;
  }

  std::vector<Int> entries;
  while (true) {
    skip_space();
    std::string num;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) num += text[pos++];
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      num += text[pos++];
    if (num.empty() || num == "-" || num == "+") fail();
    entries.emplace_back(num);
    skip_space();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }

  if (close != '\0') {
    if (pos >= text.size() || text[pos] != close) fail();
    ++pos;
    skip_space();
  }
  if (pos != text.size()) fail();
  return FVector(std::move(entries));
}

bool FVector::is_candidate() const {
  for (const Int& e : entries_)
    if (e < 1) return false;
  return true;
}

std::string FVector::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

std::strong_ordering FVector::operator<=>(const FVector& o) const {
  if (auto c = entries_.size() <=> o.entries_.size(); c != 0) return c;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < o.entries_[i]) return std::strong_ordering::less;
    if (entries_[i] > o.entries_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

ExtendedFVector::ExtendedFVector(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw dimension_error("extended f-vector needs at least two entries");
  if (entries_.front() != 1) throw error("extended f-vector must lead with 1 (the empty face)");
}

ExtendedFVector ExtendedFVector::extend(const FVector& f) {
  std::vector<Int> e;
  e.reserve(f.entries().size() + 1);
  e.emplace_back(1);
  e.insert(e.end(), f.entries().begin(), f.entries().end());
  return ExtendedFVector(std::move(e));
}

FVector ExtendedFVector::fvector() const {
  return FVector(std::vector<Int>(entries_.begin() + 1, entries_.end()));
}

std::string ExtendedFVector::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

ReductionBase::ReductionBase(ReductionVariant v, int d, std::vector<Int> vec)
    : variant_(v), d_(d), vector_(std::move(vec)) {}

ReductionBase ReductionBase::simplex(int d) {
  if (d < 1) throw dimension_error("simplex reduction base needs d >= 1");
  return ReductionBase(ReductionVariant::Simplex, d, simplex_fvector(d).entries());
}

ReductionBase ReductionBase::simplex_facet_sphere(int d) {
  if (d < 2) throw dimension_error("simplex-facet reduction base needs d >= 2");
  std::vector<Int> v = simplex_fvector(d - 1).entries();
  v.emplace_back(2);
  return ReductionBase(ReductionVariant::SimplexFacetSphere, d, std::move(v));
}

ReductionBase ReductionBase::vertex_facet(int d) {
  if (d < 2) throw dimension_error("vertex-facet reduction base needs d >= 2");
  std::vector<Int> v(static_cast<std::size_t>(d), 0);
  v.front() = 1;
  v.back() = 1;
  return ReductionBase(ReductionVariant::VertexFacet, d, std::move(v));
}

FVector simplex_fvector(int d) {
  if (d < 1) throw dimension_error("simplex f-vector needs d >= 1");
  std::vector<Int> e;
  e.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) e.push_back(binomial(d + 1, i + 1));
  return FVector(std::move(e));
}

Int euler_defect(const FVector& f) {
  Int alt = 0;
  int sign = 1;
  for (const Int& e : f.entries()) {
    alt += sign * e;
    sign = -sign;
  }
  Int target = (f.dimension() % 2 == 0) ? 0 : 2;  // 1 - (-1)^d
  return alt - target;
}

FVector dual_fvector(const FVector& f) {
  std::vector<Int> e(f.entries().rbegin(), f.entries().rend());
  return FVector(std::move(e));
}

ReducedSum reduced_add(const FVector& x, const FVector& y, const ReductionBase& base) {
  if (x.dimension() != base.dimension() || y.dimension() != base.dimension())
    throw dimension_error("reduced addition operands must match the base dimension");
  std::vector<Int> e(static_cast<std::size_t>(base.dimension()));
  bool candidate = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = x.entries()[i] + y.entries()[i] - base.vector()[i];
    if (e[i] < 1) candidate = false;
  }
  return ReducedSum{FVector(std::move(e)), candidate};
}

bool trivial_lower_bound_holds(const FVector& f) {
  FVector s = simplex_fvector(f.dimension());
  for (int i = 0; i < f.dimension(); ++i)
    if (f[i] < s[i]) return false;
  return true;
}

}  // namespace fvec
