#pragma once

// Exact face-count vectors of convex polytopes and the reduced addition
// operations that make families of them into commutative monoids.
//
// A d-polytope has an f-vector (f_0, ..., f_{d-1}) counting its faces by
// dimension.  All arithmetic here is arbitrary-precision integer; no
// floating point enters any verdict.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fvec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dimension argument is out of range or two operands disagree in dimension.
class dimension_error : public error {
 public:
  using error::error;
};

/// Binomial coefficient C(n, k); zero whenever k < 0, n < 0 or k > n.
Int binomial(const Int& n, const Int& k);

/// Face-count vector (f_0, ..., f_{d-1}) with d >= 1 entries.
///
/// Entries of a genuine polytope f-vector are >= 1; intermediate results of
/// reduced additions may dip below that, so positivity is exposed as the
/// is_candidate() predicate rather than enforced at construction.
class FVector {
 public:
  explicit FVector(std::vector<Int> entries);

  /// Parses "(4,6,4)" or "[4,6,4]" (whitespace tolerated).
  static FVector parse(const std::string& text);

  int dimension() const { return static_cast<int>(entries_.size()); }
  const std::vector<Int>& entries() const { return entries_; }
  const Int& operator[](int i) const { return entries_.at(static_cast<std::size_t>(i)); }

  /// True when every entry is >= 1 (the trivial sanity condition any
  /// polytope f-vector satisfies).
  bool is_candidate() const;

  /// Renders as "(4,6,4)".
  std::string str() const;

  bool operator==(const FVector& o) const { return entries_ == o.entries_; }
  /// Lexicographic order (shorter vectors first); used for deterministic
  /// report and generator-set ordering.
  std::strong_ordering operator<=>(const FVector& o) const;

 private:
  std::vector<Int> entries_;
};

/// Extended form (1, f_0, ..., f_{d-1}): the leading entry counts the empty
/// face and turns linear-algebra statements about f-vectors affine.
class ExtendedFVector {
 public:
  explicit ExtendedFVector(std::vector<Int> entries);
  static ExtendedFVector extend(const FVector& f);

  /// Dimension d of the underlying polytope (one less than the entry count).
  int dimension() const { return static_cast<int>(entries_.size()) - 1; }
  const std::vector<Int>& entries() const { return entries_; }
  const Int& operator[](int i) const { return entries_.at(static_cast<std::size_t>(i)); }

  /// Drops the leading 1.
  FVector fvector() const;

  std::string str() const;
  bool operator==(const ExtendedFVector& o) const { return entries_ == o.entries_; }

 private:
  std::vector<Int> entries_;
};

/// The three reduction bases used by the reduced additions.  Each base is the
/// f-vector "cost" of the overlap identified when two polytopes are merged:
enum class ReductionVariant {
  /// Subtract f(simplex_d): merge via an adapter, deleting a simple vertex
  /// and filling the hole with the other summand.
  Simplex,
  /// Subtract (f(simplex_{d-1}), 2): glue along a simplex facet shared by
  /// both summands (the facet's boundary sphere is counted once).
  SimplexFacetSphere,
  /// Subtract (1, 0, ..., 0, 1): connected sum, which cancels one vertex of
  /// one summand against one facet of the other.
  VertexFacet,
};

class ReductionBase {
 public:
  static ReductionBase simplex(int d);               // d >= 1
  static ReductionBase simplex_facet_sphere(int d);  // d >= 2
  static ReductionBase vertex_facet(int d);          // d >= 2

  ReductionVariant variant() const { return variant_; }
  int dimension() const { return d_; }
  const std::vector<Int>& vector() const { return vector_; }

 private:
  ReductionBase(ReductionVariant v, int d, std::vector<Int> vec);
  ReductionVariant variant_;
  int d_;
  std::vector<Int> vector_;
};

/// f-vector of the d-simplex: entry i is C(d+1, i+1).
FVector simplex_fvector(int d);

/// Alternating sum f_0 - f_1 + ... minus the value 1 - (-1)^d it takes on
/// every polytope; zero exactly on the Euler hyperplane.
Int euler_defect(const FVector& f);

/// Entry reversal, the f-vector of the polar-dual polytope.
FVector dual_fvector(const FVector& f);

struct ReducedSum {
  FVector value;
  /// False when some entry of the sum dropped below 1.
  bool fvector_candidate;
};

/// x + y - base, the reduced addition for the base's merge operation.
/// Never fails: out-of-range results are returned flagged.
ReducedSum reduced_add(const FVector& x, const FVector& y, const ReductionBase& base);

/// Componentwise f >= f(simplex_d), the weakest necessary condition for f to
/// be a polytope f-vector.
bool trivial_lower_bound_holds(const FVector& f);

}  // namespace fvec
