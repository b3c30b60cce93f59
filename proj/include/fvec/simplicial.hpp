#pragma once

// f-vectors of simplicial d-polytopes: the Macaulay pseudopower bound,
// M-sequences, the exact coordinate change between f-vectors and
// g-coordinates (via the triangularized family matrix from the lattice
// module), and the complete membership test.

#include "fvec/fvector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fvec {

/// Coordinates (g_0, ..., g_{floor(d/2)}) of a vector in the row basis of
/// the triangularized simplicial family matrix; g_0 = 1 always.
class GVector {
 public:
  GVector(int d, std::vector<Int> entries);

  int dimension() const { return d_; }
  const std::vector<Int>& entries() const { return entries_; }
  const Int& operator[](int i) const { return entries_.at(static_cast<std::size_t>(i)); }

  /// Renders as "(1,2,3)".
  std::string str() const;
  bool operator==(const GVector& o) const = default;

 private:
  int d_;
  std::vector<Int> entries_;
};

/// Macaulay's bound a^<i>: write a in its i-binomial representation
/// a = C(a_i, i) + ... + C(a_j, j) with a_i > ... > a_j >= j >= 1 and shift
/// every term to C(a_i + 1, i + 1) + ... + C(a_j + 1, j + 1).  Zero maps to
/// zero.  Requires a >= 0, i >= 1.
Int macaulay_pseudopower(const Int& a, int i);

/// True iff g_0 = 1, every entry is >= 0, and g_{i+1} <= g_i^<i> for every
/// consecutive pair (so after a zero everything must be zero).
bool is_m_sequence(const std::vector<Int>& g);
bool is_m_sequence(const GVector& g);

enum class FToGStatus {
  Ok,
  /// extend(f) is not in the rational row space of the family matrix.
  NotInSubspace,
  /// In the row space, but with non-integer coordinates.
  NotInLattice,
};

struct FToGResult {
  FToGStatus status = FToGStatus::NotInSubspace;
  std::optional<GVector> g;  // set exactly when status is Ok
};

/// Solves (1, x) * T = extend(f) exactly, where T is the triangularized
/// simplicial family matrix for f's dimension (d >= 2).
FToGResult f_to_g(const FVector& f);

/// (g) * T with the leading 1 dropped; the exact inverse of f_to_g.
FVector g_to_f(const GVector& g);

/// True iff f_to_g(f) succeeds and the g-coordinates form an M-sequence:
/// the complete characterization of simplicial d-polytope f-vectors.
/// Requires d >= 2.
bool simplicial_member(const FVector& f);

}  // namespace fvec
