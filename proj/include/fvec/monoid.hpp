#pragma once

// The monoid of integer vectors that lie on the Euler hyperplane and
// dominate the simplex f-vector, under reduced addition with simplex base:
// membership, Hilbert basis (closed form plus an independent brute-force
// oracle), and greedy decomposition into generators.  Also the complete
// f-vector characterizations in dimensions 2 and 3.

#include "fvec/fvector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fvec {

/// A set of monoid generators of common dimension; generators are sorted
/// and pairwise distinct, and each lies on the Euler hyperplane.
struct GeneratorSet {
  int d = 0;
  std::vector<FVector> generators;

  bool contains(const FVector& f) const;
  bool operator==(const GeneratorSet& o) const = default;
};

/// euler_defect(f) = 0 and f >= f(simplex_d) componentwise.
bool euler_monoid_member(const FVector& f);

/// Closed-form Hilbert basis: f(simplex_d) + e_i + e_j for every even index
/// i and odd index j in 0..d-1; ceil(d/2) * floor(d/2) generators.  d >= 2.
GeneratorSet euler_monoid_hilbert_basis(int d);

/// Independent oracle: enumerates every monoid member whose excess over
/// f(simplex_d) is at most radius in each entry, and keeps those that are
/// not a reduced sum of two non-neutral members.  d >= 2, radius >= 1.
GeneratorSet hilbert_basis_bruteforce(int d, int radius);

/// Greedy decomposition of a member into generators: repeatedly subtract
/// e_i + e_j for the smallest even i and smallest odd j whose entries still
/// exceed the simplex.  The result reduced-adds (simplex base) back to f;
/// the neutral element decomposes into the empty list.  Throws on
/// non-members.
std::vector<FVector> euler_monoid_decompose(const FVector& f);

/// Dimension-3 membership: f_1 = f_0 + f_2 - 2, f_2 <= 2 f_0 - 4 and
/// f_0 <= 2 f_2 - 4.  Throws dimension_error unless d = 3.
bool steinitz_member(const FVector& f);

/// Name of the first violated dimension-3 condition, in the order above
/// ("f1 = f0 + f2 - 2", "f2 <= 2 f0 - 4", "f0 <= 2 f2 - 4"); nullopt for
/// members.
std::optional<std::string> steinitz_violation(const FVector& f);

/// {(5,8,5), (5,9,6), (6,9,5)}: the irreducible non-neutral members of the
/// dimension-3 monoid.
GeneratorSet steinitz_hilbert_basis();

/// Brute-force cross-check of the dimension-3 basis: irreducible non-neutral
/// members with f_0, f_2 <= bound.  bound >= 4.
GeneratorSet steinitz_hilbert_basis_bruteforce(int bound);

/// Dimension-2 membership: f = (n, n) with n >= 3.  Throws dimension_error
/// unless d = 2.
bool polygon_member(const FVector& f);

}  // namespace fvec
