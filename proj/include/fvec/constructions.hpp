#pragma once

// Closed-form f-vectors of the classical polytope constructions: iterated
// pyramids over free sums of simplices, pyramids, products, joins, free
// sums, joins of polygons, and the two local moves that generate all
// 3-polytopes.

#include "fvec/fvector.hpp"

namespace fvec {

/// Parameters of the family P^m_{k,l} = (m-fold pyramid over the free sum
/// of a k-simplex and an l-simplex).  Its dimension is k + l + m.
struct PklmParams {
  long long k = 0;
  long long l = 0;
  long long m = 0;
};

/// f-vector of P^m_{k,l}; requires k, l, m >= 0 and k + l + m >= 1.
FVector pklm_fvector(const PklmParams& p);

/// Extended f-vector of P_k(d) = P^{d-k-1}_{k,1}, the (d-k-1)-fold pyramid
/// over the bipyramid over a k-simplex; requires 0 <= k <= d-1, d >= 2.
/// P_0(d) is the d-simplex.
ExtendedFVector pkd_fvector(long long k, int d);

/// Extended f-vector of S_k(d), the free sum of a k-simplex and a
/// (d-k)-simplex; requires 0 <= k <= floor(d/2), d >= 2.  S_0(d) is the
/// d-simplex; all S_k(d) are simplicial.
ExtendedFVector skd_fvector(long long k, int d);

/// f-vector of the pyramid: entry i is f_i + f_{i-1} with the conventions
/// f_{-1} = 1 (empty face) and f_d = 1 (the base itself becomes a facet).
FVector pyramid_fvector(const FVector& f);

/// f-vector of the cartesian product: faces are pairs of faces, so the
/// extended-with-top counting sequences convolve.
FVector product_fvector(const FVector& f, const FVector& g);

/// f-vector of the join: faces are joins of faces including the empty one,
/// so the fully extended sequences convolve with a dimension shift.
FVector join_fvector(const FVector& f, const FVector& g);

/// f-vector of the free sum: proper faces are joins of proper faces.
FVector direct_sum_fvector(const FVector& f, const FVector& g);

/// f-vector of the join of two n-gons, a 5-polytope:
/// (2n, n^2+2n, 2n^2+2, n^2+2n, 2n); requires n >= 3.
FVector join_polygons_fvector(long long n);

/// The two local moves on 3-polytopes: stacking a pyramid onto a triangle
/// facet adds (1,3,2); cutting off a 3-valent vertex adds (2,3,1).
enum class SteinitzMove { StackTriangle, TruncateSimpleVertex };

/// Applies the move's delta; requires dimension 3.
FVector steinitz_move(const FVector& f, SteinitzMove move);

}  // namespace fvec
