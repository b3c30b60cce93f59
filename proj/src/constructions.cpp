#include "fvec/constructions.hpp"

namespace fvec {

namespace {

// Entry i (with i = -1 giving the leading 1 of the extended form) of the
// f-vector of P^m_{k,l}.  Inclusion-exclusion over the faces of the ambient
// simplex that are lost when the sum's two summand simplices stop spanning.
Int pklm_entry(long long k, long long l, long long m, long long i) {
  return binomial(k + l + m + 2, i + 1) - binomial(l + m + 1, i - k) -
         binomial(k + m + 1, i - l) + binomial(m + 1, i - k - l);
}

}  // namespace

FVector pklm_fvector(const PklmParams& p) {
  if (p.k < 0 || p.l < 0 || p.m < 0)
    throw dimension_error("pyramid/sum family needs k, l, m >= 0");
  long long d = p.k + p.l + p.m;
  if (d < 1) throw dimension_error("pyramid/sum family needs dimension k+l+m >= 1");
  std::vector<Int> e;
  e.reserve(static_cast<std::size_t>(d));
  for (long long i = 0; i < d; ++i) e.push_back(pklm_entry(p.k, p.l, p.m, i));
  return FVector(std::move(e));
}

ExtendedFVector pkd_fvector(long long k, int d) {
  if (d < 2) throw dimension_error("P_k(d) needs d >= 2");
  if (k < 0 || k > d - 1) throw dimension_error("P_k(d) needs 0 <= k <= d-1");
  std::vector<Int> e;
  e.reserve(static_cast<std::size_t>(d) + 1);
  for (long long i = -1; i < d; ++i)
    e.push_back(binomial(d + 1, i + 1) + binomial(d, i) - binomial(d - k, d - i));
  return ExtendedFVector(std::move(e));
}

ExtendedFVector skd_fvector(long long k, int d) {
  if (d < 2) throw dimension_error("S_k(d) needs d >= 2");
  if (k < 0 || k > d / 2) throw dimension_error("S_k(d) needs 0 <= k <= floor(d/2)");
  std::vector<Int> e;
  e.reserve(static_cast<std::size_t>(d) + 1);
  for (long long i = -1; i < d; ++i)
    e.push_back(binomial(d + 2, i + 1) - binomial(k + 1, i - d + k) -
                binomial(d - k + 1, i - k));
  return ExtendedFVector(std::move(e));
}

FVector pyramid_fvector(const FVector& f) {
  int d = f.dimension();
  std::vector<Int> e(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    Int fi = (i == d) ? Int(1) : f[i];
    Int fprev = (i == 0) ? Int(1) : f[i - 1];
    e[static_cast<std::size_t>(i)] = fi + fprev;
  }
  return FVector(std::move(e));
}

namespace {

// Counting sequence over face dimensions -1 .. d with optional empty face
// and the polytope itself included;  used by the convolution formulas.
std::vector<Int> counting_sequence(const FVector& f, bool with_empty, bool with_top) {
  std::vector<Int> s;
  if (with_empty) s.emplace_back(1);
  s.insert(s.end(), f.entries().begin(), f.entries().end());
  if (with_top) s.emplace_back(1);
  return s;
}

}  // namespace

FVector product_fvector(const FVector& f, const FVector& g) {
  // Nonempty faces of P x Q are products of nonempty faces, except that the
  // pair (P, Q) is the whole polytope, which an f-vector does not count.
  std::vector<Int> a = counting_sequence(f, false, true);  // dims 0..d_f
  std::vector<Int> b = counting_sequence(g, false, true);  // dims 0..d_g
  int dim = f.dimension() + g.dimension();
  std::vector<Int> e(static_cast<std::size_t>(dim), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i + j;
      if (k < e.size()) e[k] += a[i] * b[j];
    }
  return FVector(std::move(e));
}

FVector join_fvector(const FVector& f, const FVector& g) {
  // Faces of P * Q are joins F * G over all face pairs including the empty
  // face on either side; dim(F * G) = dim F + dim G + 1.  The pair (P, Q)
  // is again the whole join.
  std::vector<Int> a = counting_sequence(f, true, true);  // dims -1..d_f
  std::vector<Int> b = counting_sequence(g, true, true);  // dims -1..d_g
  int dim = f.dimension() + g.dimension() + 1;
  std::vector<Int> e(static_cast<std::size_t>(dim), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      // dims: (i-1) + (j-1) + 1 = i + j - 1
      if (i + j == 0) continue;  // the empty face of the join
      std::size_t k = i + j - 1;
      if (k < e.size()) e[k] += a[i] * b[j];
    }
  return FVector(std::move(e));
}

FVector direct_sum_fvector(const FVector& f, const FVector& g) {
  // Proper faces of the free sum P (+) Q are joins of proper faces; only the
  // empty-face pair is excluded (it gives the empty face, not counted).
  std::vector<Int> a = counting_sequence(f, true, false);  // dims -1..d_f-1
  std::vector<Int> b = counting_sequence(g, true, false);  // dims -1..d_g-1
  int dim = f.dimension() + g.dimension();
  std::vector<Int> e(static_cast<std::size_t>(dim), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i + j == 0) continue;
      std::size_t k = i + j - 1;
      if (k < e.size()) e[k] += a[i] * b[j];
    }
  return FVector(std::move(e));
}

FVector join_polygons_fvector(long long n) {
  if (n < 3) throw dimension_error("a polygon needs n >= 3 vertices");
  Int nn(n);
  std::vector<Int> e = {2 * nn, nn * nn + 2 * nn, 2 * nn * nn + 2, nn * nn + 2 * nn, 2 * nn};
  return FVector(std::move(e));
}

FVector steinitz_move(const FVector& f, SteinitzMove move) {
  if (f.dimension() != 3) throw dimension_error("local moves are defined for 3-polytopes only");
  std::vector<Int> e = f.entries();
  if (move == SteinitzMove::StackTriangle) {
    e[0] += 1;
    e[1] += 3;
    e[2] += 2;
  } else {
    e[0] += 2;
    e[1] += 3;
    e[2] += 1;
  }
  return FVector(std::move(e));
}

}  // namespace fvec
