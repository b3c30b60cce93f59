#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "fvec/fvector.hpp"
#include "fvec/simplicial.hpp"

using namespace fvec;

namespace {

// ---- brute-force multicomplex oracle --------------------------------------
// The pseudopower a^<i> is, by definition, the largest possible number of
// degree-(i+1) monomials all of whose degree-i divisors lie in some chosen
// set of a degree-i monomials.  For tiny parameters that maximum can be
// found by trying every a-subset, which is completely independent of the
// binomial-representation shortcut.

std::vector<std::vector<int>> monomials(int vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(vars), 0);
  const auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == vars - 1) {
      current[static_cast<std::size_t>(var)] = left;
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      current[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Int bruteforce_pseudopower(int a, int i, int vars) {
  const auto lower = monomials(vars, i);
  const auto upper = monomials(vars, i + 1);
  REQUIRE(static_cast<std::size_t>(a) <= lower.size());
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t m = 0; m < lower.size(); ++m) index[lower[m]] = m;

  std::vector<bool> pick(lower.size(), false);
  std::fill(pick.begin(), pick.begin() + a, true);
  std::size_t best = 0;
  do {
    std::size_t valid = 0;
    for (const auto& mono : upper) {
      bool ok = true;
      for (int v = 0; v < vars && ok; ++v) {
        if (mono[static_cast<std::size_t>(v)] == 0) continue;
        std::vector<int> divisor = mono;
        divisor[static_cast<std::size_t>(v)] -= 1;
        ok = pick[index.at(divisor)];
      }
      if (ok) ++valid;
    }
    best = std::max(best, valid);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Int(best);
}

// Smallest variable count offering at least a monomials of degree i.
int min_vars(int a, int i) {
  int v = 1;
  while (binomial(v + i - 1, i) < a) ++v;
  return v;
}

// ---- h-vector oracle -------------------------------------------------------
// Independent route to simplicial membership: compute the h-vector by the
// alternating binomial sum, demand palindromic symmetry, and check that the
// successive differences of its first half form an M-sequence.

std::vector<Int> oracle_h_vector(const FVector& f) {
  const int d = f.dimension();
  std::vector<Int> h(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i) {
      const Int faces = i == 0 ? Int(1) : f[i - 1];
      const Int term = binomial(d - i, k - i) * faces;
      h[static_cast<std::size_t>(k)] += (k - i) % 2 == 0 ? term : -term;
    }
  return h;
}

bool oracle_m_sequence(const std::vector<Int>& g) {
  if (g.empty() || g.front() != 1) return false;
  for (const Int& e : g)
    if (e < 0) return false;
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    if (g[i + 1] > macaulay_pseudopower(g[i], static_cast<int>(i))) return false;
  return true;
}

bool oracle_simplicial(const FVector& f) {
  const int d = f.dimension();
  const std::vector<Int> h = oracle_h_vector(f);
  for (int k = 0; k <= d; ++k)
    if (h[static_cast<std::size_t>(k)] != h[static_cast<std::size_t>(d - k)]) return false;
  std::vector<Int> g;
  g.push_back(h[0]);
  for (int j = 1; j <= d / 2; ++j)
    g.push_back(h[static_cast<std::size_t>(j)] - h[static_cast<std::size_t>(j - 1)]);
  return oracle_m_sequence(g);
}

GVector random_gvector(std::mt19937& rng, int d, int cap) {
  std::vector<Int> entries{1};
  for (int i = 1; i <= d / 2; ++i) {
    Int hi = std::min<Int>(cap, i == 1 ? Int(cap) : macaulay_pseudopower(entries.back(), i - 1));
    std::uniform_int_distribution<long long> dist(0, hi.convert_to<long long>());
    entries.emplace_back(dist(rng));
  }
  return GVector(d, std::move(entries));
}

}  // namespace

TEST_CASE("h-vector oracle reproduces hand computations") {
  CHECK(oracle_h_vector(FVector({4, 6, 4})) == std::vector<Int>({1, 1, 1, 1}));
  CHECK(oracle_h_vector(FVector({6, 12, 8})) == std::vector<Int>({1, 3, 3, 1}));
  CHECK(oracle_h_vector(FVector({6, 11, 7})) == std::vector<Int>({1, 3, 2, 1}));
}

TEST_CASE("pseudopower equals the brute-force multicomplex maximum") {
  for (int i = 1; i <= 3; ++i)
    for (int a = 1; a <= 5; ++a) {
      const int v = min_vars(a, i);
      CHECK(macaulay_pseudopower(a, i) == bruteforce_pseudopower(a, i, v));
      if (binomial(v + i, i) <= 12)  // keep the subset count tame
        CHECK(macaulay_pseudopower(a, i) == bruteforce_pseudopower(a, i, v + 1));
    }
}

TEST_CASE("pseudopower known values") {
  for (int a = 0; a <= 40; ++a) CHECK(macaulay_pseudopower(a, 1) == Int(a) * (a + 1) / 2);
  for (int i = 1; i <= 6; ++i) CHECK(macaulay_pseudopower(1, i) == 1);
  for (int i = 1; i <= 6; ++i) CHECK(macaulay_pseudopower(0, i) == 0);
  CHECK(macaulay_pseudopower(4, 2) == 5);
  CHECK(macaulay_pseudopower(7, 3) == 9);
  CHECK(macaulay_pseudopower(10, 3) == 15);
  CHECK(macaulay_pseudopower(1225, 2) == 20825);
  CHECK_THROWS_AS(macaulay_pseudopower(-1, 2), error);
  CHECK_THROWS_AS(macaulay_pseudopower(4, 0), error);
}

TEST_CASE("pseudopower is monotone in the argument") {
  for (int i = 1; i <= 4; ++i)
    for (int a = 0; a < 60; ++a)
      CHECK(macaulay_pseudopower(a + 1, i) >= macaulay_pseudopower(a, i));
}

TEST_CASE("m-sequence test against the inline oracle") {
  CHECK(is_m_sequence(std::vector<Int>{1}));
  CHECK(is_m_sequence(std::vector<Int>{1, 0, 0}));
  CHECK_FALSE(is_m_sequence(std::vector<Int>{1, 0, 1}));
  CHECK(is_m_sequence(std::vector<Int>{1, 3, 5, 7}));
  CHECK_FALSE(is_m_sequence(std::vector<Int>{1, 3, 5, 8}));
  CHECK(is_m_sequence(std::vector<Int>{1, 4, 10, 20}));
  CHECK_FALSE(is_m_sequence(std::vector<Int>{1, 4, 10, 21}));
  CHECK_FALSE(is_m_sequence(std::vector<Int>{2, 1}));
  CHECK_FALSE(is_m_sequence(std::vector<Int>{1, -1}));
  CHECK_FALSE(is_m_sequence(std::vector<Int>{}));

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(0, 6);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Int> g{1};
    const int len = 1 + trial % 4;
    for (int i = 0; i < len; ++i) g.emplace_back(dist(rng));
    CHECK(is_m_sequence(g) == oracle_m_sequence(g));
  }
}

TEST_CASE("g-vector construction is validated") {
  const GVector g(4, {1, 2, 3});
  CHECK(g.dimension() == 4);
  CHECK(g.str() == "(1,2,3)");
  CHECK(is_m_sequence(g));
  CHECK_FALSE(is_m_sequence(GVector(4, {1, 2, 4})));
  CHECK_THROWS_AS(GVector(1, {1}), dimension_error);
  CHECK_THROWS_AS(GVector(4, {1, 2}), error);
  CHECK_THROWS_AS(GVector(4, {2, 0, 0}), error);
}

TEST_CASE("dimension-4 coordinate change in closed form") {
  for (int g1 = 0; g1 <= 5; ++g1)
    for (int g2 = 0; g2 <= 5; ++g2) {
      const GVector g(4, {1, g1, g2});
      const FVector expected(
          {5 + g1, 10 + 4 * g1 + g2, 10 + 6 * g1 + 2 * g2, 5 + 3 * g1 + g2});
      CHECK(g_to_f(g) == expected);
    }
}

TEST_CASE("dimension-3 coordinate change in closed form") {
  for (int g1 = 0; g1 <= 10; ++g1)
    CHECK(g_to_f(GVector(3, {1, g1})) == FVector({4 + g1, 6 + 3 * g1, 4 + 2 * g1}));
}

TEST_CASE("coordinate change round-trips") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dist(0, 30);
  for (int d = 2; d <= 9; ++d)
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Int> entries{1};
      for (int i = 1; i <= d / 2; ++i) entries.emplace_back(dist(rng));
      const GVector g(d, entries);
      const FToGResult back = f_to_g(g_to_f(g));
      REQUIRE(back.status == FToGStatus::Ok);
      CHECK(back.g.value() == g);
    }
}

TEST_CASE("vectors off the even-part subspace are flagged") {
  CHECK(f_to_g(FVector({6, 11, 7})).status == FToGStatus::NotInSubspace);
  CHECK(f_to_g(FVector({8, 16, 14, 6})).status == FToGStatus::NotInSubspace);
  CHECK(f_to_g(FVector({8, 12, 6})).status == FToGStatus::NotInSubspace);
  CHECK_THROWS_AS(f_to_g(FVector({2})), dimension_error);
}

TEST_CASE("integer points of the subspace always have integer coordinates") {
  // The triangular basis has unit pivots, so the non-lattice status can
  // never fire for integer input.  Sweep every integer subspace point in a
  // box to document that: in dimension 3 the subspace is the line
  // (a, 3a-6, 2a-4), in dimension 4 the plane (f0, f1, 2f1-2f0, f1-f0).
  for (int a = -5; a <= 30; ++a) {
    const FToGResult r = f_to_g(FVector({a, 3 * a - 6, 2 * a - 4}));
    CHECK(r.status == FToGStatus::Ok);
  }
  for (int f0 = -3; f0 <= 12; ++f0)
    for (int f1 = -3; f1 <= 40; ++f1) {
      const FToGResult r = f_to_g(FVector({f0, f1, 2 * f1 - 2 * f0, f1 - f0}));
      CHECK(r.status == FToGStatus::Ok);
    }
}

TEST_CASE("simplicial membership matches the h-vector oracle") {
  CHECK(simplicial_member(FVector({4, 6, 4})));
  CHECK(simplicial_member(FVector({6, 12, 8})));
  CHECK(simplicial_member(FVector({8, 18, 12})));
  CHECK(simplicial_member(FVector({7, 21, 28, 14})));
  CHECK_FALSE(simplicial_member(FVector({8, 12, 6})));
  CHECK_FALSE(simplicial_member(FVector({6, 11, 7})));

  std::mt19937 rng(23);
  for (int d = 3; d <= 6; ++d) {
    std::uniform_int_distribution<int> dist(1, 40);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Int> entries;
      for (int i = 0; i < d; ++i) entries.emplace_back(dist(rng));
      const FVector f(std::move(entries));
      CHECK(simplicial_member(f) == oracle_simplicial(f));
    }
    // Genuine members and small perturbations of them.
    for (int trial = 0; trial < 100; ++trial) {
      const FVector f = g_to_f(random_gvector(rng, d, 12));
      CHECK(simplicial_member(f));
      CHECK(oracle_simplicial(f));
      std::vector<Int> bumped = f.entries();
      bumped[static_cast<std::size_t>(trial % d)] += 1;
      const FVector g(std::move(bumped));
      CHECK(simplicial_member(g) == oracle_simplicial(g));
    }
  }
}

TEST_CASE("g-coordinates add under simplex-base reduced addition") {
  const FVector octahedron({6, 12, 8});
  const ReducedSum sum = reduced_add(octahedron, octahedron, ReductionBase::simplex(3));
  CHECK(sum.value == FVector({8, 18, 12}));
  const FToGResult r = f_to_g(sum.value);
  REQUIRE(r.status == FToGStatus::Ok);
  CHECK(r.g.value() == GVector(3, {1, 4}));
}
