#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fvec/constructions.hpp"
#include "fvec/fvector.hpp"
#include "fvec/lattice.hpp"

using namespace fvec;

namespace {

// Closed forms for the triangularized family matrices, derived by hand from
// the one-pass row-subtraction rule and the binomial identities of the two
// row families.  Row 0 is always the extended simplex row; the later rows
// are pure binomial expressions.  These give an independent check of the
// triangularization output across dimensions.
Int tri_n_entry(int d, int k, int j) {
  if (k == 0) return binomial(d + 1, j);
  return binomial(d - k, d - j);
}

Int tri_m_entry(int d, int k, int j) {
  if (k == 0) return binomial(d + 1, j);
  return binomial(d - k + 1, j - k) - binomial(k, j - 1 - d + k);
}

ExtendedFVector random_affine_combination(std::mt19937& rng, const IntegerMatrix& basis) {
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<Int> coeffs(basis.rows());
  Int tail = 0;
  for (std::size_t r = 1; r < basis.rows(); ++r) {
    coeffs[r] = dist(rng);
    tail += coeffs[r];
  }
  coeffs[0] = 1 - tail;
  std::vector<Int> v(basis.cols(), 0);
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t c = 0; c < basis.cols(); ++c) v[c] += coeffs[r] * basis.at(r, c);
  return ExtendedFVector(std::move(v));
}

}  // namespace

TEST_CASE("matrix construction and access") {
  IntegerMatrix m(2, 3);
  CHECK(m.at(1, 2) == 0);
  m.at(1, 2) = 7;
  CHECK(m.row(1) == std::vector<Int>({0, 0, 7}));

  const IntegerMatrix f = IntegerMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(f.rows() == 2);
  CHECK(f.cols() == 2);
  CHECK(f.at(1, 0) == 3);
  CHECK_THROWS_AS(IntegerMatrix::from_rows({{1, 2}, {3}}), error);
}

TEST_CASE("matrix rendering") {
  CHECK(build_n_matrix(2).str() == "(1,3,3)\n(1,4,4)");
}

TEST_CASE("family matrices list the family rows") {
  for (int d = 2; d <= 8; ++d) {
    const IntegerMatrix n = build_n_matrix(d);
    REQUIRE(n.rows() == static_cast<std::size_t>(d));
    REQUIRE(n.cols() == static_cast<std::size_t>(d + 1));
    for (int k = 0; k < d; ++k) CHECK(n.row(static_cast<std::size_t>(k)) == pkd_fvector(k, d).entries());

    const IntegerMatrix m = build_m_matrix(d);
    REQUIRE(m.rows() == static_cast<std::size_t>(d / 2 + 1));
    REQUIRE(m.cols() == static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d / 2; ++k) CHECK(m.row(static_cast<std::size_t>(k)) == skd_fvector(k, d).entries());
  }
  CHECK_THROWS_AS(build_n_matrix(1), dimension_error);
  CHECK_THROWS_AS(build_m_matrix(1), dimension_error);
}

TEST_CASE("known matrix displays") {
  CHECK(build_n_matrix(3) == IntegerMatrix::from_rows({{1, 4, 6, 4}, {1, 5, 8, 5}, {1, 5, 9, 6}}));
  CHECK(triangularize_by_row_subtraction(build_n_matrix(3)) ==
        IntegerMatrix::from_rows({{1, 4, 6, 4}, {0, 1, 2, 1}, {0, 0, 1, 1}}));
  CHECK(build_m_matrix(4) ==
        IntegerMatrix::from_rows({{1, 5, 10, 10, 5}, {1, 6, 14, 16, 8}, {1, 6, 15, 18, 9}}));
  CHECK(triangularize_by_row_subtraction(build_m_matrix(4)) ==
        IntegerMatrix::from_rows({{1, 5, 10, 10, 5}, {0, 1, 4, 6, 3}, {0, 0, 1, 2, 1}}));
}

TEST_CASE("triangularization matches the binomial closed forms") {
  for (int d = 2; d <= 10; ++d) {
    const IntegerMatrix tn = triangularize_by_row_subtraction(build_n_matrix(d));
    for (std::size_t k = 0; k < tn.rows(); ++k)
      for (std::size_t j = 0; j < tn.cols(); ++j)
        CHECK(tn.at(k, j) == tri_n_entry(d, static_cast<int>(k), static_cast<int>(j)));

    const IntegerMatrix tm = triangularize_by_row_subtraction(build_m_matrix(d));
    for (std::size_t k = 0; k < tm.rows(); ++k)
      for (std::size_t j = 0; j < tm.cols(); ++j)
        CHECK(tm.at(k, j) == tri_m_entry(d, static_cast<int>(k), static_cast<int>(j)));
  }
}

TEST_CASE("triangularization is a plain one-pass row subtraction") {
  const IntegerMatrix t =
      triangularize_by_row_subtraction(IntegerMatrix::from_rows({{1, 1}, {2, 3}, {4, 7}}));
  CHECK(t == IntegerMatrix::from_rows({{1, 1}, {1, 2}, {2, 4}}));
}

TEST_CASE("raw rows are integer combinations of the triangular rows") {
  for (int d = 2; d <= 7; ++d) {
    const IntegerMatrix raw = build_n_matrix(d);
    const IntegerMatrix tri = triangularize_by_row_subtraction(raw);
    for (std::size_t r = 0; r < raw.rows(); ++r) {
      const auto coeffs = solve_row_combination(tri, raw.row(r));
      REQUIRE(coeffs.has_value());
      for (const Rat& c : *coeffs) CHECK(denominator(c) == 1);
    }
  }
}

TEST_CASE("echelon solves are exact") {
  const IntegerMatrix tri = triangularize_by_row_subtraction(build_n_matrix(3));
  std::vector<Int> target(4, 0);
  for (std::size_t j = 0; j < 4; ++j) target[j] = tri.at(0, j) + 2 * tri.at(2, j);
  const auto coeffs = solve_row_combination(tri, target);
  REQUIRE(coeffs.has_value());
  CHECK(*coeffs == std::vector<Rat>({1, 0, 2}));

  CHECK_FALSE(solve_row_combination(tri, {0, 0, 0, 1}).has_value());

  const IntegerMatrix diag = IntegerMatrix::from_rows({{2, 0}, {0, 3}});
  const auto rational = solve_row_combination(diag, {1, 2});
  REQUIRE(rational.has_value());
  CHECK(*rational == std::vector<Rat>({Rat(1, 2), Rat(2, 3)}));
}

TEST_CASE("echelon preconditions are enforced") {
  CHECK_THROWS_AS(solve_row_combination(IntegerMatrix::from_rows({{0, 0}}), {1, 1}), error);
  CHECK_THROWS_AS(solve_row_combination(IntegerMatrix::from_rows({{0, 1}, {1, 0}}), {1, 1}), error);
  CHECK_THROWS_AS(solve_row_combination(build_n_matrix(3), {1, 0}), error);
}

TEST_CASE("integer affine combinations are lattice members") {
  std::mt19937 rng(7);
  for (int d = 2; d <= 6; ++d) {
    const IntegerMatrix n = build_n_matrix(d);
    const IntegerMatrix m = build_m_matrix(d);
    for (int trial = 0; trial < 40; ++trial) {
      const ExtendedFVector nv = random_affine_combination(rng, n);
      REQUIRE(nv[0] == 1);
      CHECK(affine_lattice_member(nv, n));

      const ExtendedFVector mv = random_affine_combination(rng, m);
      CHECK(affine_lattice_member(mv, m));
      // The even-part subspace sits inside the Euler hyperplane.
      CHECK(affine_lattice_member(mv, n));
    }
  }
}

TEST_CASE("lattice coordinates reconstruct the vector") {
  std::mt19937 rng(11);
  for (int d = 2; d <= 6; ++d) {
    const IntegerMatrix basis = build_m_matrix(d);
    const IntegerMatrix tri = triangularize_by_row_subtraction(basis);
    for (int trial = 0; trial < 25; ++trial) {
      const ExtendedFVector v = random_affine_combination(rng, basis);
      const auto coeffs = affine_lattice_coordinates(v, basis);
      REQUIRE(coeffs.has_value());
      CHECK((*coeffs)[0] == 1);
      std::vector<Int> rebuilt(tri.cols(), 0);
      for (std::size_t r = 0; r < tri.rows(); ++r)
        for (std::size_t c = 0; c < tri.cols(); ++c) rebuilt[c] += (*coeffs)[r] * tri.at(r, c);
      CHECK(rebuilt == v.entries());
    }
  }
}

TEST_CASE("off-hyperplane vectors are rejected") {
  const IntegerMatrix n = build_n_matrix(3);
  CHECK_FALSE(affine_lattice_member(ExtendedFVector({1, 5, 9, 5}), n));
  CHECK_FALSE(affine_lattice_coordinates(ExtendedFVector({1, 5, 9, 5}), n).has_value());
  CHECK(affine_lattice_member(ExtendedFVector({1, 5, 9, 6}), n));
}

TEST_CASE("euler lattice membership is the vanishing defect") {
  std::mt19937 rng(13);
  for (int d = 2; d <= 6; ++d) {
    std::uniform_int_distribution<int> dist(-10, 40);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Int> entries;
      for (int i = 0; i < d; ++i) entries.emplace_back(dist(rng));
      const FVector f(std::move(entries));
      CHECK(euler_lattice_member(f) == (euler_defect(f) == 0));
    }
  }
}

TEST_CASE("even-part lattice membership in dimension 3") {
  // Exactly the simplicial 3-polytope line (a, 3a-6, 2a-4).
  for (int a = 4; a <= 30; ++a) {
    CHECK(ds_lattice_member(FVector({a, 3 * a - 6, 2 * a - 4})));
    CHECK_FALSE(ds_lattice_member(FVector({a, 3 * a - 6, 2 * a - 3})));
  }
  CHECK_FALSE(ds_lattice_member(FVector({8, 12, 6})));
  CHECK_FALSE(ds_lattice_member(FVector({6, 11, 7})));
}

TEST_CASE("even-part lattice membership in dimension 4") {
  CHECK(ds_lattice_member(FVector({5, 10, 10, 5})));
  CHECK(ds_lattice_member(FVector({6, 14, 16, 8})));
  CHECK(ds_lattice_member(FVector({6, 15, 18, 9})));
  CHECK(ds_lattice_member(FVector({7, 21, 28, 14})));
  // The even-part relations pin f_2 to 2 f_1 - 2 f_0 in dimension 4.
  CHECK(ds_lattice_member(FVector({10, 20, 20, 10})));
  CHECK_FALSE(ds_lattice_member(FVector({8, 16, 14, 6})));
  CHECK_FALSE(ds_lattice_member(FVector({6, 14, 17, 9})));
  CHECK_FALSE(ds_lattice_member(FVector({16, 32, 24, 8})));
}
