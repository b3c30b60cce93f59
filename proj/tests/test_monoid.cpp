#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fvec/fvector.hpp"
#include "fvec/monoid.hpp"

using namespace fvec;

namespace {

// Inline re-statement of the dimension-3 characterization, used as the
// oracle for the library predicate.
bool oracle_steinitz(const Int& f0, const Int& f1, const Int& f2) {
  return f1 == f0 + f2 - 2 && f2 <= 2 * f0 - 4 && f0 <= 2 * f2 - 4;
}

// Inline re-statement of the higher-dimensional monoid membership.
bool oracle_euler_member(const FVector& f) {
  if (euler_defect(f) != 0) return false;
  const FVector simplex = simplex_fvector(f.dimension());
  for (int i = 0; i < f.dimension(); ++i)
    if (f[i] < simplex[i]) return false;
  return true;
}

FVector random_monoid_member(std::mt19937& rng, int d, int parts) {
  std::vector<Int> entries = simplex_fvector(d).entries();
  std::uniform_int_distribution<int> even(0, (d - 1) / 2);
  std::uniform_int_distribution<int> odd(0, d / 2 - 1);
  for (int p = 0; p < parts; ++p) {
    entries[static_cast<std::size_t>(2 * even(rng))] += 1;
    entries[static_cast<std::size_t>(2 * odd(rng) + 1)] += 1;
  }
  return FVector(std::move(entries));
}

}  // namespace

TEST_CASE("euler monoid membership oracle") {
  std::mt19937 rng(20260814);
  for (int d = 2; d <= 6; ++d) {
    std::uniform_int_distribution<int> dist(1, 30);
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<Int> entries;
      for (int i = 0; i < d; ++i) entries.emplace_back(dist(rng));
      const FVector f(std::move(entries));
      CHECK(euler_monoid_member(f) == oracle_euler_member(f));
    }
    // Simplex and every basis vector are members.
    CHECK(euler_monoid_member(simplex_fvector(d)));
    for (const FVector& g : euler_monoid_hilbert_basis(d).generators) CHECK(euler_monoid_member(g));
  }
}

TEST_CASE("hilbert basis sizes and known bases") {
  for (int d = 2; d <= 9; ++d) {
    const GeneratorSet basis = euler_monoid_hilbert_basis(d);
    CHECK(basis.d == d);
    CHECK(basis.generators.size() ==
          static_cast<std::size_t>(((d + 1) / 2) * (d / 2)));
  }

  const GeneratorSet d2 = euler_monoid_hilbert_basis(2);
  REQUIRE(d2.generators.size() == 1);
  CHECK(d2.generators[0] == FVector({4, 4}));

  const GeneratorSet d3 = euler_monoid_hilbert_basis(3);
  REQUIRE(d3.generators.size() == 2);
  CHECK(d3.generators[0] == FVector({4, 7, 5}));
  CHECK(d3.generators[1] == FVector({5, 7, 4}));

  const GeneratorSet d4 = euler_monoid_hilbert_basis(4);
  REQUIRE(d4.generators.size() == 4);
  CHECK(d4.contains(FVector({6, 11, 10, 5})));
  CHECK(d4.contains(FVector({6, 10, 10, 6})));
  CHECK(d4.contains(FVector({5, 11, 11, 5})));
  CHECK(d4.contains(FVector({5, 10, 11, 6})));

  CHECK_THROWS_AS(euler_monoid_hilbert_basis(1), dimension_error);
}

TEST_CASE("closed-form basis equals the brute-force basis in low dimensions") {
  CHECK(euler_monoid_hilbert_basis(2) == hilbert_basis_bruteforce(2, 3));
  CHECK(euler_monoid_hilbert_basis(3) == hilbert_basis_bruteforce(3, 3));
  CHECK(euler_monoid_hilbert_basis(4) == hilbert_basis_bruteforce(4, 3));
}

TEST_CASE("generator-set membership lookup") {
  const GeneratorSet basis = euler_monoid_hilbert_basis(3);
  CHECK(basis.contains(FVector({4, 7, 5})));
  CHECK_FALSE(basis.contains(FVector({4, 6, 4})));
}

TEST_CASE("decomposition recombines to the input") {
  std::mt19937 rng(99);
  for (int d = 2; d <= 6; ++d) {
    const GeneratorSet basis = euler_monoid_hilbert_basis(d);
    const ReductionBase base = ReductionBase::simplex(d);
    for (int trial = 0; trial < 60; ++trial) {
      const FVector f = random_monoid_member(rng, d, trial % 7);
      REQUIRE(euler_monoid_member(f));
      const std::vector<FVector> parts = euler_monoid_decompose(f);
      FVector total = simplex_fvector(d);
      for (const FVector& part : parts) {
        CHECK(basis.contains(part));
        total = reduced_add(total, part, base).value;
      }
      CHECK(total == f);
    }
  }
  CHECK(euler_monoid_decompose(simplex_fvector(4)).empty());
  CHECK_THROWS_AS(euler_monoid_decompose(FVector({4, 6, 5})), error);
}

TEST_CASE("dimension-3 membership matches the inline conditions") {
  for (int a = 1; a <= 25; ++a)
    for (int c = 1; c <= 25; ++c) {
      CHECK(steinitz_member(FVector({a, a + c - 2, c})) == oracle_steinitz(a, a + c - 2, c));
      CHECK_FALSE(steinitz_member(FVector({a, a + c - 1, c})));
    }
  CHECK_THROWS_AS(steinitz_member(FVector({4, 4})), dimension_error);
  CHECK_THROWS_AS(steinitz_member(FVector({5, 10, 10, 5})), dimension_error);
}

TEST_CASE("violation strings report the first failed condition") {
  CHECK(steinitz_violation(FVector({4, 6, 4})) == std::nullopt);
  CHECK(steinitz_violation(FVector({5, 9, 5})).value() == "f1 = f0 + f2 - 2");
  CHECK(steinitz_violation(FVector({5, 10, 7})).value() == "f2 <= 2 f0 - 4");
  CHECK(steinitz_violation(FVector({7, 10, 5})).value() == "f0 <= 2 f2 - 4");
  // Both inequalities fail; the f2 bound is reported first.
  CHECK(steinitz_violation(FVector({4, 7, 5})).value() == "f2 <= 2 f0 - 4");
}

TEST_CASE("dimension-3 basis, closed form and brute force") {
  const GeneratorSet basis = steinitz_hilbert_basis();
  REQUIRE(basis.generators.size() == 3);
  CHECK(basis.contains(FVector({5, 8, 5})));
  CHECK(basis.contains(FVector({5, 9, 6})));
  CHECK(basis.contains(FVector({6, 9, 5})));
  CHECK(basis == steinitz_hilbert_basis_bruteforce(12));
}

TEST_CASE("dimension-3 members are closed under simplex-base addition") {
  std::vector<FVector> members;
  for (int a = 4; a <= 12; ++a)
    for (int c = 4; c <= 12; ++c)
      if (oracle_steinitz(a, a + c - 2, c)) members.push_back(FVector({a, a + c - 2, c}));
  REQUIRE(members.size() > 20);
  const ReductionBase base = ReductionBase::simplex(3);
  for (const FVector& x : members)
    for (const FVector& y : members) {
      const ReducedSum sum = reduced_add(x, y, base);
      REQUIRE(sum.fvector_candidate);
      CHECK(steinitz_member(sum.value));
    }
}

TEST_CASE("dimension-2 membership") {
  for (int n = 3; n <= 12; ++n) CHECK(polygon_member(FVector({n, n})));
  CHECK_FALSE(polygon_member(FVector({2, 2})));
  CHECK_FALSE(polygon_member(FVector({3, 4})));
  CHECK_THROWS_AS(polygon_member(FVector({4, 6, 4})), dimension_error);
}
