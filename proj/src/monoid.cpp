#include "fvec/monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace fvec {

namespace {

bool dominates(const FVector& f, const FVector& g) {
  for (int i = 0; i < f.dimension(); ++i)
    if (f[i] < g[i]) return false;
  return true;
}

}  // namespace

bool GeneratorSet::contains(const FVector& f) const {
  return std::binary_search(generators.begin(), generators.end(), f);
}

bool euler_monoid_member(const FVector& f) {
  return euler_defect(f) == 0 && dominates(f, simplex_fvector(f.dimension()));
}

GeneratorSet euler_monoid_hilbert_basis(int d) {
  if (d < 2) throw dimension_error("the Hilbert basis formula needs dimension >= 2");
  FVector apex = simplex_fvector(d);
  GeneratorSet out;
  out.d = d;
  for (int i = 0; i < d; i += 2)
    for (int j = 1; j < d; j += 2) {
      std::vector<Int> e = apex.entries();
      e[static_cast<std::size_t>(i)] += 1;
      e[static_cast<std::size_t>(j)] += 1;
      out.generators.emplace_back(std::move(e));
    }
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

namespace {

/// Walks the box of excess vectors over the apex with entries in
/// 0..radius, in lexicographic order, calling visit on each member of the
/// Euler monoid.
template <typename Visit>
void for_each_member_in_box(const FVector& apex, int radius, Visit visit) {
  int d = apex.dimension();
  std::vector<int> excess(static_cast<std::size_t>(d), 0);
  for (;;) {
    // The Euler defect of apex+excess is the alternating sum of the excess.
    long long defect = 0;
    for (int i = 0; i < d; ++i) defect += (i % 2 ? -1 : 1) * excess[static_cast<std::size_t>(i)];
    if (defect == 0) {
      std::vector<Int> e = apex.entries();
      for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] += excess[static_cast<std::size_t>(i)];
      visit(FVector(std::move(e)));
    }
    int pos = d - 1;
    while (pos >= 0 && excess[static_cast<std::size_t>(pos)] == radius) {
      excess[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++excess[static_cast<std::size_t>(pos)];
  }
}

}  // namespace

GeneratorSet hilbert_basis_bruteforce(int d, int radius) {
  if (d < 2) throw dimension_error("Hilbert basis search needs dimension >= 2");
  if (radius < 1) throw error("Hilbert basis search needs radius >= 1");
  FVector apex = simplex_fvector(d);
  std::vector<FVector> members;
  for_each_member_in_box(apex, radius, [&](FVector f) { members.push_back(std::move(f)); });
  std::sort(members.begin(), members.end());

  // x is reducible iff x = y + z - apex for members y, z other than the
  // apex; equivalently some member y with apex < y < x in the dominance
  // order (z = x - y + apex is then automatically a member).
  GeneratorSet out;
  out.d = d;
  for (const FVector& x : members) {
    if (x == apex) continue;
    bool reducible = false;
    for (const FVector& y : members) {
      if (y == apex || y == x || !dominates(x, y)) continue;
      reducible = true;
      break;
    }
    if (!reducible) out.generators.push_back(x);
  }
  return out;
}

std::vector<FVector> euler_monoid_decompose(const FVector& f) {
  if (!euler_monoid_member(f)) throw error("cannot decompose a non-member of the Euler monoid");
  int d = f.dimension();
  FVector apex = simplex_fvector(d);
  std::vector<Int> rest = f.entries();
  std::vector<FVector> parts;
  for (;;) {
    int even = -1, odd = -1;
    for (int i = 0; i < d && (even < 0 || odd < 0); ++i) {
      if (rest[static_cast<std::size_t>(i)] <= apex[i]) continue;
      if (i % 2 == 0 && even < 0) even = i;
      if (i % 2 == 1 && odd < 0) odd = i;
    }
    if (even < 0 && odd < 0) break;  // reached the apex
    // Equal excess on even and odd indices (the Euler relation) guarantees
    // both sides are available whenever either is.
    if (even < 0 || odd < 0)
      throw std::logic_error("unbalanced excess while decomposing an Euler monoid member");
    rest[static_cast<std::size_t>(even)] -= 1;
    rest[static_cast<std::size_t>(odd)] -= 1;
    std::vector<Int> gen = apex.entries();
    gen[static_cast<std::size_t>(even)] += 1;
    gen[static_cast<std::size_t>(odd)] += 1;
    parts.emplace_back(std::move(gen));
  }
  return parts;
}

std::optional<std::string> steinitz_violation(const FVector& f) {
  if (f.dimension() != 3) throw dimension_error("the Steinitz conditions apply to dimension 3");
  if (f[1] != f[0] + f[2] - 2) return "f1 = f0 + f2 - 2";
  if (f[2] > 2 * f[0] - 4) return "f2 <= 2 f0 - 4";
  if (f[0] > 2 * f[2] - 4) return "f0 <= 2 f2 - 4";
  return std::nullopt;
}

bool steinitz_member(const FVector& f) { return !steinitz_violation(f).has_value(); }

GeneratorSet steinitz_hilbert_basis() {
  GeneratorSet out;
  out.d = 3;
  out.generators = {FVector({5, 8, 5}), FVector({5, 9, 6}), FVector({6, 9, 5})};
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

GeneratorSet steinitz_hilbert_basis_bruteforce(int bound) {
  if (bound < 4) throw error("Steinitz basis search needs bound >= 4");
  std::vector<FVector> members;
  for (int a = 4; a <= bound; ++a)
    for (int c = 4; c <= bound; ++c) {
      FVector f({a, a + c - 2, c});
      if (steinitz_member(f)) members.push_back(f);
    }
  std::sort(members.begin(), members.end());
  FVector apex = simplex_fvector(3);
  GeneratorSet out;
  out.d = 3;
  for (const FVector& x : members) {
    if (x == apex) continue;
    bool reducible = false;
    for (const FVector& y : members) {
      if (y == apex || y == x || !dominates(x, y)) continue;
      // Unlike the Euler monoid, the complement must be re-checked: the
      // Steinitz set is carved out by inequalities.
      std::vector<Int> z = x.entries();
      for (int i = 0; i < 3; ++i) z[static_cast<std::size_t>(i)] += apex[i] - y[i];
      if (steinitz_member(FVector(std::move(z)))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.generators.push_back(x);
  }
  return out;
}

bool polygon_member(const FVector& f) {
  if (f.dimension() != 2) throw dimension_error("the polygon characterization applies to dimension 2");
  return f[0] == f[1] && f[0] >= 3;
}

}  // namespace fvec
