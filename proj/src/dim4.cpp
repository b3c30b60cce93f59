#include "fvec/dim4.hpp"

#include "fvec/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace fvec {

namespace {

void require_dimension_4(const FVector& f, const char* what) {
  if (f.dimension() != 4) throw dimension_error(std::string(what) + " applies to dimension 4");
}

}  // namespace

Rat fatness(const FVector& f) {
  require_dimension_4(f, "fatness");
  Int denominator = f[0] + f[3] - 10;
  if (denominator <= 0)
    throw undefined_fatness_error("fatness undefined: f0 + f3 <= 10 for " + f.str());
  return Rat(f[1] + f[2] - 20) / Rat(denominator);
}

std::vector<std::string> ConditionReport::failed_names() const {
  std::vector<std::string> out;
  for (const ConditionCheck& c : checks)
    if (!c.holds) out.push_back(c.name);
  return out;
}

ConditionReport necessary_conditions_4(const FVector& f) {
  require_dimension_4(f, "the necessary-condition filter");
  ConditionReport report{f, {}, Verdict::NotExcluded};
  auto add = [&](std::string name, const Rat& slack) {
    report.checks.push_back({std::move(name), slack >= 0, slack});
  };
  Int defect = euler_defect(f);
  add("euler", -Rat(abs(defect)));
  add("f0 >= 5", Rat(f[0] - 5));
  add("f3 >= 5", Rat(f[3] - 5));
  add("f1 >= 2 f0", Rat(f[1] - 2 * f[0]));
  add("f2 >= 2 f3", Rat(f[2] - 2 * f[3]));
  add("f1 <= C(f0, 2)", Rat(binomial(f[0], 2) - f[1]));
  add("f2 <= C(f3, 2)", Rat(binomial(f[3], 2) - f[2]));
  if (f[0] + f[3] > 10) add("fatness >= 5/2", fatness(f) - Rat(5, 2));
  for (const ConditionCheck& c : report.checks)
    if (!c.holds) report.verdict = Verdict::Excluded;
  return report;
}

Int cube_root_ceil(const Int& m) {
  if (m <= 0) {
    // Smallest t with t^3 >= m is -u for the largest u with u^3 <= -m.
    Int target = -m, u = 0, hi = 1;
    while (hi * hi * hi <= target) hi <<= 1;
    Int lo = 0;  // invariant: lo^3 <= target < hi^3
    while (hi - lo > 1) {
      Int mid = (lo + hi) / 2;
      (mid * mid * mid <= target ? lo : hi) = mid;
    }
    u = lo;
    return -u;
  }
  Int hi = 1;
  while (hi * hi * hi < m) hi <<= 1;
  Int lo = 0;  // invariant: lo^3 < m <= hi^3
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    (mid * mid * mid < m ? lo : hi) = mid;
  }
  return hi;
}

Int kst_edge_bound(const Int& f0, const Int& f3) {
  if (f0 < 1 || f3 < 1) throw error("the incidence bound needs f0, f3 >= 1");
  // ceil(cbrt(2 (f0-2)^3 f3^2)) + 2 f3, exactly.
  Int cube = 2 * (f0 - 2) * (f0 - 2) * (f0 - 2) * f3 * f3;
  return cube_root_ceil(cube) + 2 * f3;
}

Int small_facet_bound(const Int& f0, const Int& f3) {
  if (f0 < 1) throw error("the small-facet bound needs f0 >= 1");
  if (f0 > f3) throw error("the small-facet bound assumes f0 <= f3");
  // Largest n with (n-2)^3 f3 < 8 f0^3; the left side is monotone in n.
  Int target = 8 * f0 * f0 * f0, u = 0;
  while ((u + 1) * (u + 1) * (u + 1) * f3 < target) ++u;
  return u + 2;
}

FVector modification_delta(const Int& n) {
  if (n < 4) throw error("the modification bound needs a facet with n >= 4 vertices");
  return FVector({3, n + 10, 3 * n + 10, 2 * n});
}

Int approx_sum_tolerance(const Int& a) {
  if (a < 1) throw error("the approximation tolerance needs a >= 1");
  // Largest t with (t-33)^3 < 1728 a^2.
  return cube_root_ceil(1728 * a * a) - 1 + 33;
}

bool check_approximate_closure(const FVector& fp, const FVector& fpp, const FVector& fq) {
  require_dimension_4(fp, "approximate closure");
  require_dimension_4(fpp, "approximate closure");
  require_dimension_4(fq, "approximate closure");
  for (int i = 0; i < 4; ++i) {
    Int deviation = abs(fq[i] - (fp[i] + fpp[i]));
    if (deviation > approx_sum_tolerance(fq[i])) return false;
  }
  return true;
}

bool FVectorDataset::contains(const FVector& f) const {
  return std::binary_search(vectors.begin(), vectors.end(), f);
}

bool FVectorDataset::in_window(const FVector& f) const {
  if (!f03_window) return true;
  return f[0] + f[f.dimension() - 1] <= *f03_window;
}

FVectorDataset make_dataset(int d, std::vector<FVector> vectors, std::optional<Int> f03_window,
                            bool complete) {
  if (d < 2) throw dimension_error("datasets need dimension >= 2");
  for (const FVector& f : vectors) {
    if (f.dimension() != d) throw dimension_error("dataset vector of wrong dimension: " + f.str());
    if (euler_defect(f) != 0)
      throw error("dataset vector off the Euler hyperplane: " + f.str());
  }
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  return FVectorDataset{d, std::move(vectors), std::move(f03_window), complete};
}

namespace {

int thread_count() {
  if (const char* env = std::getenv("FVEC_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return std::min(n, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(std::min(hw, 16u)) : 1;
}

/// Runs fn(start, end) over a partition of [0, total) on the configured
/// number of threads.
template <typename Fn>
void parallel_ranges(std::size_t total, Fn fn) {
  int threads = thread_count();
  if (threads <= 1 || total < 128) {
    fn(0, std::size_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (total + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
  for (int t = 0; t < threads; ++t) {
    std::size_t start = static_cast<std::size_t>(t) * chunk;
    std::size_t end = std::min(total, start + chunk);
    if (start >= end) break;
    pool.emplace_back([=]() { fn(t, start, end); });
  }
  for (std::thread& th : pool) th.join();
}

/// Enumerates unordered index pairs (i, j), i <= j, as a flat index.
std::pair<std::size_t, std::size_t> unrank_pair(std::size_t flat, std::size_t n) {
  // Row i (0-based) holds n - i pairs (i, i), ..., (i, n-1).
  std::size_t i = 0, row = n;
  while (flat >= row) {
    flat -= row;
    --row;
    ++i;
  }
  return {i, i + flat};
}

}  // namespace

ClosureReport closure_report(const FVectorDataset& ds, const ReductionBase& base) {
  if (base.dimension() != ds.d)
    throw dimension_error("reduction base dimension does not match the dataset");
  const std::size_t n = ds.vectors.size();
  const std::size_t total = n * (n + 1) / 2;
  ClosureReport report;
  report.base = base.variant();
  report.pairs_checked = total;

  const int threads = 64;  // fixed bucket count, independent of FVEC_THREADS
  std::vector<std::vector<AbsentSum>> absent_parts(threads);
  std::vector<std::size_t> window_parts(threads, 0);
  parallel_ranges(total, [&](int slot, std::size_t start, std::size_t end) {
    auto [i, j] = unrank_pair(start, n);
    for (std::size_t flat = start; flat < end; ++flat) {
      ReducedSum s = reduced_add(ds.vectors[i], ds.vectors[j], base);
      if (ds.in_window(s.value)) {
        ++window_parts[static_cast<std::size_t>(slot)];
        if (!ds.contains(s.value))
          absent_parts[static_cast<std::size_t>(slot)].push_back(
              {ds.vectors[i], ds.vectors[j], s.value});
      }
      if (++j == n) j = ++i;
    }
  });
  for (int t = 0; t < threads; ++t) {
    report.in_window += window_parts[static_cast<std::size_t>(t)];
    report.absent.insert(report.absent.end(), absent_parts[static_cast<std::size_t>(t)].begin(),
                         absent_parts[static_cast<std::size_t>(t)].end());
  }
  std::sort(report.absent.begin(), report.absent.end(),
            [](const AbsentSum& a, const AbsentSum& b) {
              if (a.x != b.x) return a.x < b.x;
              return a.y < b.y;
            });
  return report;
}

ApproximateSemigroupReport approximate_semigroup_check(const FVectorDataset& ds) {
  const std::size_t n = ds.vectors.size();
  const std::size_t total = n * (n + 1) / 2;
  // Tolerances per member, entrywise, computed once.
  std::vector<std::vector<Int>> tolerance(n);
  for (std::size_t u = 0; u < n; ++u)
    for (const Int& entry : ds.vectors[u].entries())
      tolerance[u].push_back(approx_sum_tolerance(entry));

  ApproximateSemigroupReport report;
  const int threads = 64;
  std::vector<std::vector<UnmatchedPair>> unmatched_parts(threads);
  std::vector<std::size_t> checked_parts(threads, 0);
  parallel_ranges(total, [&](int slot, std::size_t start, std::size_t end) {
    auto [i, j] = unrank_pair(start, n);
    for (std::size_t flat = start; flat < end; ++flat) {
      std::vector<Int> sum(static_cast<std::size_t>(ds.d));
      for (int k = 0; k < ds.d; ++k)
        sum[static_cast<std::size_t>(k)] = ds.vectors[i][k] + ds.vectors[j][k];
      FVector sum_vec(sum);
      if (ds.in_window(sum_vec)) {
        ++checked_parts[static_cast<std::size_t>(slot)];
        bool matched = false;
        for (std::size_t u = 0; u < n && !matched; ++u) {
          matched = true;
          for (int k = 0; k < ds.d; ++k) {
            Int deviation = abs(ds.vectors[u][k] - sum[static_cast<std::size_t>(k)]);
            if (deviation > tolerance[u][static_cast<std::size_t>(k)]) {
              matched = false;
              break;
            }
          }
        }
        if (!matched)
          unmatched_parts[static_cast<std::size_t>(slot)].push_back(
              {ds.vectors[i], ds.vectors[j], sum_vec});
      }
      if (++j == n) j = ++i;
    }
  });
  for (int t = 0; t < threads; ++t) {
    report.pairs_checked += checked_parts[static_cast<std::size_t>(t)];
    report.unmatched.insert(report.unmatched.end(),
                            unmatched_parts[static_cast<std::size_t>(t)].begin(),
                            unmatched_parts[static_cast<std::size_t>(t)].end());
  }
  std::sort(report.unmatched.begin(), report.unmatched.end(),
            [](const UnmatchedPair& a, const UnmatchedPair& b) {
              if (a.v != b.v) return a.v < b.v;
              return a.w < b.w;
            });
  return report;
}

}  // namespace fvec
