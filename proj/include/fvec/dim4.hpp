#pragma once

// Dimension-4 specifics: fatness, the necessary-condition filter, certified
// integer thresholds for the irrational bounds (every rounding decision is
// made by exact integer cube comparisons — no floating point), and the two
// dataset reports: reduced-sum closure and approximate-semigroup matching.

#include "fvec/fvector.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fvec {

/// Raised by fatness() when f_0 + f_3 <= 10 (denominator not positive).
class undefined_fatness_error : public error {
 public:
  using error::error;
};

/// (f_1 + f_2 - 20) / (f_0 + f_3 - 10) as an exact rational; dimension 4
/// with positive denominator required.
Rat fatness(const FVector& f);

/// One named check: holds iff slack >= 0 (for the equality check the slack
/// is minus the absolute deviation).
struct ConditionCheck {
  std::string name;
  bool holds = false;
  Rat slack;
};

enum class Verdict { Excluded, NotExcluded };

/// Outcome of the necessary-condition filter.  The filter is one-sided:
/// Excluded vectors are certainly not f-vectors of 4-polytopes, but
/// NotExcluded does not certify realizability.
struct ConditionReport {
  FVector vector;
  std::vector<ConditionCheck> checks;
  Verdict verdict = Verdict::NotExcluded;

  std::vector<std::string> failed_names() const;
};

/// Evaluates, for a dimension-4 vector: the Euler equation, f_0 >= 5,
/// f_3 >= 5, f_1 >= 2 f_0, f_2 >= 2 f_3, f_1 <= C(f_0, 2), f_2 <= C(f_3, 2),
/// and fatness >= 5/2 (omitted when the denominator is not positive).
ConditionReport necessary_conditions_4(const FVector& f);

/// Smallest integer t with t^3 >= m (any sign).
Int cube_root_ceil(const Int& m);

/// Certified integer ceiling of 2^(1/3) (f0 - 2) f3^(2/3) + 2 f3, an upper
/// bound for the number of vertex-facet incidences of a 4-polytope (the
/// Kovari-Sos-Turan bound applied to the incidence graph).  f0, f3 >= 1.
Int kst_edge_bound(const Int& f0, const Int& f3);

/// Largest integer n with n < 2 f0 / f3^(1/3) + 2: every 4-polytope with
/// f_0 <= f_3 has a facet with at most this many vertices.  1 <= f0 <= f3.
Int small_facet_bound(const Int& f0, const Int& f3);

/// (3, n+10, 3n+10, 2n): componentwise bound on the f-vector change of the
/// adapter-making modification, where n is the minimum facet vertex count.
/// n >= 4.
FVector modification_delta(const Int& n);

/// Largest integer strictly below 12 a^(2/3) + 33.  a >= 1.
Int approx_sum_tolerance(const Int& a);

/// True iff |fq_i - (fp_i + fpp_i)| <= approx_sum_tolerance(fq_i) for all
/// i; all three vectors of dimension 4.
bool check_approximate_closure(const FVector& fp, const FVector& fpp, const FVector& fq);

/// A set of f-vectors of common dimension, optionally complete for all
/// polytopes with f_0 + f_{d-1} up to a window bound.
struct FVectorDataset {
  int d = 4;
  std::vector<FVector> vectors;    // sorted, unique
  std::optional<Int> f03_window;   // completeness window on f_0 + f_{d-1}
  bool complete = false;           // true only for externally certified complete lists

  bool contains(const FVector& f) const;
  bool in_window(const FVector& f) const;
};

/// Validates (dimension, Euler membership), sorts and dedups.
FVectorDataset make_dataset(int d, std::vector<FVector> vectors, std::optional<Int> f03_window,
                            bool complete);

/// A reduced sum of two dataset members that stayed inside the window but
/// is not itself a member; x <= y lexicographically.
struct AbsentSum {
  FVector x, y, sum;
  bool operator==(const AbsentSum& o) const = default;
};

struct ClosureReport {
  ReductionVariant base = ReductionVariant::Simplex;
  std::size_t pairs_checked = 0;  // unordered pairs, self-pairs included
  std::size_t in_window = 0;      // sums inside the completeness window
  std::vector<AbsentSum> absent;  // sorted by (x, y)
};

/// Forms the reduced sum of every unordered member pair (self-pairs
/// included); sums outside the window are skipped, in-window sums missing
/// from the dataset are reported.  Parallelizes over pairs; FVEC_THREADS
/// caps the thread count; output is deterministic.
ClosureReport closure_report(const FVectorDataset& ds, const ReductionBase& base);

struct UnmatchedPair {
  FVector v, w, sum;
  bool operator==(const UnmatchedPair& o) const = default;
};

struct ApproximateSemigroupReport {
  std::size_t pairs_checked = 0;
  std::vector<UnmatchedPair> unmatched;  // sorted by (v, w)
};

/// For every unordered member pair whose plain sum v + w lies inside the
/// window, searches the dataset for a member u with
/// |u_i - (v_i + w_i)| <= approx_sum_tolerance(u_i) for all i; pairs with
/// no such neighbour are reported.  Parallel and deterministic as above.
ApproximateSemigroupReport approximate_semigroup_check(const FVectorDataset& ds);

}  // namespace fvec
