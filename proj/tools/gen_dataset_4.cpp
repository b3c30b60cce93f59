// Builds the 4-dimensional f-vector dataset by exhaustive search inside a
// window f_0 + f_3 <= W.
//
// Every emitted vector is certified realizable in one of two ways:
//   * an explicit vertex-facet witness validated by the face-lattice checks
//     (seed constructions closed under dual, stellar subdivision, vertex
//     truncation, vertex deletion, and the three glueing operations), or
//   * the g-theorem: every M-sequence (1, g1, g2) is the g-vector of a
//     simplicial 4-polytope, and polar duality transfers realizability to
//     the reversed vector.
//
// Completeness of the window cannot be certified internally (it needs
// non-realizability arguments), so the dataset is marked complete only when
// --complete-count, the externally published size of the full list, matches
// the generated count.

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "fvec/combinat.hpp"
#include "fvec/constructions.hpp"
#include "fvec/dim4.hpp"
#include "fvec/fvector.hpp"
#include "fvec/io.hpp"
#include "fvec/simplicial.hpp"

namespace {

using namespace fvec;

struct Witnesses {
  std::optional<VertexFacetPolytope> any;
  std::optional<VertexFacetPolytope> with_simple_vertex;
  std::optional<VertexFacetPolytope> with_simplex_facet;
  std::optional<VertexFacetPolytope> with_adapter_vertex;

  bool saturated() const {
    return any && with_simple_vertex && with_simplex_facet && with_adapter_vertex;
  }
};

class Search {
 public:
  explicit Search(Int window) : window_(std::move(window)) {}

  bool in_window(const FVector& f) const { return f[0] + f[3] <= window_; }

  // Registers a vector without a witness (g-theorem / duality certificates).
  bool insert_vector(const FVector& f) {
    if (!in_window(f)) return false;
    auto [it, fresh] = found_.try_emplace(f);
    if (fresh) queue_.push_back(f);
    return fresh;
  }

  // Registers an engine witness; returns true if it added a vector or
  // filled a feature slot.
  bool add(const VertexFacetPolytope& p) {
    const FVector f = fvector_of(p);
    if (!in_window(f)) return false;
    auto [it, fresh] = found_.try_emplace(f);
    Witnesses& w = it->second;
    bool changed = fresh;
    if (fresh) queue_.push_back(f);
    if (!w.any) {
      w.any = p;
      changed = true;
    }
    if (!w.with_simple_vertex && find_simple_vertex(p)) {
      w.with_simple_vertex = p;
      changed = true;
    }
    if (!w.with_simplex_facet && !simplex_facets(p).empty()) {
      w.with_simplex_facet = p;
      changed = true;
    }
    if (!w.with_adapter_vertex && find_adapter_vertex(p)) {
      w.with_adapter_vertex = p;
      changed = true;
    }
    return changed;
  }

  bool try_add(const VertexFacetPolytope& p) {
    try {
      return add(p);
    } catch (const not_a_polytope_error&) {
      return false;
    }
  }

  // Applies all unary operations to queued vectors until exhausted.
  void expand_unary() {
    while (!queue_.empty()) {
      const FVector f = queue_.back();
      queue_.pop_back();
      const Witnesses& w = found_.at(f);
      if (!w.any) continue;  // vector known only at the certificate level
      const VertexFacetPolytope p = *w.any;

      try_add(dual_poly(p));
      for (const VertexSet& facet : p.facets()) {
        try {
          try_add(stellar_subdivide_facet(p, facet));
        } catch (const not_applicable_error&) {
        }
      }
      const FaceLattice lat = face_lattice(p);
      for (std::size_t i = 0; i < lat.faces().size(); ++i) {
        const int r = lat.rank(i);
        if (r < 0 || r >= p.dimension()) continue;
        try {
          try_add(truncate_face(p, lat.faces()[i]));
        } catch (const error&) {
        }
      }
      for (int v = 0; v < p.vertex_count(); ++v) {
        try {
          try_add(pull_vertex(p, v));
        } catch (const error&) {
        }
        if (p.facet_degree(v) != p.dimension()) continue;
        try {
          try_add(delete_simple_vertex(p, v));
        } catch (const error&) {
        }
      }
    }
  }

  // One sweep of the three glueing operations over all witness pairs,
  // prediction-first: a pair is only constructed when its predicted sum is
  // inside the window and the sum's witness slots are not yet saturated.
  bool glue_sweep() {
    bool changed = false;
    const std::vector<FVector> members = vectors();
    const auto needs_work = [&](const FVector& pred) {
      if (!in_window(pred)) return false;
      const auto it = found_.find(pred);
      return it == found_.end() || !it->second.saturated();
    };

    for (const FVector& fx : members) {
      for (const FVector& fy : members) {
        const Witnesses& wx = found_.at(fx);
        const Witnesses& wy = found_.at(fy);

        if (wx.with_adapter_vertex && wy.with_simplex_facet) {
          const ReducedSum pred = reduced_add(fx, fy, ReductionBase::simplex(4));
          if (pred.fvector_candidate && needs_work(pred.value)) {
            const VertexFacetPolytope& p = *wx.with_adapter_vertex;
            const VertexFacetPolytope& q = *wy.with_simplex_facet;
            try {
              const VertexFacetPolytope glued =
                  adapter_glue(p, *find_adapter_vertex(p), q, simplex_facets(q).front());
              certify(glued, pred.value);
              changed |= try_add(glued);
            } catch (const error&) {
            }
          }
        }
        if (wx.with_simplex_facet && wy.with_simplex_facet) {
          const ReducedSum pred = reduced_add(fx, fy, ReductionBase::simplex_facet_sphere(4));
          if (pred.fvector_candidate && needs_work(pred.value)) {
            const VertexFacetPolytope& p = *wx.with_simplex_facet;
            const VertexFacetPolytope& q = *wy.with_simplex_facet;
            try {
              const VertexFacetPolytope glued = glue_in_simplex_facet(
                  p, simplex_facets(p).front(), q, simplex_facets(q).front());
              certify(glued, pred.value);
              changed |= try_add(glued);
            } catch (const error&) {
            }
          }
        }
        if (wx.with_simple_vertex && wy.with_simplex_facet) {
          const ReducedSum pred = reduced_add(fx, fy, ReductionBase::vertex_facet(4));
          if (pred.fvector_candidate && needs_work(pred.value)) {
            const VertexFacetPolytope& p = *wx.with_simple_vertex;
            const VertexFacetPolytope& q = *wy.with_simplex_facet;
            try {
              const VertexFacetPolytope glued =
                  connected_sum(p, *find_simple_vertex(p), q, simplex_facets(q).front());
              certify(glued, pred.value);
              changed |= try_add(glued);
            } catch (const error&) {
            }
          }
        }
      }
    }
    return changed;
  }

  std::vector<FVector> vectors() const {
    std::vector<FVector> out;
    out.reserve(found_.size());
    for (const auto& [f, w] : found_) out.push_back(f);
    return out;
  }

  std::size_t witnessed_count() const {
    std::size_t n = 0;
    for (const auto& [f, w] : found_)
      if (w.any) ++n;
    return n;
  }

 private:
  static void certify(const VertexFacetPolytope& glued, const FVector& predicted) {
    if (fvector_of(glued) != predicted)
      throw std::logic_error("glue result disagrees with reduced-addition prediction");
  }

  Int window_;
  std::map<FVector, Witnesses> found_;
  std::vector<FVector> queue_;
};

// A 3-polytope with f = (a, a+c-2, c): a pyramid over a polygon, followed
// by vertex truncations (a >= c) or dualized (a < c).
VertexFacetPolytope polytope_3d(int a, int c) {
  if (a < c) return dual_poly(polytope_3d(c, a));
  const int n = 2 * c - a - 1;
  VertexFacetPolytope p = pyramid_poly(polygon_poly(n));
  for (int t = 0; t < a - c; ++t) p = truncate_simple_vertex(p, *find_simple_vertex(p));
  return p;
}

void seed(Search& search, const Int& window) {
  const VertexFacetPolytope segment = simplex_poly(1);
  search.add(simplex_poly(4));

  // Simplex joins of free sums of simplices, total dimension 4.
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; k + l <= 4; ++l) {
      const int m = 4 - k - l;
      VertexFacetPolytope p = direct_sum_poly(simplex_poly(k), simplex_poly(l));
      if (m > 0) p = join_poly(simplex_poly(m - 1), p);
      search.add(p);
    }
  }

  // Joins of a segment with a polygon.
  for (int n = 3; Int(2 * n + 4) <= window; ++n)
    search.add(join_poly(segment, polygon_poly(n)));

  // Products and free sums of two polygons.
  for (int m = 3; Int(m) * 3 + m + 3 <= window; ++m) {
    for (int n = m; Int(m) * n + m + n <= window; ++n) {
      search.add(product_poly(polygon_poly(m), polygon_poly(n)));
      search.add(direct_sum_poly(polygon_poly(m), polygon_poly(n)));
    }
  }

  // Pyramids, prisms, segment sums over 3-polytopes with f = (a, a+c-2, c).
  for (int a = 4; Int(a) + 4 + 2 <= window; ++a) {
    for (int c = 4; c <= 2 * a - 4; ++c) {
      if (a > 2 * c - 4) continue;
      const bool pyramid_fits = Int(a) + c + 2 <= window;
      const bool prism_fits = Int(2) * a + c + 2 <= window;
      const bool sum_fits = Int(a) + 2 * c + 2 <= window;
      if (!pyramid_fits && !prism_fits && !sum_fits) continue;
      const VertexFacetPolytope base = polytope_3d(a, c);
      if (pyramid_fits) search.add(pyramid_poly(base));
      if (prism_fits) search.add(product_poly(segment, base));
      if (sum_fits) search.add(direct_sum_poly(segment, base));
    }
  }
}

// Wedges over 3-polytopes.  The wedge f-vector depends only on the base
// f-vector and the size of the chosen facet, so the 3-polytope pool is
// deduplicated by (f-vector, facet-size multiset) and each member is wedged
// over one facet per distinct size.
void seed_wedges(Search& search, const Int& window) {
  using Key = std::pair<FVector, std::vector<int>>;
  std::map<Key, VertexFacetPolytope> pool;
  std::vector<Key> queue;

  // wedge over a k-gonal facet of a base with f = (a, e, c) has
  // f0 + f3 = (2a - k) + (c + 1); with k <= a - 1 the best case is
  // a + c + 2, so larger bases can never produce an in-window wedge.
  // The pool operations never decrease a + c, making the prune safe.
  const auto useful = [&](const FVector& f) { return f[0] + f[2] + 2 <= window; };

  const auto add3 = [&](const VertexFacetPolytope& q) {
    const FVector f = fvector_of(q);
    if (!useful(f)) return;
    std::vector<int> sizes;
    for (const VertexSet& g : q.facets()) sizes.push_back(g.count());
    std::sort(sizes.begin(), sizes.end());
    Key key{f, std::move(sizes)};
    auto [it, fresh] = pool.try_emplace(std::move(key), q);
    if (fresh) queue.push_back(it->first);
  };

  for (int a = 4; Int(a) + 4 + 2 <= window; ++a)
    for (int c = 4; c <= 2 * a - 4; ++c) {
      if (a > 2 * c - 4 || !useful(FVector({a, a + c - 2, c}))) continue;
      add3(polytope_3d(a, c));
    }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexFacetPolytope q = pool.at(queue[head]);
    add3(dual_poly(q));
    for (const VertexSet& facet : q.facets()) {
      try {
        add3(stellar_subdivide_facet(q, facet));
      } catch (const error&) {
      }
    }
    const FaceLattice lat = face_lattice(q);
    for (std::size_t i = 0; i < lat.faces().size(); ++i) {
      const int r = lat.rank(i);
      if (r < 0 || r >= q.dimension()) continue;
      try {
        add3(truncate_face(q, lat.faces()[i]));
      } catch (const error&) {
      }
    }
    for (int v = 0; v < q.vertex_count(); ++v) {
      try {
        add3(pull_vertex(q, v));
      } catch (const error&) {
      }
    }
  }

  std::size_t wedges = 0;
  for (const auto& [key, q] : pool) {
    const FVector& f = key.first;
    std::vector<int> done;
    for (const VertexSet& facet : q.facets()) {
      const int k = facet.count();
      if (std::find(done.begin(), done.end(), k) != done.end()) continue;
      done.push_back(k);
      if (2 * f[0] - k + f[2] + 1 > window) continue;
      try {
        search.try_add(wedge_poly(q, facet));
        ++wedges;
      } catch (const error&) {
      }
    }
  }
  std::printf("wedge stage: %zu bases, %zu wedges applied\n", pool.size(), wedges);
}

// Every M-sequence (1, g1, g2) is realized by a simplicial 4-polytope; the
// reversed vectors are realized by the polar duals.
std::size_t insert_simplicial(Search& search, const Int& window) {
  std::size_t added = 0;
  for (Int g1 = 0; 10 + 4 * g1 <= window; ++g1) {
    const Int cap = macaulay_pseudopower(g1, 1);
    for (Int g2 = 0; g2 <= cap && 10 + 4 * g1 + g2 <= window; ++g2) {
      const GVector g(4, {1, g1, g2});
      if (!is_m_sequence(g)) continue;
      const FVector f = g_to_f(g);
      added += search.insert_vector(f) ? 1 : 0;
      added += search.insert_vector(dual_fvector(f)) ? 1 : 0;
    }
  }
  return added;
}

void print_report(const char* label, const ClosureReport& report) {
  std::printf("%s: %zu pairs, %zu in window, %zu absent\n", label, report.pairs_checked,
              report.in_window, report.absent.size());
  for (const AbsentSum& a : report.absent)
    std::printf("  %s + %s -> %s\n", a.x.str().c_str(), a.y.str().c_str(), a.sum.str().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generate the windowed 4-dimensional f-vector dataset"};
  long long window = 22;
  std::string out_path;
  long long complete_count = -1;
  app.add_option("--window", window, "bound on f0 + f3")->capture_default_str();
  app.add_option("--out", out_path, "output JSON file")->required();
  app.add_option("--complete-count", complete_count,
                 "externally published size of the complete list; the dataset is marked "
                 "complete only when the generated count matches");

  CLI11_PARSE(app, argc, argv);

  try {
    const Int w(window);
    Search search(w);

    seed(search, w);
    seed_wedges(search, w);
    search.expand_unary();
    const std::size_t engine_vectors = search.vectors().size();
    std::printf("engine search: %zu vectors\n", engine_vectors);

    const std::size_t simplicial_added = insert_simplicial(search, w);
    std::printf("g-theorem certificates: %zu additional vectors\n", simplicial_added);

    // Vector-level dual closure (engine witnesses already dualize; this
    // covers certificate-only vectors).
    for (const FVector& f : search.vectors()) search.insert_vector(dual_fvector(f));

    // Glueing fix-up: alternate glue sweeps and unary expansion until the
    // witness table stabilizes.
    int rounds = 0;
    while (search.glue_sweep()) {
      search.expand_unary();
      for (const FVector& f : search.vectors()) search.insert_vector(dual_fvector(f));
      if (++rounds > 64) throw std::logic_error("glue fix-up failed to stabilize");
    }
    std::printf("after glue fix-up (%d rounds): %zu vectors (%zu witnessed)\n", rounds,
                search.vectors().size(), search.witnessed_count());

    std::vector<FVector> vectors = search.vectors();
    const bool complete =
        complete_count >= 0 && vectors.size() == static_cast<std::size_t>(complete_count);
    const FVectorDataset ds = make_dataset(4, std::move(vectors), w, complete);

    print_report("box", closure_report(ds, ReductionBase::simplex(4)));
    print_report("box-prime", closure_report(ds, ReductionBase::simplex_facet_sphere(4)));
    print_report("box-dblprime", closure_report(ds, ReductionBase::vertex_facet(4)));

    if (complete_count >= 0 && !complete)
      std::printf("WARNING: expected %lld vectors, generated %zu; dataset marked partial\n",
                  complete_count, ds.vectors.size());

    save_json_file(out_path, to_json(ds));
    std::printf("wrote %zu vectors to %s (complete: %s)\n", ds.vectors.size(), out_path.c_str(),
                ds.complete ? "true" : "false");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
