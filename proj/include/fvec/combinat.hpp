#pragma once

// A small combinatorial polytope engine.  Polytopes are stored as
// vertex-facet incidences; the full face lattice is recovered on demand as
// the intersection closure of the facets, graded by chain length.  The
// engine provides independent recounts of every closed-form f-vector in
// this library, plus the cut-and-paste operations (stellar subdivision,
// vertex deletion and truncation, three glueing variants) whose f-vector
// effects are the reduced additions.
//
// Convexity of glueing results is not re-verified geometrically; the engine
// checks combinatorial polytopality (graded lattice of the right height)
// and relies on the standard projective-transformation arguments for
// realizability of the supported operations.

#include "fvec/fvector.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fvec {

/// Raised when an incidence structure fails the face-lattice checks.
class not_a_polytope_error : public error {
 public:
  using error::error;
};

/// Raised when an operation's combinatorial precondition fails (e.g. the
/// chosen vertex is not simple).
class not_applicable_error : public error {
 public:
  using error::error;
};

/// Set of vertex indices, fixed capacity 256, stored as a bitmask.
class VertexSet {
 public:
  static constexpr int capacity = 256;

  VertexSet() : words_{} {}

  static VertexSet of(std::initializer_list<int> vs);
  static VertexSet full(int n);

  void insert(int v);
  void erase(int v);
  bool contains(int v) const;

  int count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const VertexSet& o) const;

  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator|(const VertexSet& o) const;

  bool operator==(const VertexSet& o) const { return words_ == o.words_; }
  /// Arbitrary-but-deterministic total order (used for set containers).
  bool operator<(const VertexSet& o) const { return words_ < o.words_; }

  std::vector<int> to_list() const;

 private:
  std::array<std::uint64_t, 4> words_;
};

/// Lexicographic order on the sorted vertex lists; used wherever facet
/// order is user-visible.
bool list_less(const VertexSet& a, const VertexSet& b);

/// A combinatorial d-polytope given by its vertex-facet incidences.
class VertexFacetPolytope {
 public:
  /// Validates: indices in range, every vertex in at least d facets, no
  /// facet contained in another (this also rejects duplicates).
  VertexFacetPolytope(int d, int vertex_count, std::vector<VertexSet> facets);

  int dimension() const { return d_; }
  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  VertexSet vertex_set() const { return VertexSet::full(n_); }
  /// Number of facets containing v.
  int facet_degree(int v) const;

 private:
  int d_;
  int n_;
  std::vector<VertexSet> facets_;  // sorted by list_less
};

/// The face lattice: all intersections of facets plus the empty face and
/// the whole polytope, ranked by longest chain from the bottom.
class FaceLattice {
 public:
  int dimension() const { return d_; }
  const std::vector<VertexSet>& faces() const { return faces_; }
  int rank(std::size_t i) const { return ranks_[i]; }
  /// Cover pairs (lower index, upper index).
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  /// Face counts for ranks 0..d-1, i.e. the f-vector.
  std::vector<std::size_t> level_counts() const;
  std::vector<VertexSet> faces_of_rank(int r) const;
  /// Rank-r faces contained in the given face.
  std::vector<VertexSet> faces_of_rank_within(int r, const VertexSet& within) const;

 private:
  friend FaceLattice face_lattice(const VertexFacetPolytope& p);
  int d_ = 0;
  std::vector<VertexSet> faces_;  // sorted by (size, word order)
  std::vector<int> ranks_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Computes the face lattice and verifies it is graded of height d+1 with
/// the vertices as atoms and the facets as coatoms; throws
/// not_a_polytope_error otherwise.
FaceLattice face_lattice(const VertexFacetPolytope& p);

/// f-vector recounted from the face lattice (d >= 1).
FVector fvector_of(const VertexFacetPolytope& p);

// ---- constructions -------------------------------------------------------

VertexFacetPolytope point_poly();
VertexFacetPolytope simplex_poly(int d);   // d >= 0
VertexFacetPolytope polygon_poly(int n);   // n >= 3

/// Join P * Q: facets are F * Q and P * G.  Join with a point is the
/// pyramid.
VertexFacetPolytope join_poly(const VertexFacetPolytope& p, const VertexFacetPolytope& q);

/// Cartesian product P x Q (both dimensions >= 1): facets are F x Q and
/// P x G.
VertexFacetPolytope product_poly(const VertexFacetPolytope& p, const VertexFacetPolytope& q);

/// Free sum P (+) Q (both dimensions >= 1): facets are F * G.
VertexFacetPolytope direct_sum_poly(const VertexFacetPolytope& p, const VertexFacetPolytope& q);

VertexFacetPolytope pyramid_poly(const VertexFacetPolytope& p);

/// Wedge over a facet: the (d+1)-polytope {(x, t) : x in P, 0 <= t <= l(x)}
/// where l is an affine functional vanishing exactly on the facet.  Every
/// vertex off the facet splits into a bottom and a top copy; facet vertices
/// stay single.
VertexFacetPolytope wedge_poly(const VertexFacetPolytope& p, const VertexSet& facet);

/// Polar dual: one vertex per facet, one facet per vertex (its set of
/// incident facets).
VertexFacetPolytope dual_poly(const VertexFacetPolytope& p);

// ---- local modifications -------------------------------------------------

/// Replaces the given facet by pyramids (with a new apex) over its ridges.
VertexFacetPolytope stellar_subdivide_facet(const VertexFacetPolytope& p, const VertexSet& facet);

/// Deletes a simple vertex all of whose incident facets are simplices; the
/// d incident facets are replaced by the simplex on the d neighbours.
/// Results that stop being d-polytopes (e.g. deleting from the simplex) are
/// rejected via the lattice check.
VertexFacetPolytope delete_simple_vertex(const VertexFacetPolytope& p, int v);

/// Cuts off a simple vertex, creating a simplex facet on d new vertices
/// (one per edge at v).
VertexFacetPolytope truncate_simple_vertex(const VertexFacetPolytope& p, int v);

/// Cuts off an arbitrary vertex: one new vertex per edge at v, and the
/// vertex figure of v becomes a new facet.
VertexFacetPolytope truncate_vertex(const VertexFacetPolytope& p, int v);

/// Cuts off a proper nonempty face with a hyperplane strictly separating
/// its vertices from all others: one new vertex per crossing edge, and the
/// face figure becomes a new facet.  Any separating hyperplane cuts the
/// same edges, so the resulting combinatorial type is well defined.
VertexFacetPolytope truncate_face(const VertexFacetPolytope& p, const VertexSet& face);

/// Pulls the vertex v into general position: v moves beyond exactly the
/// facets containing it (beneath--beyond).  Facets avoiding v survive; each
/// ridge lying in one facet with v and one without becomes the base of a new
/// pyramid facet with apex v.  The combinatorial type of the result is
/// independent of the pulled position.
VertexFacetPolytope pull_vertex(const VertexFacetPolytope& p, int v);

/// Glues q into the simplex facet f1 of p: f1 and the simplex facet f2 of q
/// are identified (lexicographic vertex bijection) and both disappear as
/// facets.  f-vector effect: subtract (f(simplex_{d-1}), 2).
VertexFacetPolytope glue_in_simplex_facet(const VertexFacetPolytope& p, const VertexSet& f1,
                                          const VertexFacetPolytope& q, const VertexSet& f2);

/// Truncates the simple vertex v of p and glues q into the cut facet.
/// f-vector effect: subtract (1, 0, ..., 0, 1).
VertexFacetPolytope connected_sum(const VertexFacetPolytope& p, int v,
                                  const VertexFacetPolytope& q, const VertexSet& f2);

/// Deletes the simple vertex v of p (all of whose facets must be
/// simplices) and glues q into the resulting simplex facet.  f-vector
/// effect: subtract f(simplex_d).
VertexFacetPolytope adapter_glue(const VertexFacetPolytope& p, int v,
                                 const VertexFacetPolytope& q, const VertexSet& f2);

// ---- predicates and selectors --------------------------------------------

/// A vertex lying in exactly d facets.
bool has_simple_vertex(const VertexFacetPolytope& p);
std::optional<int> find_simple_vertex(const VertexFacetPolytope& p);

/// Facets with exactly d vertices.
std::vector<VertexSet> simplex_facets(const VertexFacetPolytope& p);
int min_facet_size(const VertexFacetPolytope& p);

/// An adapter has a simple vertex v whose d facets are all simplices plus a
/// further simplex facet avoiding v; such polytopes accept every glueing
/// operation above.
bool is_adapter(const VertexFacetPolytope& p);
std::optional<int> find_adapter_vertex(const VertexFacetPolytope& p);

/// Turns a 4-polytope (or its dual, whichever satisfies f_0 <= f_3) into an
/// adapter by at most three stellar subdivisions: first on a minimum-vertex
/// facet, then on the smallest facet that step created, then on a
/// tetrahedron facet from the second step.  Stops as soon as the adapter
/// condition holds, which keeps the f-vector change within
/// modification_delta(min facet size of the chosen representative).
VertexFacetPolytope make_adapter_4(const VertexFacetPolytope& p);

/// Connected-sum-ready modification of p whose f-vector stays close to
/// f(p): make_adapter_4 on the representative, dualized back if the
/// representative was the dual.  The result always has a simple vertex and
/// a simplex facet avoiding it.
VertexFacetPolytope make_summand_4(const VertexFacetPolytope& p);

}  // namespace fvec
