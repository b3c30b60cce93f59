#include "fvec/combinat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace fvec {

// ---- VertexSet -------------------------------------------------------------

VertexSet VertexSet::of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= capacity) throw error("vertex index exceeds engine capacity");
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t(1) << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= capacity) throw error("vertex index exceeds engine capacity");
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t(1) << (v & 63));
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= capacity) return false;
  return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
}

int VertexSet::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet r;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

std::vector<int> VertexSet::to_list() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<int>(i * 64) + b);
      w &= w - 1;
    }
  }
  return out;
}

bool list_less(const VertexSet& a, const VertexSet& b) {
  std::vector<int> la = a.to_list(), lb = b.to_list();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

// ---- VertexFacetPolytope ---------------------------------------------------

VertexFacetPolytope::VertexFacetPolytope(int d, int vertex_count, std::vector<VertexSet> facets)
    : d_(d), n_(vertex_count), facets_(std::move(facets)) {
  if (d_ < 0) throw dimension_error("polytope dimension must be nonnegative");
  if (n_ < 1) throw error("polytope needs at least one vertex");
  if (n_ > VertexSet::capacity) throw error("vertex count exceeds engine capacity");
  if (facets_.empty()) throw not_a_polytope_error("polytope needs at least one facet");
  VertexSet all = VertexSet::full(n_);
  for (const VertexSet& f : facets_)
    if (!f.subset_of(all)) throw error("facet mentions an out-of-range vertex");
  std::sort(facets_.begin(), facets_.end(), list_less);
  for (std::size_t i = 0; i < facets_.size(); ++i)
    for (std::size_t j = 0; j < facets_.size(); ++j)
      if (i != j && facets_[i].subset_of(facets_[j]))
        throw not_a_polytope_error("one facet is contained in another");
  for (int v = 0; v < n_; ++v)
    if (facet_degree(v) < d_)
      throw not_a_polytope_error("a vertex lies in fewer than d facets");
}

int VertexFacetPolytope::facet_degree(int v) const {
  int c = 0;
  for (const VertexSet& f : facets_)
    if (f.contains(v)) ++c;
  return c;
}

// ---- face lattice ----------------------------------------------------------

std::vector<std::size_t> FaceLattice::level_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(d_), 0);
  for (int r : ranks_)
    if (r >= 0 && r < d_) ++counts[static_cast<std::size_t>(r)];
  return counts;
}

std::vector<VertexSet> FaceLattice::faces_of_rank(int r) const {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (ranks_[i] == r) out.push_back(faces_[i]);
  return out;
}

std::vector<VertexSet> FaceLattice::faces_of_rank_within(int r, const VertexSet& within) const {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (ranks_[i] == r && faces_[i].subset_of(within)) out.push_back(faces_[i]);
  return out;
}

FaceLattice face_lattice(const VertexFacetPolytope& p) {
  const int d = p.dimension();

  // Intersection closure of the facets, plus top and bottom.
  std::set<VertexSet> known(p.facets().begin(), p.facets().end());
  known.insert(p.vertex_set());
  known.insert(VertexSet());
  std::vector<VertexSet> work(known.begin(), known.end());
  while (!work.empty()) {
    VertexSet f = work.back();
    work.pop_back();
    std::vector<VertexSet> snapshot(known.begin(), known.end());
    for (const VertexSet& g : snapshot) {
      VertexSet h = f & g;
      if (known.insert(h).second) work.push_back(h);
    }
  }

  FaceLattice lat;
  lat.d_ = d;
  lat.faces_.assign(known.begin(), known.end());
  std::sort(lat.faces_.begin(), lat.faces_.end(), [](const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });

  // Longest-chain rank; faces are sorted by size, so strict subsets of a
  // face precede it.
  const std::size_t m = lat.faces_.size();
  lat.ranks_.assign(m, -1);
  for (std::size_t i = 1; i < m; ++i) {
    int best = -1;
    for (std::size_t j = 0; j < i; ++j)
      if (lat.faces_[j].count() < lat.faces_[i].count() &&
          lat.faces_[j].subset_of(lat.faces_[i]))
        best = std::max(best, lat.ranks_[j]);
    lat.ranks_[i] = best + 1;
  }

  if (lat.ranks_.back() != d)
    throw not_a_polytope_error("face lattice has height " +
                               std::to_string(lat.ranks_.back() + 1) + ", expected " +
                               std::to_string(d + 1));

  // Atoms must be exactly the vertices.
  std::size_t atoms = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (lat.ranks_[i] == 0) {
      ++atoms;
      if (lat.faces_[i].count() != 1)
        throw not_a_polytope_error("an atom of the face lattice is not a vertex");
    }
  }
  if (atoms != static_cast<std::size_t>(p.vertex_count()))
    throw not_a_polytope_error("some vertex is not an atom of the face lattice");

  // Coatoms must be exactly the facets.
  std::size_t coatoms = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (lat.ranks_[i] == d - 1) {
      ++coatoms;
      if (!std::binary_search(p.facets().begin(), p.facets().end(), lat.faces_[i], list_less))
        throw not_a_polytope_error("a coatom of the face lattice is not a listed facet");
    }
  }
  if (coatoms != p.facets().size())
    throw not_a_polytope_error("some listed facet is not a coatom of the face lattice");

  // Gradedness: every maximal proper subface sits exactly one rank below.
  // Cover pairs are collected along the way.
  std::vector<std::size_t> subs;
  for (std::size_t i = 1; i < m; ++i) {
    subs.clear();
    for (std::size_t j = 0; j < i; ++j)
      if (lat.faces_[j].count() < lat.faces_[i].count() &&
          lat.faces_[j].subset_of(lat.faces_[i]))
        subs.push_back(j);
    for (std::size_t a : subs) {
      bool maximal = true;
      for (std::size_t b : subs)
        if (b != a && lat.faces_[a].count() < lat.faces_[b].count() &&
            lat.faces_[a].subset_of(lat.faces_[b])) {
          maximal = false;
          break;
        }
      if (maximal) {
        if (lat.ranks_[a] + 1 != lat.ranks_[i])
          throw not_a_polytope_error("face lattice is not graded");
        lat.covers_.emplace_back(a, i);
      }
    }
  }

  return lat;
}

FVector fvector_of(const VertexFacetPolytope& p) {
  if (p.dimension() < 1) throw dimension_error("f-vector recount needs dimension >= 1");
  std::vector<std::size_t> counts = face_lattice(p).level_counts();
  std::vector<Int> e(counts.begin(), counts.end());
  return FVector(std::move(e));
}

// ---- constructions ---------------------------------------------------------

VertexFacetPolytope point_poly() {
  return VertexFacetPolytope(0, 1, {VertexSet()});
}

VertexFacetPolytope simplex_poly(int d) {
  if (d < 0) throw dimension_error("simplex dimension must be nonnegative");
  if (d == 0) return point_poly();
  std::vector<VertexSet> facets;
  for (int skip = 0; skip <= d; ++skip) {
    VertexSet f = VertexSet::full(d + 1);
    f.erase(skip);
    facets.push_back(f);
  }
  return VertexFacetPolytope(d, d + 1, std::move(facets));
}

VertexFacetPolytope polygon_poly(int n) {
  if (n < 3) throw dimension_error("a polygon needs n >= 3 vertices");
  std::vector<VertexSet> facets;
  for (int i = 0; i < n; ++i) facets.push_back(VertexSet::of({i, (i + 1) % n}));
  return VertexFacetPolytope(2, n, std::move(facets));
}

namespace {

VertexSet shift(const VertexSet& s, int offset) {
  VertexSet r;
  for (int v : s.to_list()) r.insert(v + offset);
  return r;
}

}  // namespace

VertexFacetPolytope join_poly(const VertexFacetPolytope& p, const VertexFacetPolytope& q) {
  int np = p.vertex_count(), nq = q.vertex_count();
  std::vector<VertexSet> facets;
  for (const VertexSet& f : p.facets()) facets.push_back(f | shift(q.vertex_set(), np));
  for (const VertexSet& g : q.facets()) facets.push_back(p.vertex_set() | shift(g, np));
  return VertexFacetPolytope(p.dimension() + q.dimension() + 1, np + nq, std::move(facets));
}

VertexFacetPolytope product_poly(const VertexFacetPolytope& p, const VertexFacetPolytope& q) {
  if (p.dimension() < 1 || q.dimension() < 1)
    throw dimension_error("product operands need dimension >= 1");
  int np = p.vertex_count(), nq = q.vertex_count();
  auto pair_index = [nq](int i, int j) { return i * nq + j; };
  std::vector<VertexSet> facets;
  for (const VertexSet& f : p.facets()) {
    VertexSet s;
    for (int i : f.to_list())
      for (int j = 0; j < nq; ++j) s.insert(pair_index(i, j));
    facets.push_back(s);
  }
  for (const VertexSet& g : q.facets()) {
    VertexSet s;
    for (int i = 0; i < np; ++i)
      for (int j : g.to_list()) s.insert(pair_index(i, j));
    facets.push_back(s);
  }
  return VertexFacetPolytope(p.dimension() + q.dimension(), np * nq, std::move(facets));
}

VertexFacetPolytope direct_sum_poly(const VertexFacetPolytope& p, const VertexFacetPolytope& q) {
  if (p.dimension() < 1 || q.dimension() < 1)
    throw dimension_error("free-sum operands need dimension >= 1");
  int np = p.vertex_count();
  std::vector<VertexSet> facets;
  for (const VertexSet& f : p.facets())
    for (const VertexSet& g : q.facets()) facets.push_back(f | shift(g, np));
  return VertexFacetPolytope(p.dimension() + q.dimension(), np + q.vertex_count(),
                             std::move(facets));
}

VertexFacetPolytope pyramid_poly(const VertexFacetPolytope& p) {
  return join_poly(p, point_poly());
}

VertexFacetPolytope wedge_poly(const VertexFacetPolytope& p, const VertexSet& facet) {
  int d = p.dimension();
  if (d < 1) throw dimension_error("wedge needs dimension >= 1");
  bool is_facet = false;
  for (const VertexSet& f : p.facets()) is_facet = is_facet || f == facet;
  if (!is_facet) throw not_applicable_error("wedge: the given set is not a facet");
  int n = p.vertex_count();
  // Bottom copies and shared facet vertices keep their index; top copies of
  // the off-facet vertices are numbered afterwards.
  std::vector<int> top(n, -1);
  int next = n;
  for (int v = 0; v < n; ++v)
    if (!facet.contains(v)) top[v] = next++;
  std::vector<VertexSet> facets;
  facets.push_back(VertexSet::full(n));  // bottom copy of p
  VertexSet top_facet = facet;
  for (int v = 0; v < n; ++v)
    if (top[v] >= 0) top_facet.insert(top[v]);
  facets.push_back(top_facet);  // top copy of p
  for (const VertexSet& g : p.facets()) {
    if (g == facet) continue;
    VertexSet side = g;
    for (int v : g.to_list())
      if (top[v] >= 0) side.insert(top[v]);
    facets.push_back(side);
  }
  return VertexFacetPolytope(d + 1, next, std::move(facets));
}

VertexFacetPolytope dual_poly(const VertexFacetPolytope& p) {
  if (p.dimension() < 1) throw dimension_error("dual needs dimension >= 1");
  int m = static_cast<int>(p.facets().size());
  std::vector<VertexSet> dual_facets;
  for (int v = 0; v < p.vertex_count(); ++v) {
    VertexSet s;
    for (int j = 0; j < m; ++j)
      if (p.facets()[static_cast<std::size_t>(j)].contains(v)) s.insert(j);
    dual_facets.push_back(s);
  }
  return VertexFacetPolytope(p.dimension(), m, std::move(dual_facets));
}

// ---- local modifications ---------------------------------------------------

namespace {

bool is_facet_of(const VertexFacetPolytope& p, const VertexSet& f) {
  return std::binary_search(p.facets().begin(), p.facets().end(), f, list_less);
}

/// Facet list with one facet removed.
std::vector<VertexSet> facets_without(const VertexFacetPolytope& p, const VertexSet& f) {
  std::vector<VertexSet> out;
  for (const VertexSet& g : p.facets())
    if (!(g == f)) out.push_back(g);
  return out;
}

}  // namespace

VertexFacetPolytope stellar_subdivide_facet(const VertexFacetPolytope& p, const VertexSet& facet) {
  if (!is_facet_of(p, facet)) throw not_applicable_error("stellar subdivision: not a facet");
  int d = p.dimension();
  if (d < 2) throw dimension_error("stellar subdivision needs dimension >= 2");
  FaceLattice lat = face_lattice(p);
  int apex = p.vertex_count();
  std::vector<VertexSet> facets = facets_without(p, facet);
  for (const VertexSet& ridge : lat.faces_of_rank_within(d - 2, facet)) {
    VertexSet f = ridge;
    f.insert(apex);
    facets.push_back(f);
  }
  return VertexFacetPolytope(d, apex + 1, std::move(facets));
}

VertexFacetPolytope delete_simple_vertex(const VertexFacetPolytope& p, int v) {
  int d = p.dimension();
  if (v < 0 || v >= p.vertex_count()) throw not_applicable_error("vertex index out of range");
  std::vector<VertexSet> through, keep;
  for (const VertexSet& f : p.facets()) (f.contains(v) ? through : keep).push_back(f);
  if (static_cast<int>(through.size()) != d)
    throw not_applicable_error("vertex deletion: vertex is not simple");
  VertexSet neighbours;
  for (const VertexSet& f : through) {
    if (f.count() != d)
      throw not_applicable_error("vertex deletion: an incident facet is not a simplex");
    neighbours = neighbours | f;
  }
  neighbours.erase(v);
  if (neighbours.count() != d)
    throw not_applicable_error("vertex deletion: unexpected neighbour count");
  keep.push_back(neighbours);
  // Close the gap in the vertex numbering.
  std::vector<VertexSet> relabelled;
  for (const VertexSet& f : keep) {
    VertexSet s;
    for (int w : f.to_list()) s.insert(w < v ? w : w - 1);
    relabelled.push_back(s);
  }
  try {
    VertexFacetPolytope result(d, p.vertex_count() - 1, std::move(relabelled));
    face_lattice(result);  // height check rejects degenerate results
    return result;
  } catch (const error& e) {
    throw not_a_polytope_error(std::string("vertex deletion left no d-polytope: ") + e.what());
  }
}

VertexFacetPolytope truncate_simple_vertex(const VertexFacetPolytope& p, int v) {
  int d = p.dimension();
  if (d < 2) throw dimension_error("vertex truncation needs dimension >= 2");
  if (v < 0 || v >= p.vertex_count()) throw not_applicable_error("vertex index out of range");
  if (p.facet_degree(v) != d) throw not_applicable_error("vertex truncation: vertex is not simple");
  FaceLattice lat = face_lattice(p);
  std::vector<VertexSet> edges;
  for (const VertexSet& e : lat.faces_of_rank(1))
    if (e.contains(v)) edges.push_back(e);
  if (static_cast<int>(edges.size()) != d)
    throw not_applicable_error("vertex truncation: vertex does not have d edges");
  // One new vertex per edge at v, numbered after the untouched vertices.
  std::map<VertexSet, int> cut_vertex;
  int next = p.vertex_count();
  for (const VertexSet& e : edges) cut_vertex[e] = next++;
  std::vector<VertexSet> facets;
  VertexSet cut_facet;
  for (const auto& [e, w] : cut_vertex) cut_facet.insert(w);
  for (const VertexSet& f : p.facets()) {
    if (!f.contains(v)) {
      facets.push_back(f);
      continue;
    }
    VertexSet g = f;
    g.erase(v);
    int added = 0;
    for (const auto& [e, w] : cut_vertex)
      if (e.subset_of(f)) {
        g.insert(w);
        ++added;
      }
    if (added != d - 1)
      throw not_applicable_error("vertex truncation: facet does not contain d-1 edges at v");
    facets.push_back(g);
  }
  facets.push_back(cut_facet);
  // Close the gap left by v.
  std::vector<VertexSet> relabelled;
  for (const VertexSet& f : facets) {
    VertexSet s;
    for (int w : f.to_list()) s.insert(w < v ? w : w - 1);
    relabelled.push_back(s);
  }
  return VertexFacetPolytope(d, p.vertex_count() - 1 + d, std::move(relabelled));
}

VertexFacetPolytope truncate_vertex(const VertexFacetPolytope& p, int v) {
  if (v < 0 || v >= p.vertex_count()) throw not_applicable_error("vertex index out of range");
  VertexSet face;
  face.insert(v);
  return truncate_face(p, face);
}

VertexFacetPolytope truncate_face(const VertexFacetPolytope& p, const VertexSet& face) {
  int d = p.dimension();
  if (d < 2) throw dimension_error("face truncation needs dimension >= 2");
  FaceLattice lat = face_lattice(p);
  bool is_proper_face = false;
  for (std::size_t i = 0; i < lat.faces().size() && !is_proper_face; ++i)
    is_proper_face = lat.faces()[i] == face && lat.rank(i) >= 0 && lat.rank(i) <= d - 1;
  if (!is_proper_face)
    throw not_applicable_error("face truncation: the given set is not a proper nonempty face");

  // One new vertex per edge crossing the separating hyperplane.
  std::map<VertexSet, int> cut_vertex;
  int next = p.vertex_count();
  for (const VertexSet& e : lat.faces_of_rank(1))
    if ((e & face).count() == 1) cut_vertex[e] = next++;
  std::vector<VertexSet> facets;
  VertexSet cut_facet;
  for (const auto& [e, w] : cut_vertex) cut_facet.insert(w);
  for (const VertexSet& f : p.facets()) {
    if ((f & face).empty()) {
      facets.push_back(f);
      continue;
    }
    VertexSet g;
    for (int w : f.to_list())
      if (!face.contains(w)) g.insert(w);
    for (const auto& [e, w] : cut_vertex)
      if (e.subset_of(f)) g.insert(w);
    if (g.empty()) continue;  // the face was this facet; the cut replaces it
    facets.push_back(g);
  }
  facets.push_back(cut_facet);
  // Close the index gaps left by the removed vertices.
  std::vector<int> relabel(static_cast<std::size_t>(p.vertex_count()) + cut_vertex.size(), -1);
  int fresh = 0;
  for (int w = 0; w < p.vertex_count(); ++w)
    if (!face.contains(w)) relabel[w] = fresh++;
  for (const auto& [e, w] : cut_vertex) relabel[w] = fresh++;
  std::vector<VertexSet> relabelled;
  for (const VertexSet& f : facets) {
    VertexSet s;
    for (int w : f.to_list()) s.insert(relabel[w]);
    relabelled.push_back(s);
  }
  return VertexFacetPolytope(d, fresh, std::move(relabelled));
}

VertexFacetPolytope pull_vertex(const VertexFacetPolytope& p, int v) {
  int d = p.dimension();
  if (d < 2) throw dimension_error("vertex pulling needs dimension >= 2");
  if (v < 0 || v >= p.vertex_count()) throw error("vertex pulling: vertex index out of range");
  FaceLattice lat = face_lattice(p);

  std::vector<VertexSet> facets;
  for (const VertexSet& f : p.facets())
    if (!f.contains(v)) facets.push_back(f);

  // Horizon ridges: in exactly one facet through v and one avoiding it.
  for (const VertexSet& r : lat.faces_of_rank(d - 2)) {
    if (r.contains(v)) continue;
    bool beyond = false;
    bool beneath = false;
    for (const VertexSet& f : p.facets()) {
      if (!r.subset_of(f)) continue;
      (f.contains(v) ? beyond : beneath) = true;
    }
    if (beyond && beneath) {
      VertexSet g = r;
      g.insert(v);
      facets.push_back(g);
    }
  }
  return VertexFacetPolytope(d, p.vertex_count(), std::move(facets));
}

VertexFacetPolytope glue_in_simplex_facet(const VertexFacetPolytope& p, const VertexSet& f1,
                                          const VertexFacetPolytope& q, const VertexSet& f2) {
  int d = p.dimension();
  if (q.dimension() != d) throw dimension_error("glueing operands must share a dimension");
  if (d < 2) throw dimension_error("glueing needs dimension >= 2");
  if (!is_facet_of(p, f1) || f1.count() != d)
    throw not_applicable_error("glueing: f1 is not a simplex facet of p");
  if (!is_facet_of(q, f2) || f2.count() != d)
    throw not_applicable_error("glueing: f2 is not a simplex facet of q");
  // Identify f2 with f1 (sorted-index bijection); remaining q-vertices get
  // fresh indices in their original order.
  std::vector<int> f1_list = f1.to_list(), f2_list = f2.to_list();
  std::vector<int> relabel(static_cast<std::size_t>(q.vertex_count()), -1);
  for (int i = 0; i < d; ++i)
    relabel[static_cast<std::size_t>(f2_list[static_cast<std::size_t>(i)])] =
        f1_list[static_cast<std::size_t>(i)];
  int next = p.vertex_count();
  for (int w = 0; w < q.vertex_count(); ++w)
    if (relabel[static_cast<std::size_t>(w)] < 0) relabel[static_cast<std::size_t>(w)] = next++;
  std::vector<VertexSet> facets = facets_without(p, f1);
  for (const VertexSet& g : q.facets()) {
    if (g == f2) continue;
    VertexSet s;
    for (int w : g.to_list()) s.insert(relabel[static_cast<std::size_t>(w)]);
    facets.push_back(s);
  }
  return VertexFacetPolytope(d, next, std::move(facets));
}

VertexFacetPolytope connected_sum(const VertexFacetPolytope& p, int v,
                                  const VertexFacetPolytope& q, const VertexSet& f2) {
  VertexFacetPolytope cut = truncate_simple_vertex(p, v);
  // The cut facet consists of the d freshly numbered vertices.
  VertexSet cut_facet;
  for (int w = cut.vertex_count() - p.dimension(); w < cut.vertex_count(); ++w)
    cut_facet.insert(w);
  return glue_in_simplex_facet(cut, cut_facet, q, f2);
}

VertexFacetPolytope adapter_glue(const VertexFacetPolytope& p, int v,
                                 const VertexFacetPolytope& q, const VertexSet& f2) {
  // Record the neighbour set before deletion; after deletion it is the new
  // simplex facet (with indices above v shifted down).
  VertexSet neighbours;
  for (const VertexSet& f : p.facets())
    if (f.contains(v)) neighbours = neighbours | f;
  neighbours.erase(v);
  VertexFacetPolytope reduced = delete_simple_vertex(p, v);
  VertexSet hole;
  for (int w : neighbours.to_list()) hole.insert(w < v ? w : w - 1);
  return glue_in_simplex_facet(reduced, hole, q, f2);
}

// ---- predicates and selectors ----------------------------------------------

std::optional<int> find_simple_vertex(const VertexFacetPolytope& p) {
  for (int v = 0; v < p.vertex_count(); ++v)
    if (p.facet_degree(v) == p.dimension()) return v;
  return std::nullopt;
}

bool has_simple_vertex(const VertexFacetPolytope& p) { return find_simple_vertex(p).has_value(); }

std::vector<VertexSet> simplex_facets(const VertexFacetPolytope& p) {
  std::vector<VertexSet> out;
  for (const VertexSet& f : p.facets())
    if (f.count() == p.dimension()) out.push_back(f);
  return out;
}

int min_facet_size(const VertexFacetPolytope& p) {
  int best = VertexSet::capacity + 1;
  for (const VertexSet& f : p.facets()) best = std::min(best, f.count());
  return best;
}

std::optional<int> find_adapter_vertex(const VertexFacetPolytope& p) {
  int d = p.dimension();
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (p.facet_degree(v) != d) continue;
    bool all_simplices = true;
    for (const VertexSet& f : p.facets())
      if (f.contains(v) && f.count() != d) {
        all_simplices = false;
        break;
      }
    if (!all_simplices) continue;
    for (const VertexSet& f : p.facets())
      if (!f.contains(v) && f.count() == d) return v;
  }
  return std::nullopt;
}

bool is_adapter(const VertexFacetPolytope& p) { return find_adapter_vertex(p).has_value(); }

namespace {

/// Smallest facet by (size, facet order) from the given candidates.
VertexSet smallest_facet(const std::vector<VertexSet>& candidates) {
  const VertexSet* best = nullptr;
  for (const VertexSet& f : candidates)
    if (!best || f.count() < best->count() || (f.count() == best->count() && list_less(f, *best)))
      best = &f;
  return *best;
}

std::vector<VertexSet> facets_containing(const VertexFacetPolytope& p, int v) {
  std::vector<VertexSet> out;
  for (const VertexSet& f : p.facets())
    if (f.contains(v)) out.push_back(f);
  return out;
}

/// The three-step stellar pipeline on the chosen representative, stopping
/// as soon as the adapter condition holds.
VertexFacetPolytope adapterize_4(VertexFacetPolytope rep) {
  if (is_adapter(rep)) return rep;

  // Step 1: subdivide a minimum-vertex facet.
  rep = stellar_subdivide_facet(rep, smallest_facet(rep.facets()));
  int apex = rep.vertex_count() - 1;
  if (is_adapter(rep)) return rep;

  // Step 2: subdivide the smallest facet the first step created.  Every
  // 3-polytope has a 2-face with at most five vertices, so this facet is a
  // pyramid over at most a pentagon and the step creates tetrahedra.
  rep = stellar_subdivide_facet(rep, smallest_facet(facets_containing(rep, apex)));
  apex = rep.vertex_count() - 1;
  if (is_adapter(rep)) return rep;

  // Step 3: subdivide one of those tetrahedra; its apex becomes the simple
  // vertex and a sibling tetrahedron the extra simplex facet.
  std::vector<VertexSet> tetrahedra;
  for (const VertexSet& f : facets_containing(rep, apex))
    if (f.count() == 4) tetrahedra.push_back(f);
  if (tetrahedra.empty())
    throw not_applicable_error("adapter modification: no tetrahedron facet appeared");
  rep = stellar_subdivide_facet(rep, smallest_facet(tetrahedra));
  if (!is_adapter(rep))
    throw not_applicable_error("adapter modification: pipeline did not reach an adapter");
  return rep;
}

bool prefers_primal(const VertexFacetPolytope& p) {
  FVector f = fvector_of(p);
  return f[0] <= f[3];
}

}  // namespace

VertexFacetPolytope make_adapter_4(const VertexFacetPolytope& p) {
  if (p.dimension() != 4) throw dimension_error("adapter modification is for 4-polytopes");
  return adapterize_4(prefers_primal(p) ? p : dual_poly(p));
}

VertexFacetPolytope make_summand_4(const VertexFacetPolytope& p) {
  if (p.dimension() != 4) throw dimension_error("adapter modification is for 4-polytopes");
  if (prefers_primal(p)) return adapterize_4(p);
  // Modify the dual, then dualize back so the f-vector stays close to f(p).
  // The dual of an adapter keeps a simple vertex (from the extra simplex
  // facet) and a simplex facet (from the simple vertex) avoiding it.
  return dual_poly(adapterize_4(dual_poly(p)));
}

}  // namespace fvec
