#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shardlab/arrangement.hpp"
#include "shardlab/cambrian.hpp"
#include "shardlab/cone.hpp"
#include "shardlab/congruence.hpp"
#include "shardlab/coxeter.hpp"
#include "shardlab/shard_order.hpp"
#include "shardlab/shards.hpp"
#include "shardlab/triangulation.hpp"

// Points are written in coordinates x_i = <alpha_i, x>; the hyperplane of a positive root beta then has
// normal vector the simple-root coefficients of beta, and the base region B is the positive orthant.

namespace shardlab {

class MidpointOnCutLocus : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotBipartite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class F>
const RootGeometry<F>& root_geometry(const CoxeterGroup& g) {
  const auto* geo = std::get_if<RootGeometry<F>>(&g.geometry());
  if (!geo) throw std::invalid_argument("group " + g.type().name() + " has no geometry over this field");
  return *geo;
}

// The Coxeter arrangement with hyperplane ids equal to positive-root ids and region ids equal to element ids.
template <class F>
Arrangement<F> coxeter_arrangement(const CoxeterGroup& g) {
  const auto& geo = root_geometry<F>(g);
  Arrangement<F> a;
  a.base_point.assign(g.rank(), F(1));
  for (int r = 0; r < g.num_positive_roots(); ++r) a.hyperplanes.emplace_back(geo.positive_roots[r], r);
  a.rank = g.rank();
  for (int w = 0; w < g.size(); ++w) a.regions.push_back(g.inversions(w));
  return a;
}

// w applied to the all-ones point of B: coordinate j is the coefficient sum of w^{-1}(alpha_j).
template <class F>
Vec<F> region_point(const CoxeterGroup& g, int w) {
  const auto& geo = root_geometry<F>(g);
  const int wi = g.inverse(w);
  Vec<F> p(g.rank(), F(0));
  for (int j = 0; j < g.rank(); ++j)
    for (const auto& c : geo.root(g.act(wi, j))) p[j] += c;
  return p;
}

// The subspace fixed by w: points annihilated by every root in the image of w - 1.
template <class F>
Cone<F> fixed_space(const CoxeterGroup& g, int w) {
  const auto& geo = root_geometry<F>(g);
  std::vector<Vec<F>> eq;
  for (int s = 0; s < g.rank(); ++s) eq.push_back(subtract(geo.root(g.act(w, s)), geo.root(s)));
  return Cone<F>(g.rank(), std::move(eq), {});
}

// Geometric shards and shard intersections of a Coxeter arrangement.
template <class F>
class ShardGeometry {
 public:
  ShardGeometry(const CoxeterGroup& g, std::shared_ptr<const ShardStructure> shards)
      : g_(g), shards_(std::move(shards)), arr_(coxeter_arrangement<F>(g)) {
    const WeakOrder& w = shards_->weak();
    for (int r = 0; r < w.size(); ++r) points_.push_back(region_point<F>(g, r));
    // one sign vector per cover, from the midpoint of the two region points
    std::map<std::pair<int, std::string>, int> groups;
    cover_group_.resize(w.covers().size());
    for (std::size_t c = 0; c < w.covers().size(); ++c) {
      const Cover& cv = w.cover(static_cast<int>(c));
      Vec<F> mid = add(points_[cv.lower], points_[cv.upper]);
      if (!arr_.hyperplanes[cv.hyperplane].contains(mid)) throw std::logic_error("midpoint off the separating hyperplane");
      std::string key;
      std::vector<Vec<F>> ineq;
      for (int h : bits_of(shards_->cutting_hyperplanes(cv.hyperplane))) {
        const Side s = side_of(mid, arr_.hyperplanes[h].normal, arr_.base_point);
        if (s == Side::on) throw MidpointOnCutLocus("midpoint of a cover lies on a cutting hyperplane");
        key += std::to_string(h) + (s == Side::below ? "-" : "+");
        ineq.push_back(s == Side::below ? arr_.base_normal(h) : negate(arr_.base_normal(h)));
      }
      auto [it, fresh] = groups.emplace(std::make_pair(cv.hyperplane, key), static_cast<int>(cones_.size()));
      if (fresh) {
        cones_.emplace_back(g.rank(), std::vector<Vec<F>>{arr_.hyperplanes[cv.hyperplane].normal}, std::move(ineq));
        keys_.push_back(key);
        hyperplane_.push_back(cv.hyperplane);
      }
      cover_group_[c] = it->second;
    }
  }

  const Arrangement<F>& arrangement() const { return arr_; }
  const Vec<F>& point(int r) const { return points_[r]; }
  int num_geometric_shards() const { return static_cast<int>(cones_.size()); }
  int group_of_cover(int c) const { return cover_group_[c]; }
  const Cone<F>& shard_cone(int k) const { return cones_[k]; }
  const std::string& sign_key(int k) const { return keys_[k]; }

  // Whether grouping covers by (hyperplane, signs) gives the same partition as the lattice computation.
  bool partition_agrees() const {
    const int nc = static_cast<int>(cover_group_.size());
    std::map<int, int> fwd, back;
    for (int c = 0; c < nc; ++c) {
      const int a = cover_group_[c], b = shards_->shard_of_cover(c);
      auto [i, f1] = fwd.emplace(a, b);
      auto [j, f2] = back.emplace(b, a);
      if (i->second != b || j->second != a) return false;
    }
    return true;
  }

  // Geometric cone of a lattice shard.
  const Cone<F>& cone_of_shard(int s) const { return cones_[cover_group_[shards_->shard(s).covers.front()]]; }

  // Intersection of the lower shards of w.
  Cone<F> psi(int w) const {
    Cone<F> out = Cone<F>::whole_space(g_.rank());
    for (int s : shards_->lower_shards(w)) out = out.intersect(cone_of_shard(s));
    return out;
  }

  // Shards containing a cone.
  Bits containing_shards(const Cone<F>& c) const {
    Bits out(shards_->size());
    for (int s = 0; s < shards_->size(); ++s)
      if (cone_of_shard(s).contains(c)) out.set(s);
    return out;
  }

  // Image of a shard under x -> -x: the shard on the same hyperplane with all cutting signs flipped.
  std::vector<int> negation_map() const {
    std::map<std::string, int> by_key;
    for (int s = 0; s < shards_->size(); ++s) by_key.emplace(cone_of_shard(s).key(), s);
    std::vector<int> out(shards_->size(), -1);
    for (int s = 0; s < shards_->size(); ++s) {
      const Cone<F>& c = cone_of_shard(s);
      std::vector<Vec<F>> ineq;
      for (const auto& a : c.inequalities()) ineq.push_back(negate(a));
      Cone<F> neg(c.ambient_dim(), c.equalities(), std::move(ineq));
      auto it = by_key.find(neg.key());
      if (it != by_key.end()) out[s] = it->second;
    }
    return out;
  }

 private:
  const CoxeterGroup& g_;
  std::shared_ptr<const ShardStructure> shards_;
  Arrangement<F> arr_;
  std::vector<Vec<F>> points_;
  std::vector<Cone<F>> cones_;
  std::vector<std::string> keys_;
  std::vector<int> hyperplane_;
  std::vector<int> cover_group_;
};

struct PsiReport {
  bool codim_is_descents = true;
  bool containing_is_label = true;
  bool order_matches = true;
  bool injective = true;
  bool faces_in_psi = true;
  bool minimal_face_standard = true;
  bool all() const {
    return codim_is_descents && containing_is_label && order_matches && injective && faces_in_psi && minimal_face_standard;
  }
};

// Geometric checks of Ψ against the shard order.
template <class F>
PsiReport check_psi(const ShardGeometry<F>& geo, const ShardOrder& order) {
  PsiReport rep;
  const WeakOrder& w = order.weak();
  const auto& arr = geo.arrangement();
  std::vector<Cone<F>> psi;
  std::map<std::string, int> by_key;
  for (int r = 0; r < w.size(); ++r) {
    psi.push_back(geo.psi(r));
    if (static_cast<int>(psi[r].codim()) != static_cast<int>(w.lower_covers(r).size())) rep.codim_is_descents = false;
    if (geo.containing_shards(psi[r]) != order.label(r)) rep.containing_is_label = false;
    if (!by_key.emplace(psi[r].key(), r).second) rep.injective = false;
  }
  for (int a = 0; a < w.size(); ++a)
    for (int b = 0; b < w.size(); ++b)
      if (psi[a].contains(psi[b]) != order.preceq(a, b)) rep.order_matches = false;
  const auto basic = bits_of(w.basic_hyperplanes());
  for (int r = 0; r < w.size(); ++r) {
    for (const auto& f : psi[r].faces())
      if (!by_key.count(f.key())) rep.faces_in_psi = false;
    // the minimal face is the intersection of the basic hyperplanes containing it
    const Cone<F> lin = psi[r].minimal_face();
    std::vector<Vec<F>> eq;
    for (int h : basic) {
      bool contains = true;
      for (const auto& l : lin.lineality()) contains = contains && arr.hyperplanes[h].contains(l);
      if (contains) eq.push_back(arr.hyperplanes[h].normal);
    }
    if (Cone<F>(arr.dim(), std::move(eq), {}).key() != lin.key()) rep.minimal_face_standard = false;
  }
  return rep;
}

struct ShellingReport {
  std::size_t faces = 0;
  std::vector<std::size_t> faces_by_dim;
  bool partition = true;
};

// Every face F of the fan lies in exactly one interval [G(R), R] with G(R) = R ∩ (lower facets of R).
template <class F>
ShellingReport check_shelling_partition(const Arrangement<F>& arr) {
  ShellingReport rep;
  std::vector<Cone<F>> regions;
  std::vector<Cone<F>> g;
  for (const auto& s : arr.regions) {
    Cone<F> c = arr.region_cone(s);
    const Vec<F> p = c.relative_interior_point();
    std::vector<Vec<F>> lower;
    for (const auto& n : c.facet_normals())
      if (side_of(p, n, arr.base_point) == Side::above) lower.push_back(n);
    g.push_back(Cone<F>(arr.dim(), lower, c.inequalities()));
    regions.push_back(std::move(c));
  }
  std::map<std::string, Cone<F>> faces;
  for (const auto& c : regions)
    for (auto& f : c.faces()) faces.emplace(f.key(), std::move(f));
  rep.faces = faces.size();
  rep.faces_by_dim.assign(arr.dim() + 1, 0);
  for (const auto& [k, f] : faces) {
    ++rep.faces_by_dim[f.dim()];
    int hits = 0;
    for (std::size_t r = 0; r < regions.size(); ++r) hits += regions[r].contains(f) && f.contains(g[r]);
    if (hits != 1) rep.partition = false;
  }
  return rep;
}

struct QuotientFanReport {
  std::vector<std::size_t> faces_by_dim;
  bool classes_are_cones = true;     // each class cone is exactly the union of its regions
  bool intervals = true;             // classes around each face form an interval of the quotient
  bool matches_cell_complex = true;  // agrees with the combinatorial dual cells
};

// Class cones from the lower hyperplanes of the class bottom and the upper hyperplanes of the class top.
template <class F>
std::vector<Cone<F>> class_cones(const Arrangement<F>& arr, const Congruence& t) {
  const WeakOrder& w = t.weak();
  std::vector<Cone<F>> out;
  for (int k = 0; k < t.num_classes(); ++k) {
    const int lo = t.class_bottom(k), hi = t.pi_up(lo);
    std::vector<Vec<F>> ineq;
    for (int h : bits_of(w.lower_hyperplanes(lo))) ineq.push_back(negate(arr.base_normal(h)));
    for (int h : bits_of(w.upper_hyperplanes(hi))) ineq.push_back(arr.base_normal(h));
    out.emplace_back(arr.dim(), std::vector<Vec<F>>{}, std::move(ineq));
  }
  return out;
}

template <class F>
QuotientFanReport check_quotient_fan(const Arrangement<F>& arr, const Congruence& t, const CellComplex& cells) {
  QuotientFanReport rep;
  const WeakOrder& w = t.weak();
  auto cones = class_cones(arr, t);
  std::vector<Vec<F>> pts;
  for (const auto& s : arr.regions) pts.push_back(arr.region_cone(s).relative_interior_point());
  for (int k = 0; k < t.num_classes(); ++k)
    for (int r = 0; r < w.size(); ++r)
      if (cones[k].contains(pts[r]) != (t.class_of(r) == k)) rep.classes_are_cones = false;
  std::map<std::string, Cone<F>> faces;
  for (const auto& c : cones)
    for (auto& f : c.faces()) faces.emplace(f.key(), std::move(f));
  rep.faces_by_dim.assign(arr.dim() + 1, 0);
  std::map<Simplex, int> geometric;
  for (const auto& [key, f] : faces) {
    ++rep.faces_by_dim[f.dim()];
    Simplex around;
    for (int k = 0; k < t.num_classes(); ++k)
      if (cones[k].contains(f)) around.push_back(k);
    geometric.emplace(around, static_cast<int>(arr.dim() - f.dim()));
    // interval test in the quotient order
    int lo = -1, hi = -1;
    for (int k : around) {
      bool is_lo = true, is_hi = true;
      for (int m : around) {
        is_lo = is_lo && w.leq(t.class_bottom(k), t.class_bottom(m));
        is_hi = is_hi && w.leq(t.class_bottom(m), t.class_bottom(k));
      }
      if (is_lo) lo = k;
      if (is_hi) hi = k;
    }
    if (lo < 0 || hi < 0) {
      rep.intervals = false;
      continue;
    }
    for (int k = 0; k < t.num_classes(); ++k) {
      const bool between = w.leq(t.class_bottom(lo), t.class_bottom(k)) && w.leq(t.class_bottom(k), t.class_bottom(hi));
      if (between != std::binary_search(around.begin(), around.end(), k)) rep.intervals = false;
    }
  }
  std::map<Simplex, int> combinatorial;
  for (int c = 0; c < cells.size(); ++c) combinatorial.emplace(cells.cells[c], cells.dims[c]);
  rep.matches_cell_complex = geometric == combinatorial;
  return rep;
}

// Intersections of the sortable ψ cones with C = {weakly above initial H_s, weakly below final H_s};
// reports whether Γ -> Γ ∩ C is an isomorphism of the containment orders.
template <class F>
bool check_bipartite_restriction(const CoxeterGroup& g, const ShardGeometry<F>& geo, const CambrianData& cd,
                                 std::vector<Cone<F>>* restricted = nullptr) {
  if (!is_bipartite(g, cd.c)) throw NotBipartite("Coxeter element is not bipartite");
  std::vector<Vec<F>> ineq;
  for (int s = 0; s < g.rank(); ++s) {
    Vec<F> e(g.rank(), F(0));
    e[s] = F(1);
    ineq.push_back(is_initial(g, cd.c, s) ? negate(e) : e);
  }
  const Cone<F> c(g.rank(), {}, std::move(ineq));
  std::vector<Cone<F>> full, cut;
  for (int w : cd.sortables) {
    full.push_back(geo.psi(w));
    cut.push_back(full.back().intersect(c));
  }
  std::set<std::string> keys;
  for (const auto& x : cut) keys.insert(x.key());
  bool ok = keys.size() == cut.size();
  for (std::size_t a = 0; a < full.size() && ok; ++a)
    for (std::size_t b = 0; b < full.size() && ok; ++b) ok = full[a].contains(full[b]) == cut[a].contains(cut[b]);
  if (restricted) *restricted = std::move(cut);
  return ok;
}

}  // namespace shardlab
