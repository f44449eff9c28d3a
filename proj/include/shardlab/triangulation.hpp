#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shardlab/congruence.hpp"
#include "shardlab/poset.hpp"
#include "shardlab/shard_order.hpp"
#include "shardlab/shards.hpp"
#include "shardlab/weak_order.hpp"

namespace shardlab {

using Simplex = std::vector<int>;  // sorted vertex ids

// A face of the fan of the arrangement: the face of region `top` cut out by the lower facets in k.
struct FanFace {
  int top;
  HyperSet k;
  int bottom;
  int codim;
};

// Every face appears once, keyed by its top region (each facet of the top region containing it is a lower facet).
inline std::vector<FanFace> fan_faces(const WeakOrder& w) {
  std::vector<FanFace> out;
  for (int r = 0; r < w.size(); ++r) {
    const auto& lows = w.lower_covers(r);
    for (std::uint32_t m = 0; m < (1u << lows.size()); ++m) {
      HyperSet k;
      std::vector<int> below;
      for (std::size_t i = 0; i < lows.size(); ++i)
        if (m >> i & 1u) {
          k.set(w.cover(lows[i]).hyperplane);
          below.push_back(w.cover(lows[i]).lower);
        }
      out.push_back({r, k, below.empty() ? r : w.meet_of(below), static_cast<int>(below.size())});
    }
  }
  return out;
}

// Counts of fan faces by codimension.
inline std::vector<std::int64_t> fan_face_counts(const WeakOrder& w) {
  std::vector<std::int64_t> out;
  for (const auto& f : fan_faces(w)) {
    if (static_cast<int>(out.size()) <= f.codim) out.resize(f.codim + 1, 0);
    ++out[f.codim];
  }
  return out;
}

// A regular cell complex given by the vertex sets of its cells.
struct CellComplex {
  int num_vertices = 0;
  std::vector<Simplex> cells;
  std::vector<int> dims;

  int size() const { return static_cast<int>(cells.size()); }

  std::vector<std::int64_t> counts_by_dim() const {
    std::vector<std::int64_t> out;
    for (int d : dims) {
      if (static_cast<int>(out.size()) <= d) out.resize(d + 1, 0);
      ++out[d];
    }
    return out;
  }

  // Cells of dimension one less whose vertex sets lie inside cell c.
  std::vector<int> facets(int c) const {
    std::vector<int> out;
    for (int g = 0; g < size(); ++g)
      if (dims[g] + 1 == dims[c] && std::includes(cells[c].begin(), cells[c].end(), cells[g].begin(), cells[g].end()))
        out.push_back(g);
    return out;
  }
};

// Cells of the dual zonotope: one per fan face, vertex set = regions containing the face, dim = codim of the face.
inline CellComplex zonotope_complex(const WeakOrder& w) {
  CellComplex cx;
  cx.num_vertices = w.size();
  for (const auto& f : fan_faces(w)) {
    cx.cells.push_back(w.interval(f.bottom, f.top));
    cx.dims.push_back(f.codim);
  }
  return cx;
}

// Cells of the dual ball of the quotient fan: vertices are congruence classes; a cell is the set of classes
// of regions containing some fan face, with dimension the least codim among the faces giving that set.
inline CellComplex quotient_complex(const Congruence& t) {
  const WeakOrder& w = t.weak();
  std::map<Simplex, int> dim_of;
  for (const auto& f : fan_faces(w)) {
    std::set<int> cls;
    for (int p : w.interval(f.bottom, f.top)) cls.insert(t.class_of(p));
    Simplex key(cls.begin(), cls.end());
    auto [it, fresh] = dim_of.emplace(key, f.codim);
    if (!fresh) it->second = std::min(it->second, f.codim);
  }
  CellComplex cx;
  cx.num_vertices = t.num_classes();
  for (const auto& [cell, d] : dim_of) {
    cx.cells.push_back(cell);
    cx.dims.push_back(d);
  }
  return cx;
}

// Vertex order for pulling: a before b iff a is weakly above b in the poset of regions.
inline Poset dual_weak_order(const WeakOrder& w) {
  return Poset::from_relation(w.size(), [&](int a, int b) { return w.leq(b, a); });
}

// Same for classes, ordered through their bottoms.
inline Poset dual_quotient_order(const Congruence& t) {
  return Poset::from_relation(t.num_classes(),
                              [&](int a, int b) { return t.weak().leq(t.class_bottom(b), t.class_bottom(a)); });
}

class NoUniqueMinimalVertex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PulledTriangulation {
  std::vector<Simplex> maximal;
  std::set<Simplex> simplices;  // every nonempty face

  // f[k] = number of simplices with k + 1 vertices; the empty simplex is not counted.
  std::vector<std::int64_t> f_vector() const {
    std::vector<std::int64_t> f;
    for (const auto& s : simplices) {
      if (f.size() < s.size()) f.resize(s.size(), 0);
      ++f[s.size() - 1];
    }
    return f;
  }

  bool contains(const Simplex& s) const { return s.empty() || simplices.count(s) > 0; }
};

namespace detail {

class Puller {
 public:
  Puller(const CellComplex& cx, const Poset& order) : cx_(cx), order_(order), memo_(cx.size()), done_(cx.size(), false) {}

  const std::vector<Simplex>& pull(int c) {
    if (done_[c]) return memo_[c];
    const Simplex& verts = cx_.cells[c];
    std::vector<int> minimal;
    for (int v : verts) {
      bool is_min = true;
      for (int u : verts)
        if (u != v && order_.leq(u, v)) is_min = false;
      if (is_min) minimal.push_back(v);
    }
    if (minimal.size() != 1) throw NoUniqueMinimalVertex("cell " + std::to_string(c) + " has no unique minimal vertex");
    const int v = minimal[0];
    std::vector<Simplex> out;
    if (cx_.dims[c] == 0) {
      out.push_back({v});
    } else {
      for (int g : cx_.facets(c)) {
        if (std::binary_search(cx_.cells[g].begin(), cx_.cells[g].end(), v)) continue;
        for (Simplex s : pull(g)) {
          s.insert(std::upper_bound(s.begin(), s.end(), v), v);
          out.push_back(std::move(s));
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    memo_[c] = std::move(out);
    done_[c] = true;
    return memo_[c];
  }

 private:
  const CellComplex& cx_;
  const Poset& order_;
  std::vector<std::vector<Simplex>> memo_;
  std::vector<bool> done_;
};

inline void add_faces(const Simplex& s, std::set<Simplex>& out) {
  const std::uint32_t n = static_cast<std::uint32_t>(s.size());
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    Simplex f;
    for (std::uint32_t i = 0; i < n; ++i)
      if (m >> i & 1u) f.push_back(s[i]);
    out.insert(std::move(f));
  }
}

}  // namespace detail

// Pulling triangulation of every inclusion-maximal cell; order.leq(a, b) means a is pulled no later than b.
inline PulledTriangulation pulling_triangulation(const CellComplex& cx, const Poset& order) {
  detail::Puller puller(cx, order);
  PulledTriangulation out;
  std::set<Simplex> maximal;
  for (int c = 0; c < cx.size(); ++c) {
    bool is_max = true;
    for (int d = 0; d < cx.size() && is_max; ++d)
      if (d != c && cx.cells[d].size() > cx.cells[c].size() &&
          std::includes(cx.cells[d].begin(), cx.cells[d].end(), cx.cells[c].begin(), cx.cells[c].end()))
        is_max = false;
    if (!is_max) continue;
    for (const auto& s : puller.pull(c)) maximal.insert(s);
  }
  for (const auto& s : maximal) {
    bool covered = false;
    for (const auto& t : maximal)
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) covered = true;
    if (!covered) out.maximal.push_back(s);
    detail::add_faces(s, out.simplices);
  }
  return out;
}

// The chain-to-simplex map for (π↓(R), ⪯) under a congruence (the identity congruence gives the full order).
// Vertices are class ids of the congruence. A chain is given as a set of class bottoms.
class DeltaMap {
 public:
  explicit DeltaMap(const Congruence& t) : theta_(t) {
    root_ = std::make_unique<Node>(t.shards_ptr(), t.removed(), identity(t.weak().size()));
  }

  Simplex operator()(std::vector<int> chain) const {
    std::vector<int> regions;
    root_->delta(std::move(chain), regions);
    Simplex out;
    for (int r : regions) out.push_back(theta_.class_of(r));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Inverse map on simplices given by class ids; returns the chain as sorted class bottoms.
  std::vector<int> inverse(const Simplex& simplex) const {
    std::vector<int> regions;
    for (int c : simplex) regions.push_back(theta_.class_bottom(c));
    std::vector<int> chain = root_->gamma(regions);
    std::sort(chain.begin(), chain.end());
    return chain;
  }

 private:
  static std::vector<int> identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
  }

  // A sub-arrangement context: its order, shards, shard order, restricted congruence and embedding.
  struct Node {
    std::shared_ptr<const ShardStructure> shards;
    std::unique_ptr<ShardOrder> order;
    std::unique_ptr<Congruence> theta;
    std::vector<int> embed;
    mutable std::map<int, std::unique_ptr<Node>> children;
    mutable std::map<int, std::vector<int>> phi;  // phi[R][u] = child region matched to u, or -1

    Node(std::shared_ptr<const ShardStructure> sh, Bits removed, std::vector<int> emb)
        : shards(std::move(sh)), embed(std::move(emb)) {
      order = std::make_unique<ShardOrder>(shards);
      theta = std::make_unique<Congruence>(shards, std::move(removed));
    }

    const WeakOrder& weak() const { return shards->weak(); }

    Node& child(int r) const {
      auto it = children.find(r);
      if (it != children.end()) return *it->second;
      const WeakOrder& w = weak();
      SubOrder sub = facial_suborder(w, w.L(r), r);
      auto sub_shards = std::make_shared<ShardStructure>(sub.order);
      std::vector<int> local(w.size(), -1);
      for (std::size_t i = 0; i < sub.regions.size(); ++i) local[sub.regions[i]] = static_cast<int>(i);
      // shard correspondence through the covers of the interval
      std::vector<int> shard_map(shards->size(), -1);
      Bits removed(sub_shards->size());
      std::vector<int> seen(sub_shards->size(), -1);
      for (int c : shards->covers_in_interval(w.L(r), r)) {
        const Cover& cv = w.cover(c);
        const int cc = sub.order->cover_between(local[cv.lower], local[cv.upper]);
        if (cc < 0) throw std::logic_error("delta: interval cover missing in the subarrangement");
        const int s = shards->shard_of_cover(c), t = sub_shards->shard_of_cover(cc);
        if (shard_map[s] >= 0 && shard_map[s] != t) throw std::logic_error("delta: shard correspondence is not a map");
        shard_map[s] = t;
        const int rem = theta->contracts_cover(c) ? 1 : 0;
        if (seen[t] >= 0 && seen[t] != rem) throw std::logic_error("delta: restricted congruence is inconsistent");
        seen[t] = rem;
        if (rem) removed.set(t);
      }
      std::vector<int> emb;
      for (int p : sub.regions) emb.push_back(embed[p]);
      auto node = std::make_unique<Node>(sub_shards, removed, emb);
      std::vector<int> m(w.size(), -1);
      for (int u = 0; u < w.size(); ++u) {
        if (!order->preceq(u, r)) continue;
        Bits lab(sub_shards->size());
        const Bits& own = order->label(u);
        for (auto s = own.find_first(); s != Bits::npos; s = own.find_next(s)) lab.set(shard_map[s]);
        m[u] = node->order->find_label(lab);
        if (m[u] < 0) throw std::logic_error("delta: no subarrangement region with the translated label");
      }
      phi[r] = std::move(m);
      return *children.emplace(r, std::move(node)).first->second;
    }

    int quotient_top() const { return theta->pi_down(weak().top()); }

    void delta(std::vector<int> chain, std::vector<int>& out) const {
      const int top = quotient_top();
      auto it = std::find(chain.begin(), chain.end(), top);
      if (it != chain.end()) {
        out.push_back(embed[top]);
        chain.erase(it);
      }
      if (chain.empty()) return;
      int r = chain[0];
      for (int u : chain)
        if (order->label(u).count() > order->label(r).count()) r = u;
      Node& c = child(r);
      const auto& m = phi.at(r);
      std::vector<int> mapped;
      for (int u : chain) {
        if (!theta->is_bottom(u)) throw std::invalid_argument("delta: chain element is not a class bottom");
        if (m[u] < 0) throw std::invalid_argument("delta: not a chain");
        mapped.push_back(m[u]);
      }
      c.delta(std::move(mapped), out);
    }

    // regions: one representative region per vertex (any region of the class inside this node).
    std::vector<int> gamma(std::vector<int> regions) const {
      std::vector<int> chain;
      const WeakOrder& w = weak();
      const int top_class = theta->class_of(w.top());
      std::vector<int> rest;
      for (int p : regions) {
        if (theta->class_of(p) == top_class) chain.push_back(quotient_top());
        else rest.push_back(p);
      }
      if (rest.empty()) return chain;
      // the next chain element is the bottom of the greatest remaining class
      int best = rest[0];
      for (int p : rest)
        if (w.leq(theta->pi_down(best), theta->pi_down(p))) best = p;
      const int r = theta->pi_down(best);
      Node& c = child(r);
      const auto& m = phi.at(r);
      std::vector<int> local;
      for (int p : rest) {
        // some region of p's class inside [L(r), r]
        int rep = -1;
        for (int q : w.interval(w.L(r), r))
          if (theta->class_of(q) == theta->class_of(p)) rep = q;
        if (rep < 0) throw std::invalid_argument("gamma: vertex outside the face");
        local.push_back(static_cast<int>(std::find(c.embed.begin(), c.embed.end(), embed[rep]) - c.embed.begin()));
      }
      for (int v : c.gamma(local)) {
        auto pos = std::find(m.begin(), m.end(), v);
        if (pos == m.end()) throw std::invalid_argument("gamma: no preimage");
        chain.push_back(static_cast<int>(pos - m.begin()));
      }
      return chain;
    }
  };

  const Congruence& theta_;
  std::unique_ptr<Node> root_;
};

// All chains (including the empty chain) of the restriction of (W, ⪯) to the class bottoms, as sorted region lists.
inline std::vector<std::vector<int>> bottom_chains(const Congruence& t, const ShardOrder& order) {
  const auto& b = t.bottoms();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // extend chains upward in increasing label size
  std::vector<int> sorted = b;
  std::stable_sort(sorted.begin(), sorted.end(), [&](int x, int y) { return order.label(x).count() < order.label(y).count(); });
  auto rec = [&](auto&& self, std::size_t from) -> void {
    out.push_back(cur);
    for (std::size_t i = from; i < sorted.size(); ++i) {
      const int u = sorted[i];
      if (!cur.empty() && (u == cur.back() || !order.preceq(cur.back(), u))) continue;
      cur.push_back(u);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

struct DeltaReport {
  std::size_t chains = 0;
  std::size_t simplices = 0;
  bool injective = false;
  bool onto = false;
  bool dimension_preserving = false;
  bool round_trip = false;
  bool all() const { return injective && onto && dimension_preserving && round_trip; }
};

// Applies δ to every chain and compares with the pulled triangulation.
inline DeltaReport check_delta(const Congruence& t, const ShardOrder& order, const PulledTriangulation& tri) {
  DeltaMap delta(t);
  DeltaReport rep;
  auto chains = bottom_chains(t, order);
  rep.chains = chains.size();
  rep.simplices = tri.simplices.size() + 1;
  std::set<Simplex> images;
  rep.dimension_preserving = true;
  rep.round_trip = true;
  bool inside = true;
  for (const auto& ch : chains) {
    Simplex s = delta(ch);
    if (s.size() != ch.size()) rep.dimension_preserving = false;
    if (!tri.contains(s)) inside = false;
    images.insert(s);
    if (delta.inverse(s) != ch) rep.round_trip = false;
  }
  rep.injective = images.size() == chains.size();
  rep.onto = inside && images.size() == rep.simplices;
  return rep;
}

// Triangulation of the dual ball of the quotient fan, pulled in the dual quotient order.
inline PulledTriangulation quotient_triangulation(const Congruence& t) {
  return pulling_triangulation(quotient_complex(t), dual_quotient_order(t));
}

inline PulledTriangulation zonotope_triangulation(const WeakOrder& w) {
  return pulling_triangulation(zonotope_complex(w), dual_weak_order(w));
}

struct SubcomplexReport {
  bool subcomplex = false;
  bool induced = false;
};

// Identifies each class with its bottom region and compares the quotient triangulation with the full one.
inline SubcomplexReport subcomplex_probe(const Congruence& t, const PulledTriangulation& full,
                                         const PulledTriangulation& quotient) {
  SubcomplexReport rep;
  rep.subcomplex = true;
  std::set<Simplex> mapped;
  for (const auto& s : quotient.simplices) {
    Simplex r;
    for (int c : s) r.push_back(t.class_bottom(c));
    std::sort(r.begin(), r.end());
    if (!full.contains(r)) rep.subcomplex = false;
    mapped.insert(r);
  }
  rep.induced = rep.subcomplex;
  for (const auto& s : full.simplices) {
    bool on_bottoms = true;
    for (int v : s) on_bottoms = on_bottoms && t.is_bottom(v);
    if (on_bottoms && !mapped.count(s)) rep.induced = false;
  }
  return rep;
}

// Faces of the dual ball grouped by the number of classes around a codim-2 quotient face:
// each 2-cell must be a polygon whose edges form a single cycle.
inline bool two_cells_are_polygons(const CellComplex& cx, std::vector<int>* sizes = nullptr) {
  for (int c = 0; c < cx.size(); ++c) {
    if (cx.dims[c] != 2) continue;
    const auto edges = cx.facets(c);
    const Simplex& verts = cx.cells[c];
    if (edges.size() != verts.size()) return false;
    std::map<int, std::vector<int>> adj;
    for (int e : edges) {
      if (cx.cells[e].size() != 2) return false;
      adj[cx.cells[e][0]].push_back(cx.cells[e][1]);
      adj[cx.cells[e][1]].push_back(cx.cells[e][0]);
    }
    for (int v : verts)
      if (adj[v].size() != 2) return false;
    std::set<int> seen{verts[0]};
    int prev = verts[0], cur = adj[verts[0]][0];
    while (cur != verts[0]) {
      seen.insert(cur);
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    if (seen.size() != verts.size()) return false;
    if (sizes) sizes->push_back(static_cast<int>(verts.size()));
  }
  return true;
}

}  // namespace shardlab
