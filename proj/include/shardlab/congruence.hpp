#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shardlab/poset.hpp"
#include "shardlab/shard_order.hpp"
#include "shardlab/shards.hpp"

namespace shardlab {

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// A lattice congruence of the poset of regions, given by its set of removed shards.
class Congruence {
 public:
  Congruence(std::shared_ptr<const ShardStructure> shards, Bits removed, std::vector<int> generators = {})
      : shards_(std::move(shards)), removed_(std::move(removed)), generators_(std::move(generators)) {
    const WeakOrder& w = shards_->weak();
    if (static_cast<int>(removed_.size()) != shards_->size()) throw std::invalid_argument("Congruence: removed set has wrong size");
    detail::UnionFind uf(w.size());
    for (std::size_t c = 0; c < w.covers().size(); ++c)
      if (removed_[shards_->shard_of_cover(static_cast<int>(c))]) uf.unite(w.cover(int(c)).lower, w.cover(int(c)).upper);
    class_of_.assign(w.size(), -1);
    std::vector<int> root_class(w.size(), -1);
    for (int r = 0; r < w.size(); ++r) {
      const int root = uf.find(r);
      if (root_class[root] < 0) {
        root_class[root] = static_cast<int>(classes_.size());
        classes_.push_back({});
      }
      class_of_[r] = root_class[root];
      classes_[class_of_[r]].push_back(r);
    }
    bottom_.assign(w.size(), -1);
    top_.assign(w.size(), -1);
    for (const auto& cls : classes_) {
      int lo = -1, hi = -1;
      for (int x : cls) {
        bool is_lo = true, is_hi = true;
        for (int y : cls) {
          is_lo = is_lo && w.leq(x, y);
          is_hi = is_hi && w.leq(y, x);
        }
        if (is_lo) lo = x;
        if (is_hi) hi = x;
      }
      if (lo < 0 || hi < 0) throw std::logic_error("congruence class without bottom or top");
      for (int x : cls) {
        bottom_[x] = lo;
        top_[x] = hi;
      }
      class_bottoms_.push_back(lo);
    }
    for (int r = 0; r < w.size(); ++r)
      if (bottom_[r] == r) bottoms_.push_back(r);
  }

  const ShardStructure& shards() const { return *shards_; }
  std::shared_ptr<const ShardStructure> shards_ptr() const { return shards_; }
  const WeakOrder& weak() const { return shards_->weak(); }

  const Bits& removed() const { return removed_; }
  bool is_removed(int shard) const { return removed_[shard]; }
  bool contracts_cover(int c) const { return removed_[shards_->shard_of_cover(c)]; }
  const std::vector<int>& generators() const { return generators_; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int r) const { return class_of_[r]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_bottom(int k) const { return class_bottoms_[k]; }
  int pi_down(int r) const { return bottom_[r]; }
  int pi_up(int r) const { return top_[r]; }
  bool is_bottom(int r) const { return bottom_[r] == r; }
  const std::vector<int>& bottoms() const { return bottoms_; }

  std::vector<int> contracted_join_irreducibles() const {
    std::vector<int> out;
    for (int s = 0; s < shards_->size(); ++s)
      if (removed_[s]) out.push_back(shards_->shard(s).ji);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Empty string when classes are intervals and both projections are order preserving.
  std::string validate() const {
    const WeakOrder& w = weak();
    for (const auto& cls : classes_) {
      const int lo = bottom_[cls[0]], hi = top_[cls[0]];
      std::size_t in = 0;
      for (int p = 0; p < w.size(); ++p)
        if (w.leq(lo, p) && w.leq(p, hi)) {
          ++in;
          if (class_of_[p] != class_of_[lo]) return "class of " + std::to_string(lo) + " is not an interval";
        }
      if (in != cls.size()) return "class of " + std::to_string(lo) + " is not an interval";
    }
    for (const auto& c : w.covers()) {
      if (!w.leq(bottom_[c.lower], bottom_[c.upper])) return "pi_down is not order preserving";
      if (!w.leq(top_[c.lower], top_[c.upper])) return "pi_up is not order preserving";
    }
    return {};
  }

  // Bottom membership by canonical joinands: r is a bottom iff none is contracted.
  bool is_bottom_by_joinands(int r) const {
    for (int j : weak().canonical_join_rep(r))
      if (removed_[shards_->shard_of_ji(j)]) return false;
    return true;
  }

 private:
  std::shared_ptr<const ShardStructure> shards_;
  Bits removed_;
  std::vector<int> generators_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_bottoms_;
  std::vector<int> bottom_;
  std::vector<int> top_;
  std::vector<int> bottoms_;
};

struct GenericClosure {
  std::vector<int> class_of;  // canonical class representative per region
  bool converged = false;
  int passes = 0;
};

// Finest congruence identifying the seed pairs, by fixpoint over meet and join tables.
inline GenericClosure generic_congruence_closure(const WeakOrder& w, const std::vector<std::pair<int, int>>& seeds,
                                                 int budget = 1000) {
  const int n = w.size();
  std::vector<int> meet(std::size_t(n) * n), join(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[std::size_t(a) * n + b] = w.meet(a, b);
      join[std::size_t(a) * n + b] = w.join(a, b);
    }
  detail::UnionFind uf(n);
  for (auto [a, b] : seeds) uf.unite(a, b);
  GenericClosure out;
  for (out.passes = 0; out.passes < budget; ++out.passes) {
    bool changed = false;
    for (int x = 0; x < n; ++x) {
      const int rx = uf.find(x);
      if (rx == x) continue;
      for (int z = 0; z < n; ++z) {
        changed |= uf.unite(meet[std::size_t(x) * n + z], meet[std::size_t(rx) * n + z]);
        changed |= uf.unite(join[std::size_t(x) * n + z], join[std::size_t(rx) * n + z]);
      }
    }
    if (!changed) {
      out.converged = true;
      break;
    }
  }
  out.class_of.resize(n);
  for (int x = 0; x < n; ++x) out.class_of[x] = uf.find(x);
  return out;
}

// Congruence generated by contracting the given join-irreducibles.
// Uses the shard digraph when acyclic and the generic closure otherwise.
inline Congruence generate_congruence(std::shared_ptr<const ShardStructure> shards, const ShardDigraph& digraph,
                                      const std::vector<int>& generators) {
  Bits start(shards->size());
  for (int j : generators) {
    const int s = shards->shard_of_ji(j);
    if (s < 0) throw std::invalid_argument("generator is not join-irreducible");
    start.set(s);
  }
  if (digraph.acyclic) return Congruence(shards, digraph.forward_closure(start), generators);
  const WeakOrder& w = shards->weak();
  std::vector<std::pair<int, int>> seeds;
  for (int j : generators) seeds.push_back({j, w.j_star(j)});
  GenericClosure gc = generic_congruence_closure(w, seeds);
  Bits removed(shards->size());
  for (int s = 0; s < shards->size(); ++s) {
    const int j = shards->shard(s).ji;
    if (gc.class_of[j] == gc.class_of[w.j_star(j)]) removed.set(s);
  }
  return Congruence(shards, removed, generators);
}

// Removes exactly the shards in hyperplanes outside the full subarrangement spanned by k.
inline Congruence parabolic_congruence(std::shared_ptr<const ShardStructure> shards, const HyperSet& k) {
  const HyperSet cl = shards->weak().flats().closure(k);
  Bits removed(shards->size());
  for (int s = 0; s < shards->size(); ++s)
    if (!cl[shards->shard(s).hyperplane]) removed.set(s);
  return Congruence(shards, removed);
}

// The weak order restricted to the class bottoms; node i is bottoms()[i].
inline Poset quotient_lattice(const Congruence& t) {
  const auto& b = t.bottoms();
  return Poset::from_relation(b.size(), [&](int x, int y) { return t.weak().leq(b[x], b[y]); });
}

// (π↓(W), ⪯) with labels I_Θ(π↓(L(w)), w).
class QuotientShardOrder {
 public:
  QuotientShardOrder(const Congruence& t, const ShardOrder& order) : elements_(t.bottoms()) {
    const WeakOrder& w = t.weak();
    const ShardStructure& sh = t.shards();
    for (int r : elements_) {
      Bits lab(sh.size());
      const int lo = t.pi_down(w.L(r));
      for (int c : sh.covers_in_interval(lo, r))
        if (t.is_bottom(w.cover(c).upper)) lab.set(sh.shard_of_cover(c));
      labels_.push_back(lab);
    }
    poset_ = Poset::from_relation(elements_.size(), [&](int a, int b) { return labels_[a].is_subset_of(labels_[b]); });
    restricted_ = order.poset().induced(elements_);
  }

  const std::vector<int>& elements() const { return elements_; }
  const Bits& label(int i) const { return labels_[i]; }
  const Poset& poset() const { return poset_; }
  // The restriction of (W, ⪯) to the bottoms, for comparison.
  const Poset& restricted() const { return restricted_; }

  int index_of(int region) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), region);
    return (it != elements_.end() && *it == region) ? static_cast<int>(it - elements_.begin()) : -1;
  }

 private:
  std::vector<int> elements_;
  std::vector<Bits> labels_;
  Poset poset_;
  Poset restricted_;
};

// Sum over subsets K of unremoved basic hyperplanes of (-1)^|K| |π↓(R_K)|.
inline std::int64_t quotient_mobius_parabolic(const Congruence& t) {
  const WeakOrder& w = t.weak();
  std::vector<int> basic;
  for (int h : bits_of(w.basic_hyperplanes())) {
    // the shard of a basic hyperplane is the whole hyperplane; its join-irreducible is an atom
    for (int c : w.upper_covers(w.bottom()))
      if (w.cover(c).hyperplane == h && !t.contracts_cover(c)) basic.push_back(h);
  }
  std::int64_t total = 0;
  for (std::uint32_t m = 0; m < (1u << basic.size()); ++m) {
    HyperSet k;
    for (std::size_t i = 0; i < basic.size(); ++i)
      if (m >> i & 1u) k.set(basic[i]);
    std::set<int> image;
    for (int r : w.parabolic_regions(k)) image.insert(t.pi_down(r));
    const auto sz = static_cast<std::int64_t>(image.size());
    total += __builtin_popcount(m) % 2 ? -sz : sz;
  }
  return total;
}

inline std::int64_t quotient_mobius_direct(const QuotientShardOrder& q, const Congruence& t) {
  const int lo = q.index_of(t.weak().bottom());
  const int hi = q.index_of(t.pi_down(t.weak().top()));
  return q.poset().mobius(lo, hi);
}

// Smallest |K|, K among the basic hyperplanes, with sep(j) inside the closure of K.
inline int ji_degree(const WeakOrder& w, int j) {
  const auto basic = bits_of(w.basic_hyperplanes());
  int best = -1;
  for (std::uint32_t m = 0; m < (1u << basic.size()); ++m) {
    HyperSet k;
    for (std::size_t i = 0; i < basic.size(); ++i)
      if (m >> i & 1u) k.set(basic[i]);
    if (!is_subset(w.sep(j), w.flats().closure(k))) continue;
    const int d = __builtin_popcount(m);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

// Degree of a congruence: maximum degree over removed shards not forced by other removed shards.
inline int congruence_degree(const Congruence& t, const ShardDigraph& g) {
  int deg = 0;
  const ShardStructure& sh = t.shards();
  for (int s = 0; s < sh.size(); ++s) {
    if (!t.is_removed(s)) continue;
    bool forced = false;
    for (int u = 0; u < sh.size() && !forced; ++u)
      forced = u != s && t.is_removed(u) && g.reaches(u, s) && !g.reaches(s, u);
    if (!forced) deg = std::max(deg, ji_degree(t.weak(), sh.shard(s).ji));
  }
  return deg;
}

// Whether (π↓(W), ⪯) is closed under meets and joins of (W, ⪯).
inline bool is_shard_order_sublattice(const Congruence& t, const ShardOrder& order) {
  const Poset& p = order.poset();
  const auto& b = t.bottoms();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      auto m = p.meet(b[i], b[j]);
      auto jn = p.join(b[i], b[j]);
      if (!m || !jn || !t.is_bottom(*m) || !t.is_bottom(*jn)) return false;
    }
  return true;
}

}  // namespace shardlab
