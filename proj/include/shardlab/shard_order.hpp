#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shardlab/coxeter.hpp"
#include "shardlab/poset.hpp"
#include "shardlab/shards.hpp"

namespace shardlab {

// (W, ⪯): u ⪯ v iff the shard label of u is contained in that of v.
class ShardOrder {
 public:
  explicit ShardOrder(std::shared_ptr<const ShardStructure> shards) : shards_(std::move(shards)) {
    const WeakOrder& w = shards_->weak();
    labels_.assign(w.size(), Bits(shards_->size()));
    for (int r = 0; r < w.size(); ++r) {
      for (int c : shards_->covers_in_interval(w.L(r), r)) labels_[r].set(shards_->shard_of_cover(c));
      label_index_.emplace(labels_[r], r);
    }
    if (static_cast<int>(label_index_.size()) != w.size()) throw std::logic_error("shard labels are not injective");
    poset_ = Poset::from_relation(w.size(), [&](int a, int b) { return labels_[a].is_subset_of(labels_[b]); });
  }

  const ShardStructure& shards() const { return *shards_; }
  std::shared_ptr<const ShardStructure> shards_ptr() const { return shards_; }
  const WeakOrder& weak() const { return shards_->weak(); }
  int size() const { return static_cast<int>(labels_.size()); }

  const Bits& label(int r) const { return labels_[r]; }
  bool preceq(int u, int v) const { return labels_[u].is_subset_of(labels_[v]); }
  const Poset& poset() const { return poset_; }
  int rank(int r) const { return static_cast<int>(weak().lower_covers(r).size()); }

  // Region with the given label, or -1.
  int find_label(const Bits& label) const {
    auto it = label_index_.find(label);
    return it == label_index_.end() ? -1 : it->second;
  }

  // Join of the canonical join-irreducibles of a set of shards.
  int rho(const Bits& shard_set) const {
    std::vector<int> js;
    for (auto s = shard_set.find_first(); s != Bits::npos; s = shard_set.find_next(s))
      js.push_back(shards_->shard(static_cast<int>(s)).ji);
    return weak().join_of(js);
  }

  std::vector<std::int64_t> rank_generating_polynomial() const {
    std::vector<std::int64_t> out;
    for (int r = 0; r < size(); ++r) {
      const auto k = static_cast<std::size_t>(rank(r));
      if (out.size() <= k) out.resize(k + 1, 0);
      ++out[k];
    }
    return out;
  }

  std::int64_t mobius_direct() const { return poset_.mobius(weak().bottom(), weak().top()); }

  // Sum over subsets K of the basic hyperplanes of (-1)^|K| |R_K|.
  std::int64_t mobius_parabolic() const {
    const auto basic = bits_of(weak().basic_hyperplanes());
    std::int64_t total = 0;
    for (std::uint32_t m = 0; m < (1u << basic.size()); ++m) {
      const HyperSet k = subset(basic, m);
      const auto sz = static_cast<std::int64_t>(weak().parabolic_regions(k).size());
      total += (__builtin_popcount(m) % 2 ? -sz : sz);
    }
    return total;
  }

  std::int64_t maximal_chains_direct() const { return poset_.maximal_chain_count(); }

  // MC(K) = sum over H in K of (|R_K| / |R_{K-H}| - 1) MC(K - H), MC(empty) = 1.
  std::int64_t maximal_chains_recursive() const {
    const auto basic = bits_of(weak().basic_hyperplanes());
    const std::uint32_t full = (1u << basic.size()) - 1;
    std::vector<std::int64_t> count(full + 1, 0), mc(full + 1, 0);
    for (std::uint32_t m = 0; m <= full; ++m) count[m] = static_cast<std::int64_t>(weak().parabolic_regions(subset(basic, m)).size());
    mc[0] = 1;
    for (std::uint32_t m = 1; m <= full; ++m) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < basic.size(); ++i) {
        if (!(m >> i & 1u)) continue;
        const std::uint32_t sub = m & ~(1u << i);
        if (count[m] % count[sub] != 0) throw std::logic_error("parabolic sizes do not divide");
        s += (count[m] / count[sub] - 1) * mc[sub];
      }
      mc[m] = s;
    }
    return mc[full];
  }

  // Elements u with u ⪯ r.
  std::vector<int> lower_interval_elements(int r) const {
    std::vector<int> out;
    for (int u = 0; u < size(); ++u)
      if (preceq(u, r)) out.push_back(u);
    return out;
  }

 private:
  static HyperSet subset(const std::vector<int>& basic, std::uint32_t m) {
    HyperSet k;
    for (std::size_t i = 0; i < basic.size(); ++i)
      if (m >> i & 1u) k.set(basic[i]);
    return k;
  }

  struct BitsLess {
    bool operator()(const Bits& a, const Bits& b) const { return a < b; }
  };

  std::shared_ptr<const ShardStructure> shards_;
  std::vector<Bits> labels_;
  std::map<Bits, int, BitsLess> label_index_;
  Poset poset_;
};

// Explicit isomorphism from [e, w] in (W, ⪯) onto (W_J, ⪯), J = descents of w.
struct LowerIntervalWitness {
  std::vector<int> interval;    // elements u ⪯ w
  std::uint32_t descents = 0;   // J as a bitmask
  std::vector<int> parabolic;   // elements of W_J
  std::vector<int> image;       // image[i] = element of W_J matched to interval[i]
  bool is_isomorphism = false;
};

inline LowerIntervalWitness lower_interval(const CoxeterGroup& g, const ShardOrder& order, int w) {
  LowerIntervalWitness out;
  const ShardStructure& sh = order.shards();
  const WeakOrder& wo = order.weak();
  out.interval = order.lower_interval_elements(w);
  out.descents = g.descent_mask(w);
  out.parabolic = g.standard_parabolic(out.descents);
  const int base = wo.L(w);
  const int base_inv = g.inverse(base);

  // translate each shard of λ(w) through a cover of [L(w), w] into W_J
  std::vector<int> shard_image(sh.size(), -1);
  bool well_defined = true;
  for (int c : sh.covers_in_interval(base, w)) {
    const Cover& cv = wo.cover(c);
    const int lo = g.multiply(base_inv, cv.lower), hi = g.multiply(base_inv, cv.upper);
    const int cc = wo.cover_between(lo, hi);
    if (cc < 0) {
      well_defined = false;
      continue;
    }
    const int s = sh.shard_of_cover(c), t = sh.shard_of_cover(cc);
    if (shard_image[s] >= 0 && shard_image[s] != t) well_defined = false;
    shard_image[s] = t;
  }
  std::vector<int> inverse_image(order.size(), -1);
  for (int u : out.interval) {
    Bits img(sh.size());
    const Bits& lab = order.label(u);
    for (auto s = lab.find_first(); s != Bits::npos; s = lab.find_next(s)) {
      if (shard_image[s] < 0) well_defined = false;
      else img.set(shard_image[s]);
    }
    const int v = order.find_label(img);
    out.image.push_back(v);
    if (v < 0 || !std::binary_search(out.parabolic.begin(), out.parabolic.end(), v)) {
      well_defined = false;
      continue;
    }
    if (inverse_image[v] >= 0) well_defined = false;
    inverse_image[v] = u;
  }
  bool ok = well_defined && out.interval.size() == out.parabolic.size();
  for (std::size_t a = 0; ok && a < out.interval.size(); ++a)
    for (std::size_t b = 0; ok && b < out.interval.size(); ++b)
      ok = order.preceq(out.interval[a], out.interval[b]) == order.preceq(out.image[a], out.image[b]);
  out.is_isomorphism = ok;
  return out;
}

}  // namespace shardlab
