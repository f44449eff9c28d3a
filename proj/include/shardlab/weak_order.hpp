#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "shardlab/flats.hpp"
#include "shardlab/poset.hpp"

namespace shardlab {

struct Cover {
  int lower;
  int upper;
  int hyperplane;
};

struct FacialInterval {
  int bottom;
  int top;
  HyperSet face_hyperplanes;  // lower hyperplanes of top cutting out the face
  HyperSet subarrangement;    // all hyperplanes containing the face
  std::vector<int> regions;   // elements of [bottom, top]
};

class NonUniqueMinimal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Poset of regions of a simplicial arrangement, keyed by separating sets.
// Region 0 need not be the base region; bottom() is the region with empty separating set.
class WeakOrder {
 public:
  WeakOrder(std::vector<HyperSet> separating_sets, std::shared_ptr<const FlatOracle> flats)
      : sep_(std::move(separating_sets)), flats_(std::move(flats)) {
    n_hyp_ = flats_->num_hyperplanes();
    const HyperSet all = flats_->all();
    for (std::size_t r = 0; r < sep_.size(); ++r) {
      if (!is_subset(sep_[r], all)) throw std::invalid_argument("WeakOrder: separating set out of range");
      if (!index_.emplace(sep_[r], static_cast<int>(r)).second)
        throw std::invalid_argument("WeakOrder: duplicate separating set");
    }
    auto b = index_.find(HyperSet{});
    auto t = index_.find(all);
    if (b == index_.end() || t == index_.end()) throw std::invalid_argument("WeakOrder: missing base or antipodal region");
    bottom_ = b->second;
    top_ = t->second;
    lower_.assign(size(), {});
    upper_.assign(size(), {});
    for (int r = 0; r < size(); ++r) {
      for_each_bit(sep_[r], [&](int h) {
        HyperSet s = sep_[r];
        s.reset(h);
        auto it = index_.find(s);
        if (it == index_.end()) return;
        const int c = static_cast<int>(covers_.size());
        covers_.push_back({it->second, r, h});
        lower_[r].push_back(c);
        upper_[it->second].push_back(c);
      });
    }
    for (int r = 0; r < size(); ++r) {
      HyperSet anti = all & ~sep_[r];
      auto it = index_.find(anti);
      if (it == index_.end()) throw std::invalid_argument("WeakOrder: region set is not closed under negation");
      antipode_.push_back(it->second);
    }
  }

  int size() const { return static_cast<int>(sep_.size()); }
  int num_hyperplanes() const { return n_hyp_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const HyperSet& sep(int r) const { return sep_[r]; }
  int length(int r) const { return static_cast<int>(sep_[r].count()); }
  int antipode(int r) const { return antipode_[r]; }
  const FlatOracle& flats() const { return *flats_; }
  std::shared_ptr<const FlatOracle> flats_ptr() const { return flats_; }

  int find(const HyperSet& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
  }

  bool leq(int x, int y) const { return is_subset(sep_[x], sep_[y]); }

  const std::vector<Cover>& covers() const { return covers_; }
  const Cover& cover(int c) const { return covers_[c]; }
  const std::vector<int>& lower_covers(int r) const { return lower_[r]; }
  const std::vector<int>& upper_covers(int r) const { return upper_[r]; }

  // Cover index of q < r, or -1.
  int cover_between(int q, int r) const {
    for (int c : lower_[r])
      if (covers_[c].lower == q) return c;
    return -1;
  }

  HyperSet lower_hyperplanes(int r) const {
    HyperSet s;
    for (int c : lower_[r]) s.set(covers_[c].hyperplane);
    return s;
  }

  // Facet hyperplanes of the base region.
  HyperSet basic_hyperplanes() const { return upper_hyperplanes(bottom_); }

  HyperSet upper_hyperplanes(int r) const {
    HyperSet s;
    for (int c : upper_[r]) s.set(covers_[c].hyperplane);
    return s;
  }

  // Lower cover of r across hyperplane h, or -1.
  int lower_neighbor(int r, int h) const {
    for (int c : lower_[r])
      if (covers_[c].hyperplane == h) return covers_[c].lower;
    return -1;
  }

  // Greatest region whose separating set is inside target (exists for a lattice).
  int greatest_below_set(const HyperSet& target) const {
    int cur = bottom_;
    for (bool moved = true; moved;) {
      moved = false;
      for (int c : upper_[cur]) {
        if (target[covers_[c].hyperplane]) {
          cur = covers_[c].upper;
          moved = true;
          break;
        }
      }
    }
    return cur;
  }

  int meet(int x, int y) const { return greatest_below_set(sep_[x] & sep_[y]); }
  int join(int x, int y) const { return antipode_[meet(antipode_[x], antipode_[y])]; }

  int meet_of(const std::vector<int>& xs) const {
    if (xs.empty()) return top_;
    int m = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) m = meet(m, xs[i]);
    return m;
  }
  int join_of(const std::vector<int>& xs) const {
    if (xs.empty()) return bottom_;
    int m = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) m = join(m, xs[i]);
    return m;
  }

  bool is_join_irreducible(int r) const { return lower_[r].size() == 1; }
  bool is_meet_irreducible(int r) const { return upper_[r].size() == 1; }

  std::vector<int> join_irreducibles() const {
    std::vector<int> out;
    for (int r = 0; r < size(); ++r)
      if (is_join_irreducible(r)) out.push_back(r);
    return out;
  }

  // The unique lower cover of a join-irreducible.
  int j_star(int j) const {
    if (!is_join_irreducible(j)) throw std::invalid_argument("j_star: not join-irreducible");
    return covers_[lower_[j][0]].lower;
  }

  // Minimal P <= r with h in S(P), by descent through lower covers keeping h.
  int minimal_region_with(int r, int h) const {
    if (!sep_[r][h]) throw std::invalid_argument("minimal_region_with: hyperplane does not separate");
    int cur = r;
    for (bool moved = true; moved;) {
      moved = false;
      for (int c : lower_[cur]) {
        if (covers_[c].hyperplane != h) {
          cur = covers_[c].lower;
          moved = true;
          break;
        }
      }
    }
    return cur;
  }

  // Same as minimal_region_with by exhaustive scan; throws NonUniqueMinimal.
  int minimal_region_with_scan(int r, int h) const {
    std::vector<int> cands;
    for (int p = 0; p < size(); ++p)
      if (sep_[p][h] && leq(p, r)) cands.push_back(p);
    std::vector<int> minimal;
    for (int p : cands) {
      bool is_min = true;
      for (int q : cands)
        if (q != p && leq(q, p)) is_min = false;
      if (is_min) minimal.push_back(p);
    }
    if (minimal.size() != 1) throw NonUniqueMinimal("no unique minimal region with hyperplane " + std::to_string(h));
    return minimal[0];
  }

  // Canonical joinands of r, one per lower cover, ordered like lower_covers(r).
  std::vector<int> canonical_join_rep(int r) const {
    std::vector<int> out;
    for (int c : lower_[r]) out.push_back(minimal_region_with(r, covers_[c].hyperplane));
    return out;
  }

  // Meet of the lower covers; L(bottom) = bottom.
  int L(int r) const {
    if (lower_[r].empty()) return r;
    std::vector<int> lows;
    for (int c : lower_[r]) lows.push_back(covers_[c].lower);
    return meet_of(lows);
  }

  std::vector<int> interval(int a, int b) const {
    std::vector<int> out;
    for (int p = 0; p < size(); ++p)
      if (leq(a, p) && leq(p, b)) out.push_back(p);
    return out;
  }

  // Regions containing the face of r cut out by the facets in k (k within the lower hyperplanes).
  FacialInterval facial_interval(int r, const HyperSet& k) const {
    if (!is_subset(k, lower_hyperplanes(r))) throw std::invalid_argument("facial_interval: not lower hyperplanes");
    std::vector<int> lows;
    for (int c : lower_[r])
      if (k[covers_[c].hyperplane]) lows.push_back(covers_[c].lower);
    FacialInterval f;
    f.top = r;
    f.bottom = lows.empty() ? r : meet_of(lows);
    f.face_hyperplanes = k;
    f.subarrangement = flats_->closure(k);
    f.regions = interval(f.bottom, f.top);
    return f;
  }

  // Regions whose separating set lies inside the closure of k.
  std::vector<int> parabolic_regions(const HyperSet& k) const {
    const HyperSet cl = flats_->closure(k);
    std::vector<int> out;
    for (int p = 0; p < size(); ++p)
      if (is_subset(sep_[p], cl)) out.push_back(p);
    return out;
  }

  Poset poset() const {
    return Poset::from_relation(size(), [&](int a, int b) { return leq(a, b); });
  }

 private:
  struct HyperSetHash {
    std::size_t operator()(const HyperSet& s) const { return std::hash<HyperSet>{}(s); }
  };

  std::vector<HyperSet> sep_;
  std::shared_ptr<const FlatOracle> flats_;
  int n_hyp_ = 0;
  std::unordered_map<HyperSet, int, HyperSetHash> index_;
  int bottom_ = -1;
  int top_ = -1;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::vector<int> antipode_;
};

// Poset of regions of the full subarrangement of the hyperplanes containing a face,
// with base region the bottom of the face's interval. Local region i is regions[i].
struct SubOrder {
  std::shared_ptr<const WeakOrder> order;
  std::vector<int> regions;
  std::shared_ptr<const RestrictedFlatOracle> flats;
};

inline SubOrder facial_suborder(const WeakOrder& w, int bottom, int top) {
  SubOrder out;
  const HyperSet base = w.sep(bottom);
  out.flats = std::make_shared<RestrictedFlatOracle>(w.flats_ptr(), bits_of(w.sep(top) & ~base));
  std::vector<HyperSet> seps;
  for (int p : w.interval(bottom, top)) {
    out.regions.push_back(p);
    seps.push_back(out.flats->restrict(w.sep(p) & ~base));
  }
  out.order = std::make_shared<WeakOrder>(std::move(seps), out.flats);
  return out;
}

}  // namespace shardlab
