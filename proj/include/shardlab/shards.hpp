#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shardlab/poset.hpp"
#include "shardlab/weak_order.hpp"

namespace shardlab {

struct Shard {
  int ji;          // the canonical join-irreducible region
  int hyperplane;  // the hyperplane containing the shard
  std::vector<int> covers;
};

// Arrows are pairs of shard ids; closure[a] holds every shard reachable from a (a included).
struct ShardDigraph {
  int num_shards = 0;
  std::vector<std::pair<int, int>> arrows;
  bool acyclic = true;
  std::vector<Bits> closure;

  std::vector<int> successors(int a) const {
    std::vector<int> out;
    for (auto [x, y] : arrows)
      if (x == a) out.push_back(y);
    return out;
  }

  bool reaches(int a, int b) const { return closure[a][b]; }

  // Forward-reachable closure of a set of shards.
  Bits forward_closure(const Bits& start) const {
    Bits out(num_shards);
    for (auto a = start.find_first(); a != Bits::npos; a = start.find_next(a)) out |= closure[a];
    return out;
  }
};

// Shards of a simplicial arrangement, computed from the poset of regions.
class ShardStructure {
 public:
  explicit ShardStructure(std::shared_ptr<const WeakOrder> weak) : weak_(std::move(weak)) {
    const WeakOrder& w = *weak_;
    build_rank_two_flats();
    shard_of_ji_.assign(w.size(), -1);
    for (int j : w.join_irreducibles()) {
      shard_of_ji_[j] = static_cast<int>(shards_.size());
      shards_.push_back({j, w.cover(w.lower_covers(j)[0]).hyperplane, {}});
    }
    shard_of_cover_.assign(w.covers().size(), -1);
    for (std::size_t c = 0; c < w.covers().size(); ++c) {
      const Cover& cv = w.cover(static_cast<int>(c));
      const int j = w.minimal_region_with(cv.upper, cv.hyperplane);
      const int s = shard_of_ji_[j];
      if (s < 0) throw std::logic_error("canonical joinand is not join-irreducible");
      shard_of_cover_[c] = s;
      shards_[s].covers.push_back(static_cast<int>(c));
    }
  }

  const WeakOrder& weak() const { return *weak_; }
  std::shared_ptr<const WeakOrder> weak_ptr() const { return weak_; }

  int size() const { return static_cast<int>(shards_.size()); }
  const Shard& shard(int s) const { return shards_[s]; }
  const std::vector<Shard>& shards() const { return shards_; }
  int shard_of_cover(int c) const { return shard_of_cover_[c]; }
  int shard_of_ji(int j) const { return shard_of_ji_[j]; }

  // Rank-two flat spanned by two distinct hyperplanes.
  const HyperSet& flat_of(int h1, int h2) const { return flats2_[flat_index_[h1][h2]]; }
  const HyperSet& basic_in_flat(int h1, int h2) const { return basic2_[flat_index_[h1][h2]]; }
  const std::vector<HyperSet>& rank_two_flats() const { return flats2_; }
  const HyperSet& basic_of_flat(int f) const { return basic2_[f]; }

  bool cuts(int h, int h2) const {
    if (h == h2) return false;
    const HyperSet& b = basic_in_flat(h, h2);
    return b[h] && !b[h2];
  }

  // Hyperplanes that cut h.
  HyperSet cutting_hyperplanes(int h) const {
    HyperSet s;
    for (int g = 0; g < weak_->num_hyperplanes(); ++g)
      if (cuts(g, h)) s.set(g);
    return s;
  }

  int shard_count_on(int h) const {
    int n = 0;
    for (const auto& s : shards_) n += s.hyperplane == h;
    return n;
  }

  std::vector<int> upper_regions(int s) const {
    std::set<int> out;
    for (int c : shards_[s].covers) out.insert(weak_->cover(c).upper);
    return {out.begin(), out.end()};
  }
  std::vector<int> lower_regions(int s) const {
    std::set<int> out;
    for (int c : shards_[s].covers) out.insert(weak_->cover(c).lower);
    return {out.begin(), out.end()};
  }

  // Minimum length of a region separated from the base region by h.
  int depth(int h) const {
    int best = -1;
    for (int r = 0; r < weak_->size(); ++r)
      if (weak_->sep(r)[h] && (best < 0 || weak_->length(r) < best)) best = weak_->length(r);
    return best;
  }

  // Shards of the lower covers of r (one per lower hyperplane).
  std::vector<int> lower_shards(int r) const {
    std::vector<int> out;
    for (int c : weak_->lower_covers(r)) out.push_back(shard_of_cover_[c]);
    return out;
  }

  // Covers inside the interval [bottom, top].
  std::vector<int> covers_in_interval(int bottom, int top) const {
    std::vector<int> out;
    for (int p : weak_->interval(bottom, top))
      for (int c : weak_->lower_covers(p))
        if (weak_->leq(bottom, weak_->cover(c).lower)) out.push_back(c);
    return out;
  }

  // Rank-two facial intervals, as (top, pair of lower hyperplanes) with their bottoms.
  std::vector<FacialInterval> rank_two_faces() const {
    std::vector<FacialInterval> out;
    for (int r = 0; r < weak_->size(); ++r) {
      auto lows = bits_of(weak_->lower_hyperplanes(r));
      for (std::size_t a = 0; a < lows.size(); ++a)
        for (std::size_t b = a + 1; b < lows.size(); ++b) {
          HyperSet k;
          k.set(lows[a]);
          k.set(lows[b]);
          out.push_back(weak_->facial_interval(r, k));
        }
    }
    return out;
  }

  ShardDigraph digraph() const {
    ShardDigraph g;
    g.num_shards = size();
    std::set<std::pair<int, int>> arrows;
    for (const auto& face : rank_two_faces()) {
      auto cs = covers_in_interval(face.bottom, face.top);
      for (int c1 : cs)
        for (int c2 : cs) {
          const int h1 = weak_->cover(c1).hyperplane, h2 = weak_->cover(c2).hyperplane;
          if (cuts(h1, h2)) arrows.insert({shard_of_cover_[c1], shard_of_cover_[c2]});
        }
    }
    g.arrows.assign(arrows.begin(), arrows.end());
    g.closure.assign(size(), Bits(size()));
    std::vector<std::vector<int>> succ(size());
    for (auto [a, b] : g.arrows) succ[a].push_back(b);
    for (int s = 0; s < size(); ++s) {
      std::vector<int> stack{s};
      g.closure[s].set(s);
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : succ[x]) {
          if (y == s) g.acyclic = false;
          if (!g.closure[s][y]) {
            g.closure[s].set(y);
            stack.push_back(y);
          }
        }
      }
    }
    return g;
  }

 private:
  void build_rank_two_flats() {
    const WeakOrder& w = *weak_;
    const int n = w.num_hyperplanes();
    flat_index_.assign(n, std::vector<int>(n, -1));
    std::map<std::string, int> seen;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (flat_index_[a][b] >= 0) continue;
        HyperSet ab;
        ab.set(a);
        ab.set(b);
        HyperSet f = w.flats().closure(ab);
        const int id = static_cast<int>(flats2_.size());
        flats2_.push_back(f);
        for (int x : bits_of(f))
          for (int y : bits_of(f))
            if (x != y) flat_index_[x][y] = id;
      }
    // basic hyperplanes: those G with some region R where S(R) meets the flat exactly in G
    basic2_.assign(flats2_.size(), HyperSet{});
    for (std::size_t f = 0; f < flats2_.size(); ++f)
      for (int r = 0; r < w.size(); ++r) {
        HyperSet m = w.sep(r) & flats2_[f];
        if (m.count() == 1) basic2_[f] |= m;
      }
  }

  std::shared_ptr<const WeakOrder> weak_;
  std::vector<Shard> shards_;
  std::vector<int> shard_of_ji_;
  std::vector<int> shard_of_cover_;
  std::vector<HyperSet> flats2_;
  std::vector<HyperSet> basic2_;
  std::vector<std::vector<int>> flat_index_;
};

}  // namespace shardlab
