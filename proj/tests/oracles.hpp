#pragma once

// Brute-force reference computations used only by the test suites. Each one avoids the library code path it checks.

#include <algorithm>
#include <functional>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "shardlab/coxeter.hpp"
#include "shardlab/poset.hpp"

namespace oracle {

using shardlab::CoxeterGroup;
using shardlab::Poset;

// Join table of a finite lattice from its up-sets alone.
inline std::vector<int> join_table(const Poset& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out(std::size_t(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[std::size_t(a) * n + b] = *p.join(a, b);
  return out;
}

inline std::vector<int> meet_table(const Poset& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out(std::size_t(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[std::size_t(a) * n + b] = *p.meet(a, b);
  return out;
}

// Every antichain among the given nodes.
inline void antichains(const Poset& p, const std::vector<int>& nodes, std::size_t from, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (std::size_t i = from; i < nodes.size(); ++i) {
    bool ok = true;
    for (int x : cur) ok = ok && !p.comparable(x, nodes[i]);
    if (!ok) continue;
    cur.push_back(nodes[i]);
    antichains(p, nodes, i + 1, cur, out);
    cur.pop_back();
  }
}

// The antichain A with join w such that A << B for every antichain B joining to w, where A << B means each element
// of A lies below some element of B. Returns nullopt if no such antichain exists.
inline std::optional<std::vector<int>> lowest_join_antichain(const Poset& p, const std::vector<int>& joins, int w) {
  const int n = static_cast<int>(p.size());
  const int bottom = *p.bottom();
  std::vector<int> below;
  for (int x = 0; x < n; ++x)
    if (p.leq(x, w) && x != bottom) below.push_back(x);
  std::vector<std::vector<int>> all, joining;
  std::vector<int> cur;
  antichains(p, below, 0, cur, all);
  for (const auto& a : all) {
    int j = bottom;
    for (int x : a) j = joins[std::size_t(j) * n + x];
    if (j == w) joining.push_back(a);
  }
  auto lower = [&](const std::vector<int>& a, const std::vector<int>& b) {
    return std::all_of(a.begin(), a.end(), [&](int x) {
      return std::any_of(b.begin(), b.end(), [&](int y) { return p.leq(x, y); });
    });
  };
  std::optional<std::vector<int>> found;
  for (const auto& a : joining) {
    if (!std::all_of(joining.begin(), joining.end(), [&](const auto& b) { return lower(a, b); })) continue;
    if (found) return std::nullopt;
    found = a;
    std::sort(found->begin(), found->end());
  }
  return found;
}

// Finest congruence with the seeded pairs identified, by repeated meet/join compatibility sweeps.
inline std::vector<int> naive_congruence(const Poset& p, const std::vector<std::pair<int, int>>& seeds) {
  const int n = static_cast<int>(p.size());
  const auto joins = join_table(p), meets = meet_table(p);
  std::vector<int> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  auto merge = [&](int a, int b) {
    const int ca = cls[a], cb = cls[b];
    if (ca == cb) return false;
    for (int& c : cls)
      if (c == cb) c = ca;
    return true;
  };
  for (auto [a, b] : seeds) merge(a, b);
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (cls[x] != cls[y]) continue;
        for (int z = 0; z < n; ++z) {
          changed |= merge(joins[std::size_t(x) * n + z], joins[std::size_t(y) * n + z]);
          changed |= merge(meets[std::size_t(x) * n + z], meets[std::size_t(y) * n + z]);
        }
      }
  }
  return cls;
}

// Partition as a sorted list of sorted blocks, for comparing labelings.
inline std::set<std::set<int>> blocks(const std::vector<int>& labels) {
  std::map<int, std::set<int>> by;
  for (std::size_t i = 0; i < labels.size(); ++i) by[labels[i]].insert(static_cast<int>(i));
  std::set<std::set<int>> out;
  for (auto& [k, b] : by) out.insert(b);
  return out;
}

// Reflections as the conjugacy closure of the simple generators.
inline std::vector<int> reflections(const CoxeterGroup& g) {
  std::set<int> seen;
  std::vector<int> queue;
  for (int s = 0; s < g.rank(); ++s)
    if (seen.insert(g.simple(s)).second) queue.push_back(g.simple(s));
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int s = 0; s < g.rank(); ++s) {
      const int t = g.multiply(g.simple(s), g.multiply(queue[head], g.simple(s)));
      if (seen.insert(t).second) queue.push_back(t);
    }
  return {seen.begin(), seen.end()};
}

// Reflection length of every element by breadth-first search from the identity.
inline std::vector<int> reflection_length(const CoxeterGroup& g) {
  const auto t = reflections(g);
  std::vector<int> dist(g.size(), -1);
  std::vector<int> queue{g.identity()};
  dist[g.identity()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int r : t) {
      const int v = g.multiply(queue[head], r);
      if (dist[v] < 0) {
        dist[v] = dist[queue[head]] + 1;
        queue.push_back(v);
      }
    }
  return dist;
}

// Word length of every element by breadth-first search over simple generators.
inline std::vector<int> word_length(const CoxeterGroup& g) {
  std::vector<int> dist(g.size(), -1);
  std::vector<int> queue{g.identity()};
  dist[g.identity()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int s = 0; s < g.rank(); ++s) {
      const int v = g.multiply(queue[head], g.simple(s));
      if (dist[v] < 0) {
        dist[v] = dist[queue[head]] + 1;
        queue.push_back(v);
      }
    }
  return dist;
}

// The elements generated by the simple generators in mask.
inline std::int64_t parabolic_size(const CoxeterGroup& g, std::uint32_t mask) {
  std::set<int> seen{g.identity()};
  std::vector<int> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int s = 0; s < g.rank(); ++s)
      if (mask >> s & 1u) {
        const int v = g.multiply(queue[head], g.simple(s));
        if (seen.insert(v).second) queue.push_back(v);
      }
  return static_cast<std::int64_t>(seen.size());
}

// Sum over J of (-1)^|J| |W_J|.
inline std::int64_t parabolic_alternating_sum(const CoxeterGroup& g) {
  std::int64_t total = 0;
  for (std::uint32_t m = 0; m < (1u << g.rank()); ++m) {
    const auto sz = parabolic_size(g, m);
    total += __builtin_popcount(m) % 2 ? -sz : sz;
  }
  return total;
}

// MC(W_J) = sum over s in J of (|W_J| / |W_{J - s}| - 1) MC(W_{J - s}).
inline std::int64_t parabolic_chain_recursion(const CoxeterGroup& g) {
  const std::uint32_t full = (1u << g.rank()) - 1;
  std::vector<std::int64_t> size(full + 1), mc(full + 1, 0);
  for (std::uint32_t m = 0; m <= full; ++m) size[m] = parabolic_size(g, m);
  mc[0] = 1;
  for (std::uint32_t m = 1; m <= full; ++m)
    for (int s = 0; s < g.rank(); ++s)
      if (m >> s & 1u) mc[m] += (size[m] / size[m & ~(1u << s)] - 1) * mc[m & ~(1u << s)];
  return mc[full];
}

// Number of elements with k right descents, from word lengths.
inline std::vector<std::int64_t> descent_polynomial(const CoxeterGroup& g) {
  const auto len = word_length(g);
  std::vector<std::int64_t> out(g.rank() + 1, 0);
  for (int w = 0; w < g.size(); ++w) {
    int d = 0;
    for (int s = 0; s < g.rank(); ++s) d += len[g.multiply(w, g.simple(s))] < len[w];
    ++out[d];
  }
  return out;
}

// Elements below c in the absolute order, from breadth-first reflection lengths.
inline std::vector<int> noncrossing_elements(const CoxeterGroup& g, int c) {
  const auto lt = reflection_length(g);
  std::vector<int> out;
  for (int u = 0; u < g.size(); ++u)
    if (lt[u] + lt[g.multiply(g.inverse(u), c)] == lt[c]) out.push_back(u);
  return out;
}

// Elements lying in some proper standard parabolic subgroup, by subgroup enumeration.
inline std::set<int> proper_parabolic_union(const CoxeterGroup& g) {
  std::set<int> out;
  for (std::uint32_t m = 0; m + 1 < (1u << g.rank()); ++m) {
    std::vector<int> queue{g.identity()};
    std::set<int> seen{g.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int s = 0; s < g.rank(); ++s)
        if (m >> s & 1u) {
          const int v = g.multiply(queue[head], g.simple(s));
          if (seen.insert(v).second) queue.push_back(v);
        }
    out.insert(seen.begin(), seen.end());
  }
  return out;
}

// All orderings of the simple generators.
inline std::vector<std::vector<int>> orderings(int rank) {
  std::vector<int> p(rank);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Whether two posets are isomorphic, by backtracking over rank-compatible assignments.
inline bool isomorphic(const Poset& a, const Poset& b) {
  const int n = static_cast<int>(a.size());
  if (n != static_cast<int>(b.size()) || a.num_cover_relations() != b.num_cover_relations()) return false;
  auto profile = [](const Poset& p, int x) {
    int up = 0, down = 0;
    for (int y = 0; y < static_cast<int>(p.size()); ++y) up += p.leq(x, y), down += p.leq(y, x);
    return std::make_pair(up, down);
  };
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> go = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || profile(a, x) != profile(b, y)) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) ok = a.leq(z, x) == b.leq(map[z], y) && a.leq(x, z) == b.leq(y, map[z]);
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (go(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return go(0);
}

}  // namespace oracle
