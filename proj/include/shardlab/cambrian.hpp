#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shardlab/congruence.hpp"
#include "shardlab/coxeter.hpp"
#include "shardlab/poset.hpp"
#include "shardlab/shard_order.hpp"

namespace shardlab {

// For positions i < j of the ordering, the alternating words s_j s_i s_j ... of length 2 .. m-1.
inline std::vector<int> cambrian_generators(const CoxeterGroup& g, const std::vector<int>& order) {
  std::vector<int> out;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const int si = order[i], sj = order[j];
      const int m = g.coxeter_m(si, sj);
      for (int len = 2; len <= m - 1; ++len) {
        std::vector<int> word;
        for (int k = 0; k < len; ++k) word.push_back(k % 2 == 0 ? sj : si);
        out.push_back(g.from_word(word));
      }
    }
  return out;
}

struct CambrianData {
  std::vector<int> order;
  int c = 0;
  std::vector<int> generators;
  Congruence theta;
  std::vector<int> sortables;
};

inline CambrianData cambrian_congruence(const CoxeterGroup& g, std::shared_ptr<const ShardStructure> shards,
                                        const ShardDigraph& digraph, const std::vector<int>& order) {
  const int c = g.coxeter_element(order);
  auto gens = cambrian_generators(g, order);
  Congruence theta = generate_congruence(shards, digraph, gens);
  auto sortables = theta.bottoms();
  return {order, c, std::move(gens), std::move(theta), std::move(sortables)};
}

// The interval [e, c] in the absolute order; node i is elements()[i].
class NCLattice {
 public:
  NCLattice(const CoxeterGroup& g, int c) : c_(c) {
    const int lc = g.absolute_length(c);
    for (int u = 0; u < g.size(); ++u)
      if (g.absolute_length(u) + g.absolute_length(g.multiply(g.inverse(u), c)) == lc) elements_.push_back(u);
    std::vector<int> inv(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) inv[i] = g.inverse(elements_[i]);
    poset_ = Poset::from_relation(elements_.size(), [&](int a, int b) {
      const int u = elements_[a], v = elements_[b];
      return g.absolute_length(u) + g.absolute_length(g.multiply(inv[a], v)) == g.absolute_length(v);
    });
    for (int u : elements_) {
      flats_.push_back(g.fixed_flat(u));
      ranks_.push_back(g.absolute_length(u));
    }
  }

  int coxeter_element() const { return c_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  const Poset& poset() const { return poset_; }
  const HyperSet& flat(int i) const { return flats_[i]; }
  int rank(int i) const { return ranks_[i]; }

  int index_of(int element) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), element);
    return (it != elements_.end() && *it == element) ? static_cast<int>(it - elements_.begin()) : -1;
  }

  // Indices whose fixed flat equals the given flat.
  std::vector<int> with_flat(const HyperSet& f) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (flats_[i] == f) out.push_back(i);
    return out;
  }

  bool fix_is_injective() const {
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (flats_[i] == flats_[j]) return false;
    return true;
  }

  std::vector<int> rank_sizes() const {
    std::vector<int> out;
    for (int r : ranks_) {
      if (static_cast<int>(out.size()) <= r) out.resize(r + 1, 0);
      ++out[r];
    }
    return out;
  }

  std::int64_t mobius_direct() const { return poset_.mobius(index_of(0), index_of(c_)); }

  // (-1)^rank times the number of elements outside every proper standard parabolic subgroup.
  std::int64_t mobius_by_support(const CoxeterGroup& g) const {
    const std::uint32_t full = (1u << g.rank()) - 1;
    std::int64_t count = 0;
    for (int u : elements_) {
      std::uint32_t sup = 0;
      for (int s : g.word(u)) sup |= 1u << s;
      count += sup == full;
    }
    return g.rank() % 2 ? -count : count;
  }

  // Whether u -> u^{-1} c is an order-reversing bijection.
  bool kreweras_is_anti_automorphism(const CoxeterGroup& g) const {
    std::vector<int> k(size());
    for (int i = 0; i < size(); ++i) {
      k[i] = index_of(g.multiply(g.inverse(elements_[i]), c_));
      if (k[i] < 0) return false;
    }
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b)
        if (poset_.leq(a, b) != poset_.leq(k[b], k[a])) return false;
    return true;
  }

 private:
  int c_;
  std::vector<int> elements_;
  Poset poset_;
  std::vector<HyperSet> flats_;
  std::vector<int> ranks_;
};

class NoPreimage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The element x of [e, c] whose fixed space is the intersection of the cover reflection hyperplanes of w.
inline int nc_map(const CoxeterGroup& g, const NCLattice& nc, int w) {
  HyperSet cov;
  for (int r : g.cover_reflection_roots(w)) cov.set(r);
  auto hits = nc.with_flat(g.flats()->closure(cov));
  if (hits.size() != 1) throw NoPreimage("no unique noncrossing element for " + g.word_string(w));
  return nc.elements()[hits[0]];
}

struct IsomorphismReport {
  bool bijection = false;
  bool order_isomorphism = false;
  bool rank_preserving = false;
  bool sublattice = false;
  bool meet_sublattice = false;
  bool inverse_monotone_into_cambrian = false;
  bool nc_is_lattice = false;
  std::vector<std::string> failures;

  bool all() const {
    return bijection && order_isomorphism && rank_preserving && sublattice && meet_sublattice &&
           inverse_monotone_into_cambrian && nc_is_lattice;
  }
};

inline IsomorphismReport verify_isomorphism(const CoxeterGroup& g, const ShardOrder& order, const CambrianData& cd,
                                            const NCLattice& nc) {
  IsomorphismReport rep;
  const auto& sort = cd.sortables;
  std::vector<int> image;
  try {
    for (int w : sort) image.push_back(nc.index_of(nc_map(g, nc, w)));
  } catch (const NoPreimage& e) {
    rep.failures.push_back(e.what());
    return rep;
  }
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  rep.bijection = static_cast<int>(sort.size()) == nc.size() &&
                  std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!rep.bijection) rep.failures.push_back("nc map is not a bijection");

  rep.order_isomorphism = rep.bijection;
  rep.inverse_monotone_into_cambrian = rep.bijection;
  for (std::size_t a = 0; a < sort.size() && rep.bijection; ++a)
    for (std::size_t b = 0; b < sort.size(); ++b) {
      const bool lt = nc.poset().leq(image[a], image[b]);
      if (order.preceq(sort[a], sort[b]) != lt) rep.order_isomorphism = false;
      if (lt && !order.weak().leq(sort[a], sort[b])) rep.inverse_monotone_into_cambrian = false;
    }
  if (!rep.order_isomorphism) rep.failures.push_back("nc map is not an order isomorphism");
  if (!rep.inverse_monotone_into_cambrian) rep.failures.push_back("inverse nc map is not monotone into the Cambrian lattice");

  rep.rank_preserving = true;
  for (std::size_t a = 0; a < sort.size() && rep.bijection; ++a)
    if (nc.rank(image[a]) != order.rank(sort[a])) rep.rank_preserving = false;
  if (!rep.rank_preserving) rep.failures.push_back("nc map does not preserve rank");

  rep.sublattice = is_shard_order_sublattice(cd.theta, order);
  if (!rep.sublattice) rep.failures.push_back("sortables are not a sublattice of the shard order");

  rep.nc_is_lattice = nc.poset().is_lattice();
  if (!rep.nc_is_lattice) rep.failures.push_back("noncrossing partitions do not form a lattice");

  rep.meet_sublattice = rep.nc_is_lattice;
  for (int a = 0; a < nc.size() && rep.meet_sublattice; ++a)
    for (int b = 0; b < nc.size(); ++b) {
      const int m = *nc.poset().meet(a, b);
      if (nc.flat(m) != (nc.flat(a) & nc.flat(b))) rep.meet_sublattice = false;
    }
  if (!rep.meet_sublattice) rep.failures.push_back("fixed spaces are not a meet-sublattice of the intersection lattice");
  return rep;
}

// Permutations avoiding the value patterns 312, 412, 342, 341 as subsequences (w(a), w(b), w(c)) with a < b < c.
inline bool avoids_s4_bipartite_patterns(const std::vector<int>& p) {
  static const int patterns[4][3] = {{3, 1, 2}, {4, 1, 2}, {3, 4, 2}, {3, 4, 1}};
  const int n = static_cast<int>(p.size());
  for (const auto& pat : patterns)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          if (p[a] == pat[0] && p[b] == pat[1] && p[c] == pat[2]) return false;
  return true;
}

// A generator is initial (final) in c when some reduced word of c starts (ends) with it.
inline bool is_initial(const CoxeterGroup& g, int c, int s) { return g.length(g.left_multiply(s, c)) < g.length(c); }
inline bool is_final(const CoxeterGroup& g, int c, int s) { return g.length(g.right_multiply(c, s)) < g.length(c); }

inline bool is_bipartite(const CoxeterGroup& g, int c) {
  for (int s = 0; s < g.rank(); ++s)
    if (!is_initial(g, c, s) && !is_final(g, c, s)) return false;
  return true;
}

}  // namespace shardlab
