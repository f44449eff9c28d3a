#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shardlab/cone.hpp"
#include "shardlab/flats.hpp"
#include "shardlab/linalg.hpp"
#include "shardlab/scalar.hpp"
#include "shardlab/weak_order.hpp"

namespace shardlab {

class BasePointOnHyperplane : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonSimplicialRegion : public std::invalid_argument {
 public:
  NonSimplicialRegion(const std::string& what, std::vector<int> witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  // Sign vector (+1 / -1 per hyperplane) of the offending region.
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

// A central arrangement with a base point; region sign vectors are taken relative to the base point.
template <class F>
struct Arrangement {
  std::vector<Hyperplane<F>> hyperplanes;
  Vec<F> base_point;
  int rank = 0;
  std::vector<HyperSet> regions;  // separating sets, base region first

  std::size_t dim() const { return base_point.size(); }
  int num_hyperplanes() const { return static_cast<int>(hyperplanes.size()); }

  std::vector<Vec<F>> normals() const {
    std::vector<Vec<F>> out;
    for (const auto& h : hyperplanes) out.push_back(h.normal);
    return out;
  }

  // Normal of hyperplane h pointing to the side of the base point.
  Vec<F> base_normal(int h) const {
    const auto& n = hyperplanes[h].normal;
    return sign(dot(n, base_point)) > 0 ? n : negate(n);
  }

  // Closed cone of the region with separating set s.
  Cone<F> region_cone(const HyperSet& s) const {
    std::vector<Vec<F>> ineq;
    for (int h = 0; h < num_hyperplanes(); ++h) ineq.push_back(s[h] ? negate(base_normal(h)) : base_normal(h));
    return Cone<F>(dim(), {}, std::move(ineq));
  }

  // Separating set of a point off every hyperplane.
  HyperSet sign_set(const Vec<F>& p) const {
    HyperSet s;
    for (int h = 0; h < num_hyperplanes(); ++h) {
      const int sp = sign(dot(hyperplanes[h].normal, p));
      if (sp == 0) throw std::invalid_argument("sign_set: point lies on a hyperplane");
      if (sp != sign(dot(hyperplanes[h].normal, base_point))) s.set(h);
    }
    return s;
  }

  std::shared_ptr<const FlatOracle> flats() const { return std::make_shared<LinearFlatOracle<F>>(normals()); }

  std::shared_ptr<WeakOrder> weak_order() const { return std::make_shared<WeakOrder>(regions, flats()); }

  // Facet hyperplanes of the base region.
  HyperSet basic_hyperplanes() const { return facet_hyperplanes(HyperSet{}); }

  HyperSet facet_hyperplanes(const HyperSet& s) const {
    const Cone<F> c = region_cone(s);
    HyperSet out;
    for (const auto& n : c.facet_normals()) {
      const auto line = canonical_normal(n);
      for (int h = 0; h < num_hyperplanes(); ++h)
        if (hyperplanes[h].normal == line) out.set(h);
    }
    return out;
  }
};

// Validates and enumerates a central simplicial arrangement. Hyperplanes are canonicalized, deduplicated and
// sorted; ids follow the sorted order.
template <class F>
Arrangement<F> ingest_arrangement(const std::vector<Vec<F>>& normals, const Vec<F>& base_point,
                                  bool canonical_order = true) {
  Arrangement<F> a;
  a.base_point = base_point;
  std::vector<Vec<F>> canon;
  for (const auto& n : normals) {
    if (n.size() != base_point.size()) throw std::invalid_argument("normal and base point dimensions differ");
    if (is_zero_vector(n)) throw std::invalid_argument("zero normal vector");
    canon.push_back(canonical_normal(n));
  }
  if (canonical_order) {
    std::sort(canon.begin(), canon.end(), [](const Vec<F>& x, const Vec<F>& y) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        const int s = sign(x[i] - y[i]);
        if (s) return s < 0;
      }
      return false;
    });
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  }
  if (canon.size() > kMaxHyperplanes) throw std::invalid_argument("too many hyperplanes");
  for (std::size_t i = 0; i < canon.size(); ++i) {
    if (is_zero(dot(canon[i], base_point)))
      throw BasePointOnHyperplane("base point lies on hyperplane " + std::to_string(i));
    a.hyperplanes.emplace_back(canon[i], static_cast<int>(i));
  }
  a.rank = static_cast<int>(linear_rank(a.normals(), base_point.size()));

  // breadth-first search across facets
  std::map<std::string, int> seen;
  auto key = [](const HyperSet& s) { return s.to_string(); };
  a.regions.push_back(HyperSet{});
  seen.emplace(key(HyperSet{}), 0);
  for (std::size_t head = 0; head < a.regions.size(); ++head) {
    const HyperSet cur = a.regions[head];
    const HyperSet facets = a.facet_hyperplanes(cur);
    if (static_cast<int>(facets.count()) != a.rank) {
      std::vector<int> witness;
      for (int h = 0; h < a.num_hyperplanes(); ++h) witness.push_back(cur[h] ? -1 : 1);
      throw NonSimplicialRegion("region " + std::to_string(head) + " has " + std::to_string(facets.count()) +
                                    " facets in rank " + std::to_string(a.rank),
                                std::move(witness));
    }
    for_each_bit(facets, [&](int h) {
      HyperSet next = cur;
      next.flip(h);
      if (seen.emplace(key(next), static_cast<int>(a.regions.size())).second) a.regions.push_back(next);
    });
  }
  return a;
}

// Number of sign vectors whose open cone is nonempty, by exhaustive enumeration (up to 20 hyperplanes).
template <class F>
std::int64_t count_regions_by_sign_vectors(const Arrangement<F>& a) {
  const int n = a.num_hyperplanes();
  if (n > 20) throw std::invalid_argument("count_regions_by_sign_vectors: too many hyperplanes");
  std::int64_t count = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    HyperSet s;
    for (int h = 0; h < n; ++h)
      if (m >> h & 1u) s.set(h);
    count += a.region_cone(s).dim() == a.dim();
  }
  return count;
}

// Hyperplanes containing every vector of x, with the same base point.
template <class F>
Arrangement<F> full_subarrangement(const Arrangement<F>& a, const std::vector<Vec<F>>& x) {
  std::vector<Vec<F>> keep;
  for (const auto& h : a.hyperplanes) {
    bool contains = true;
    for (const auto& v : x) contains = contains && h.contains(v);
    if (contains) keep.push_back(h.normal);
  }
  return ingest_arrangement(keep, a.base_point);
}

template <class F>
Arrangement<F> full_subarrangement(const Arrangement<F>& a, const Cone<F>& x) {
  auto gens = x.rays();
  gens.insert(gens.end(), x.lineality().begin(), x.lineality().end());
  return full_subarrangement(a, gens);
}

// Text format: first non-comment line is the base point, then one normal per line; entries "p/q"; '#' comments.
inline Arrangement<Rational> parse_arrangement(std::istream& in) {
  std::vector<Vec<Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Vec<Rational> row;
    for (std::string tok; ls >> tok;) row.push_back(parse_rational(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("arrangement file has no base point");
  const Vec<Rational> base = rows.front();
  rows.erase(rows.begin());
  return ingest_arrangement(rows, base);
}

inline Arrangement<Rational> read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse_arrangement(in);
}

}  // namespace shardlab
