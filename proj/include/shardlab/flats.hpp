#pragma once

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "shardlab/linalg.hpp"

namespace shardlab {

inline constexpr std::size_t kMaxHyperplanes = 128;

// A set of hyperplane indices of one arrangement.
using HyperSet = std::bitset<kMaxHyperplanes>;

template <class Fn>
void for_each_bit(const HyperSet& s, Fn&& fn) {
  for (std::size_t i = s._Find_first(); i < kMaxHyperplanes; i = s._Find_next(i)) fn(static_cast<int>(i));
}

inline std::vector<int> bits_of(const HyperSet& s) {
  std::vector<int> out;
  for_each_bit(s, [&](int i) { out.push_back(i); });
  return out;
}

inline HyperSet hyperset_of(const std::vector<int>& idx) {
  HyperSet s;
  for (int i : idx) s.set(i);
  return s;
}

inline bool is_subset(const HyperSet& a, const HyperSet& b) { return (a & ~b).none(); }

// Rank function of the intersection lattice of an arrangement, as a matroid on hyperplane indices.
class FlatOracle {
 public:
  virtual ~FlatOracle() = default;
  virtual int num_hyperplanes() const = 0;
  virtual int rank(const HyperSet& s) const = 0;

  // All hyperplanes containing the intersection of s.
  virtual HyperSet closure(const HyperSet& s) const {
    HyperSet out = s;
    const int r = rank(s);
    for (int h = 0; h < num_hyperplanes(); ++h) {
      if (s[h]) continue;
      HyperSet t = s;
      t.set(h);
      if (rank(t) == r) out.set(h);
    }
    return out;
  }

  HyperSet all() const {
    HyperSet s;
    for (int h = 0; h < num_hyperplanes(); ++h) s.set(h);
    return s;
  }
};

// Rank oracle from explicit normal vectors.
template <class F>
class LinearFlatOracle final : public FlatOracle {
 public:
  explicit LinearFlatOracle(std::vector<Vec<F>> normals) : normals_(std::move(normals)) {
    if (normals_.size() > kMaxHyperplanes) throw std::invalid_argument("too many hyperplanes");
    dim_ = normals_.empty() ? 0 : normals_.front().size();
  }

  int num_hyperplanes() const override { return static_cast<int>(normals_.size()); }

  int rank(const HyperSet& s) const override {
    RowSpace<F> rs(dim_);
    for_each_bit(s, [&](int h) { rs.add(normals_[h]); });
    return static_cast<int>(rs.rank());
  }

  HyperSet closure(const HyperSet& s) const override {
    RowSpace<F> rs(dim_);
    for_each_bit(s, [&](int h) { rs.add(normals_[h]); });
    HyperSet out;
    for (int h = 0; h < num_hyperplanes(); ++h)
      if (s[h] || rs.contains(normals_[h])) out.set(h);
    return out;
  }

  const std::vector<Vec<F>>& normals() const { return normals_; }

 private:
  std::vector<Vec<F>> normals_;
  std::size_t dim_ = 0;
};

// Any n >= 2 pairwise distinct lines through the origin of a plane.
class RankTwoFlatOracle final : public FlatOracle {
 public:
  explicit RankTwoFlatOracle(int n) : n_(n) {}
  int num_hyperplanes() const override { return n_; }
  int rank(const HyperSet& s) const override { return static_cast<int>(std::min<std::size_t>(s.count(), 2)); }

 private:
  int n_;
};

// The flats of a subset of hyperplanes, reindexed 0 .. k-1 in increasing global order.
class RestrictedFlatOracle final : public FlatOracle {
 public:
  RestrictedFlatOracle(std::shared_ptr<const FlatOracle> parent, std::vector<int> hyperplanes)
      : parent_(std::move(parent)), hyps_(std::move(hyperplanes)) {}

  int num_hyperplanes() const override { return static_cast<int>(hyps_.size()); }
  int rank(const HyperSet& s) const override { return parent_->rank(lift(s)); }
  HyperSet closure(const HyperSet& s) const override { return restrict(parent_->closure(lift(s))); }

  const std::vector<int>& hyperplanes() const { return hyps_; }

  HyperSet lift(const HyperSet& local) const {
    HyperSet out;
    for_each_bit(local, [&](int h) { out.set(hyps_[h]); });
    return out;
  }
  HyperSet restrict(const HyperSet& global) const {
    HyperSet out;
    for (std::size_t i = 0; i < hyps_.size(); ++i)
      if (global[hyps_[i]]) out.set(i);
    return out;
  }

 private:
  std::shared_ptr<const FlatOracle> parent_;
  std::vector<int> hyps_;
};

}  // namespace shardlab
