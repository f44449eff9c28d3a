#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <vector>

#include "shardlab/scalar.hpp"

namespace shardlab {

template <class F>
using Vec = std::vector<F>;

template <class F>
F dot(const Vec<F>& x, const Vec<F>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  F s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

template <class F>
Vec<F> add(Vec<F> x, const Vec<F>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

template <class F>
Vec<F> subtract(Vec<F> x, const Vec<F>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}

template <class F>
Vec<F> scale(Vec<F> x, const std::type_identity_t<F>& c) {
  for (auto& v : x) v *= c;
  return x;
}

template <class F>
Vec<F> negate(Vec<F> x) {
  for (auto& v : x) v = -v;
  return x;
}

template <class F>
bool is_zero_vector(const Vec<F>& x) {
  for (const auto& v : x)
    if (!is_zero(v)) return false;
  return true;
}

template <class F>
Vec<F> zero_vector(std::size_t n) {
  return Vec<F>(n, F(0));
}

// Scales so that the first nonzero coordinate is +1 (direction kept up to sign).
template <class F>
Vec<F> normalize_line(Vec<F> x) {
  for (const auto& v : x) {
    if (!is_zero(v)) {
      F inv = F(1) / v;
      return scale(std::move(x), inv);
    }
  }
  throw std::invalid_argument("normalize_line: zero vector");
}

// Scales so that the first nonzero coordinate is +1 or -1 (direction kept).
template <class F>
Vec<F> normalize_ray(Vec<F> x) {
  for (const auto& v : x) {
    if (!is_zero(v)) {
      F inv = F(1) / abs_value(v);
      return scale(std::move(x), inv);
    }
  }
  throw std::invalid_argument("normalize_ray: zero vector");
}

template <class F>
std::string vector_to_string(const Vec<F>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + to_string(x[i]);
  return s + ")";
}

// Incrementally maintained reduced row echelon basis of a row space.
template <class F>
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec<F>>& basis() const { return rows_; }

  // Residue of v after elimination against the basis; zero iff v is in the span.
  Vec<F> reduce(Vec<F> v) const {
    if (v.size() != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F c = v[pivots_[r]];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(rows_[r][j])) v[j] -= c * rows_[r][j];
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero_vector(reduce(v)); }

  // Returns true iff the rank grew.
  bool add(const Vec<F>& v) {
    Vec<F> w = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && is_zero(w[p])) ++p;
    if (p == dim_) return false;
    w = scale(std::move(w), F(1) / w[p]);
    for (auto& row : rows_) {
      const F c = row[p];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(w[j])) row[j] -= c * w[j];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

  // Basis of {x : <r,x> = 0 for every basis row r}.
  std::vector<Vec<F>> orthogonal_complement() const {
    std::vector<bool> is_pivot(dim_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<Vec<F>> out;
    for (std::size_t f = 0; f < dim_; ++f) {
      if (is_pivot[f]) continue;
      Vec<F> x = zero_vector<F>(dim_);
      x[f] = F(1);
      for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = -rows_[r][f];
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
std::size_t linear_rank(const std::vector<Vec<F>>& vectors, std::size_t dim) {
  RowSpace<F> rs(dim);
  for (const auto& v : vectors) rs.add(v);
  return rs.rank();
}

template <class F>
std::size_t linear_rank(const std::vector<Vec<F>>& vectors) {
  if (vectors.empty()) return 0;
  return linear_rank(vectors, vectors.front().size());
}

// Basis of the common null space {x : <v,x> = 0 for all v}.
template <class F>
std::vector<Vec<F>> null_space(const std::vector<Vec<F>>& vectors, std::size_t dim) {
  RowSpace<F> rs(dim);
  for (const auto& v : vectors) rs.add(v);
  return rs.orthogonal_complement();
}

// RREF basis of span(vectors); a canonical key for a subspace.
template <class F>
std::vector<Vec<F>> canonical_span(const std::vector<Vec<F>>& vectors, std::size_t dim) {
  RowSpace<F> rs(dim);
  for (const auto& v : vectors) rs.add(v);
  auto rows = rs.basis();
  auto lead = [&](const Vec<F>& r) {
    std::size_t j = 0;
    while (j < dim && is_zero(r[j])) ++j;
    return j;
  };
  std::sort(rows.begin(), rows.end(), [&](const Vec<F>& a, const Vec<F>& b) { return lead(a) < lead(b); });
  return rows;
}

template <class F>
Vec<F> mat_vec(const std::vector<Vec<F>>& m, const Vec<F>& x) {
  Vec<F> y;
  y.reserve(m.size());
  for (const auto& row : m) y.push_back(dot(row, x));
  return y;
}

}  // namespace shardlab
