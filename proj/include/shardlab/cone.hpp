#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shardlab/linalg.hpp"

namespace shardlab {

// Canonical normal of a linear hyperplane: first nonzero coordinate 1.
template <class F>
Vec<F> canonical_normal(Vec<F> v) {
  return normalize_line(std::move(v));
}

// Rational normals: coprime integers with a positive first nonzero coordinate.
inline Vec<Rational> canonical_normal(Vec<Rational> v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  for (auto& x : v) {
    x *= l;
    g = gcd(g, mpz_class(x.get_num()));
  }
  if (g == 0) throw std::invalid_argument("canonical_normal: zero vector");
  for (auto& x : v) x /= g;
  for (const auto& x : v)
    if (sign(x) != 0) {
      if (sign(x) < 0)
        for (auto& y : v) y = -y;
      break;
    }
  return v;
}

// A linear hyperplane {x : <normal,x> = 0} with canonical normal.
template <class F>
struct Hyperplane {
  Vec<F> normal;
  int index = -1;

  Hyperplane() = default;
  Hyperplane(Vec<F> n, int idx) : normal(canonical_normal(std::move(n))), index(idx) {}

  std::size_t dim() const { return normal.size(); }
  bool contains(const Vec<F>& p) const { return is_zero(dot(normal, p)); }
};

enum class Side { below, on, above };

inline const char* side_name(Side s) {
  switch (s) {
    case Side::below: return "below";
    case Side::on: return "on";
    case Side::above: return "above";
  }
  return "?";
}

// base must be strictly off the hyperplane.
template <class F>
Side side_of(const Vec<F>& p, const Vec<F>& normal, const Vec<F>& base) {
  if (p.size() != normal.size() || base.size() != normal.size())
    throw std::invalid_argument("side_of: dimension mismatch");
  int sb = sign(dot(normal, base));
  if (sb == 0) throw std::invalid_argument("side_of: base point lies on the hyperplane");
  int sp = sign(dot(normal, p));
  if (sp == 0) return Side::on;
  return sp == sb ? Side::below : Side::above;
}

template <class F>
Side side_of(const Vec<F>& p, const Hyperplane<F>& h, const Vec<F>& base) {
  return side_of(p, h.normal, base);
}

// Closed polyhedral cone {x : <e,x> = 0 for e in equalities, <a,x> >= 0 for a in inequalities}.
template <class F>
class Cone {
 public:
  Cone() = default;
  Cone(std::size_t dim, std::vector<Vec<F>> equalities, std::vector<Vec<F>> inequalities)
      : dim_(dim), equalities_(std::move(equalities)), inequalities_(std::move(inequalities)) {
    for (const auto& v : equalities_)
      if (v.size() != dim_) throw std::invalid_argument("Cone: equality dimension mismatch");
    for (const auto& v : inequalities_)
      if (v.size() != dim_) throw std::invalid_argument("Cone: inequality dimension mismatch");
    compute_generators();
  }

  static Cone whole_space(std::size_t dim) { return Cone(dim, {}, {}); }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Vec<F>>& equalities() const { return equalities_; }
  const std::vector<Vec<F>>& inequalities() const { return inequalities_; }
  const std::vector<Vec<F>>& rays() const { return rays_; }
  const std::vector<Vec<F>>& lineality() const { return lineality_; }

  std::size_t dim() const { return cone_dim_; }
  std::size_t codim() const { return dim_ - dim(); }
  bool is_empty_interior() const { return dim() < dim_; }

  bool contains(const Vec<F>& p) const {
    for (const auto& e : equalities_)
      if (!is_zero(dot(e, p))) return false;
    for (const auto& a : inequalities_)
      if (sign(dot(a, p)) < 0) return false;
    return true;
  }

  bool contains(const Cone& other) const {
    for (const auto& r : other.rays_)
      if (!contains(r)) return false;
    for (const auto& l : other.lineality_)
      if (!contains(l) || !contains(negate(l))) return false;
    return true;
  }

  friend bool operator==(const Cone& a, const Cone& b) { return a.key() == b.key(); }

  // Canonical description: lineality RREF plus sorted normalized rays.
  std::string key() const {
    std::string s = "L";
    for (const auto& l : lineality_) s += vector_to_string(l);
    s += "R";
    for (const auto& r : rays_) s += vector_to_string(r);
    return s;
  }

  Cone intersect(const Cone& other) const {
    auto eq = equalities_;
    eq.insert(eq.end(), other.equalities_.begin(), other.equalities_.end());
    auto in = inequalities_;
    in.insert(in.end(), other.inequalities_.begin(), other.inequalities_.end());
    return Cone(dim_, std::move(eq), std::move(in));
  }

  // Point in the relative interior: sum of extreme rays (the zero vector if there are none).
  Vec<F> relative_interior_point() const {
    Vec<F> p = zero_vector<F>(dim_);
    for (const auto& r : rays_) p = add(std::move(p), r);
    return p;
  }

  // Minimal face: the lineality space.
  Cone minimal_face() const {
    auto eq = equalities_;
    eq.insert(eq.end(), inequalities_.begin(), inequalities_.end());
    return Cone(dim_, std::move(eq), {});
  }

  // The face on which the given extra constraints are tight.
  Cone face_with_tight(const std::vector<std::size_t>& tight) const {
    auto eq = equalities_;
    for (auto i : tight) eq.push_back(inequalities_.at(i));
    return Cone(dim_, std::move(eq), inequalities_);
  }

  // All faces, including the cone itself and the minimal face; the cone itself comes first.
  std::vector<Cone> faces() const {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> order;
    std::vector<int> all(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i) all[i] = static_cast<int>(i);
    seen.insert(all);
    order.push_back(all);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const auto cur = order[head];
      for (const auto& a : inequalities_) {
        std::vector<int> sub;
        for (int r : cur)
          if (is_zero(dot(a, rays_[r]))) sub.push_back(r);
        if (sub.size() == cur.size()) continue;
        if (seen.insert(sub).second) order.push_back(sub);
      }
    }
    std::vector<Cone> out;
    out.reserve(order.size());
    for (const auto& rs : order) {
      std::vector<std::size_t> tight;
      for (std::size_t i = 0; i < inequalities_.size(); ++i) {
        bool t = true;
        for (int r : rs) t = t && is_zero(dot(inequalities_[i], rays_[r]));
        if (t) tight.push_back(i);
      }
      out.push_back(face_with_tight(tight));
    }
    return out;
  }

  // Inequality normals whose face has codimension one in the cone.
  std::vector<Vec<F>> facet_normals() const {
    std::vector<Vec<F>> out;
    std::set<std::string> seen;
    const std::size_t d = dim();
    for (const auto& a : inequalities_) {
      std::vector<Vec<F>> tight = lineality_;
      bool proper = false;
      for (const auto& r : rays_) {
        if (is_zero(dot(a, r)))
          tight.push_back(r);
        else
          proper = true;
      }
      if (!proper || linear_rank(tight, dim_) + 1 != d) continue;
      auto n = normalize_ray(a);
      if (seen.insert(vector_to_string(n)).second) out.push_back(n);
    }
    return out;
  }

 private:
  std::size_t dim_of_generators(const std::vector<Vec<F>>& rays) const {
    std::vector<Vec<F>> g = lineality_;
    g.insert(g.end(), rays.begin(), rays.end());
    return linear_rank(g, dim_);
  }

  // Extreme rays from subsets of inequalities of full rank modulo the lineality space.
  void compute_generators() {
    std::vector<Vec<F>> all = equalities_;
    all.insert(all.end(), inequalities_.begin(), inequalities_.end());
    lineality_ = canonical_span(null_space(all, dim_), dim_);

    // the pointed part lives in the orthogonal complement of the lineality space
    RowSpace<F> base(dim_);
    for (const auto& e : equalities_) base.add(e);
    for (const auto& l : lineality_) base.add(l);
    rays_.clear();
    cone_dim_ = lineality_.size();
    if (base.rank() >= dim_) return;
    std::map<std::string, Vec<F>> found;
    std::function<void(std::size_t, const RowSpace<F>&)> rec = [&](std::size_t start, const RowSpace<F>& rs) {
      if (rs.rank() == dim_ - 1) {
        auto ns = rs.orthogonal_complement();
        for (int s : {1, -1}) {
          Vec<F> v = s > 0 ? ns[0] : negate(ns[0]);
          if (!contains(v)) continue;
          v = normalize_ray(std::move(v));
          found.emplace(vector_to_string(v), std::move(v));
        }
        return;
      }
      for (std::size_t i = start; i < inequalities_.size(); ++i) {
        if (inequalities_.size() - i < dim_ - 1 - rs.rank()) break;
        RowSpace<F> next = rs;
        if (next.add(inequalities_[i])) rec(i + 1, next);
      }
    };
    rec(0, base);
    for (auto& [k, v] : found) rays_.push_back(v);
    cone_dim_ = dim_of_generators(rays_);
  }

  std::size_t dim_ = 0;
  std::size_t cone_dim_ = 0;
  std::vector<Vec<F>> equalities_;
  std::vector<Vec<F>> inequalities_;
  std::vector<Vec<F>> rays_;
  std::vector<Vec<F>> lineality_;
};

}  // namespace shardlab
