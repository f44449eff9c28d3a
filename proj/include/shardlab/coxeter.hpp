#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "shardlab/flats.hpp"
#include "shardlab/linalg.hpp"
#include "shardlab/scalar.hpp"
#include "shardlab/weak_order.hpp"

namespace shardlab {

class UnsupportedType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CoxeterFactor {
  char family;  // one of A B D F G H I
  int rank;
  int m;  // dihedral order for family I, else 0
};

enum class FieldKind { rational, sqrt5, combinatorial };

class CoxeterType {
 public:
  std::vector<CoxeterFactor> factors;

  // Accepts "A3", "B3", "D4", "F4", "G2", "H3", "H4", "I2(5)" and products joined by 'x'.
  static CoxeterType parse(std::string_view text) {
    CoxeterType t;
    std::string s(text);
    if (s.empty()) throw UnsupportedType("empty type string");
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find('x', pos);
      std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      t.factors.push_back(parse_factor(tok));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (t.rank() > 8) throw UnsupportedType("rank above 8: " + s);
    bool dihedral_comb = false;
    for (const auto& f : t.factors) dihedral_comb = dihedral_comb || (f.family == 'I' && !geometric_dihedral(f.m));
    if (dihedral_comb && t.factors.size() > 1)
      throw UnsupportedType("I2(m) with m > 6 is only supported as a single factor: " + s);
    return t;
  }

  int rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
  }

  std::string name() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "x";
      const auto& f = factors[i];
      if (f.family == 'I')
        out += "I2(" + std::to_string(f.m) + ")";
      else
        out += std::string(1, f.family) + std::to_string(f.rank);
    }
    return out;
  }

  FieldKind field() const {
    FieldKind k = FieldKind::rational;
    for (const auto& f : factors) {
      if (f.family == 'I' && !geometric_dihedral(f.m)) return FieldKind::combinatorial;
      if (f.family == 'H' || (f.family == 'I' && f.m == 5)) k = FieldKind::sqrt5;
    }
    return k;
  }

  bool is_single_type_a() const { return factors.size() == 1 && factors[0].family == 'A'; }

  // m(s_i, s_j), with 1 on the diagonal.
  std::vector<std::vector<int>> coxeter_matrix() const {
    const int n = rank();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    int off = 0;
    for (const auto& f : factors) {
      auto edge = [&](int i, int j, int v) {
        m[off + i][off + j] = v;
        m[off + j][off + i] = v;
      };
      const int r = f.rank;
      switch (f.family) {
        case 'A':
          for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, 3);
          break;
        case 'B':
          for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, i + 2 == r ? 4 : 3);
          break;
        case 'D':
          for (int i = 0; i + 2 < r; ++i) edge(i, i + 1, 3);
          edge(r - 3, r - 1, 3);
          break;
        case 'F':
          edge(0, 1, 3), edge(1, 2, 4), edge(2, 3, 3);
          break;
        case 'G':
          edge(0, 1, 6);
          break;
        case 'H':
          edge(0, 1, 5);
          for (int i = 1; i + 1 < r; ++i) edge(i, i + 1, 3);
          break;
        case 'I':
          edge(0, 1, f.m);
          break;
      }
      off += r;
    }
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }

  static bool geometric_dihedral(int m) { return m >= 2 && m <= 6; }

 private:
  static CoxeterFactor parse_factor(const std::string& tok) {
    if (tok.size() < 2) throw UnsupportedType("bad type factor: '" + tok + "'");
    const char fam = tok[0];
    if (fam == 'I') {
      if (tok.rfind("I2(", 0) != 0 || tok.back() != ')') throw UnsupportedType("bad dihedral factor: " + tok);
      int m = parse_int(tok.substr(3, tok.size() - 4), tok);
      if (m < 2) throw UnsupportedType("dihedral order below 2: " + tok);
      if (m == 3) return {'A', 2, 0};
      return {'I', 2, m};
    }
    int r = parse_int(tok.substr(1), tok);
    switch (fam) {
      case 'A':
        if (r >= 1) return {'A', r, 0};
        break;
      case 'B':
      case 'C':
        if (r >= 2) return {'B', r, 0};
        break;
      case 'D':
        if (r >= 4) return {'D', r, 0};
        break;
      case 'F':
        if (r == 4) return {'F', 4, 0};
        break;
      case 'G':
        if (r == 2) return {'G', 2, 0};
        break;
      case 'H':
        if (r == 3 || r == 4) return {'H', r, 0};
        break;
      default:
        break;
    }
    throw UnsupportedType("unsupported type factor: " + tok);
  }

  static int parse_int(const std::string& s, const std::string& tok) {
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw UnsupportedType("bad type factor: " + tok);
    return std::stoi(s);
  }
};

// Positive roots in simple-root coordinates over an exact field.
template <class F>
struct RootGeometry {
  std::vector<std::vector<F>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
  std::vector<Vec<F>> positive_roots;

  std::size_t rank() const { return cartan.size(); }

  // Signed root vector for a root index in [0, 2N).
  Vec<F> root(int idx) const {
    const int n_pos = static_cast<int>(positive_roots.size());
    return idx < n_pos ? positive_roots[idx] : negate(positive_roots[idx - n_pos]);
  }
};

using RootGeometryVariant = std::variant<std::monostate, RootGeometry<Rational>, RootGeometry<QSqrt5>>;

namespace detail {

template <class F>
F cartan_entry(int m, bool first, F tau) {
  switch (m) {
    case 2: return F(0);
    case 3: return F(-1);
    case 4: return first ? F(-1) : F(-2);
    case 6: return first ? F(-1) : F(-3);
    case 5: return -tau;
    default: throw UnsupportedType("no exact Cartan entry for m=" + std::to_string(m));
  }
}

template <class F>
bool lex_less(const Vec<F>& a, const Vec<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int s = sign(a[i] - b[i]);
    if (s) return s < 0;
  }
  return false;
}

// Root action tables: action[s][r] for roots r in [0, 2N), negatives offset by N.
struct RootCombinatorics {
  int rank = 0;
  int num_positive = 0;
  std::vector<std::vector<int>> action;
  std::vector<std::uint32_t> support;  // simple indices in the support of each positive root
};

template <class F>
std::pair<RootCombinatorics, RootGeometry<F>> build_roots(const std::vector<std::vector<int>>& cox, F tau) {
  const int n = static_cast<int>(cox.size());
  RootGeometry<F> geo;
  geo.cartan.assign(n, std::vector<F>(n, F(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) geo.cartan[i][j] = i == j ? F(2) : cartan_entry<F>(cox[i][j], i < j, tau);

  auto reflect = [&](int s, Vec<F> v) {
    F c(0);
    for (int j = 0; j < n; ++j) c += geo.cartan[s][j] * v[j];
    v[s] -= c;
    return v;
  };
  auto positive = [](const Vec<F>& v) {
    for (const auto& x : v)
      if (sign(x) < 0) return false;
    return true;
  };

  // BFS from the simple roots; depth = number of reflections applied
  std::vector<Vec<F>> found;
  std::vector<int> depth;
  auto known = [&](const Vec<F>& v) {
    for (const auto& f : found)
      if (f == v) return true;
    return false;
  };
  for (int i = 0; i < n; ++i) {
    Vec<F> e = zero_vector<F>(n);
    e[i] = F(1);
    found.push_back(e);
    depth.push_back(0);
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (int s = 0; s < n; ++s) {
      Vec<F> v = reflect(s, found[head]);
      if (!positive(v) || known(v)) continue;
      if (found.size() >= kMaxHyperplanes) throw UnsupportedType("too many reflecting hyperplanes");
      found.push_back(v);
      depth.push_back(depth[head] + 1);
    }
  }
  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin() + n, order.end(), [&](int a, int b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return lex_less(found[a], found[b]);
  });
  for (int i : order) geo.positive_roots.push_back(found[i]);

  RootCombinatorics comb;
  comb.rank = n;
  comb.num_positive = static_cast<int>(geo.positive_roots.size());
  const int np = comb.num_positive;
  auto index_of = [&](const Vec<F>& v) {
    for (int i = 0; i < np; ++i) {
      if (geo.positive_roots[i] == v) return i;
      bool neg = true;
      for (int k = 0; k < n && neg; ++k) neg = (geo.positive_roots[i][k] + v[k]) == F(0);
      if (neg) return i + np;
    }
    throw std::logic_error("root system not closed under reflections");
  };
  comb.action.assign(n, std::vector<int>(2 * np));
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < 2 * np; ++r) comb.action[s][r] = index_of(reflect(s, geo.root(r)));
  for (const auto& root : geo.positive_roots) {
    std::uint32_t sup = 0;
    for (int k = 0; k < n; ++k)
      if (sign(root[k]) != 0) sup |= 1u << k;
    comb.support.push_back(sup);
  }
  return {std::move(comb), std::move(geo)};
}

// I2(m) without coordinates: root r_k at angle k*pi/m, k mod 2m; positive iff k < m.
inline RootCombinatorics dihedral_roots(int m) {
  RootCombinatorics comb;
  comb.rank = 2;
  comb.num_positive = m;
  // positive root index -> angle index; alpha_1 = r_0, alpha_2 = r_{m-1}
  std::vector<int> angle_of(m);
  angle_of[0] = 0;
  angle_of[1] = m - 1;
  for (int k = 1; k + 1 < m; ++k) angle_of[k + 1] = k;
  std::vector<int> index_of_angle(m);
  for (int i = 0; i < m; ++i) index_of_angle[angle_of[i]] = i;
  auto to_index = [&](int angle) {
    angle = ((angle % (2 * m)) + 2 * m) % (2 * m);
    return angle < m ? index_of_angle[angle] : index_of_angle[angle - m] + m;
  };
  auto to_angle = [&](int idx) { return idx < m ? angle_of[idx] : angle_of[idx - m] + m; };
  comb.action.assign(2, std::vector<int>(2 * m));
  for (int s = 0; s < 2; ++s) {
    const int j = angle_of[s];
    for (int r = 0; r < 2 * m; ++r) comb.action[s][r] = to_index(2 * j + m - to_angle(r));
  }
  comb.support.assign(m, 3u);
  comb.support[0] = 1u;
  comb.support[1] = 2u;
  return comb;
}

}  // namespace detail

// A finite Coxeter group, elements enumerated by BFS; element ids are stable and e has id 0.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(const CoxeterType& type) : type_(type) {
    cox_ = type.coxeter_matrix();
    switch (type.field()) {
      case FieldKind::rational: {
        auto [comb, geo] = detail::build_roots<Rational>(cox_, Rational(0));
        comb_ = std::move(comb);
        geometry_ = std::move(geo);
        break;
      }
      case FieldKind::sqrt5: {
        auto [comb, geo] = detail::build_roots<QSqrt5>(cox_, golden_ratio());
        comb_ = std::move(comb);
        geometry_ = std::move(geo);
        break;
      }
      case FieldKind::combinatorial:
        comb_ = detail::dihedral_roots(type.factors[0].m);
        break;
    }
    n_ = comb_.rank;
    np_ = comb_.num_positive;
    build_flats();
    enumerate();
    build_reflections();
  }

  static CoxeterGroup from_string(std::string_view s) { return CoxeterGroup(CoxeterType::parse(s)); }

  const CoxeterType& type() const { return type_; }
  int rank() const { return n_; }
  int num_positive_roots() const { return np_; }
  int size() const { return static_cast<int>(inv_.size()); }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int coxeter_m(int i, int j) const { return cox_[i][j]; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return cox_; }
  const RootGeometryVariant& geometry() const { return geometry_; }
  bool has_geometry() const { return !std::holds_alternative<std::monostate>(geometry_); }
  std::shared_ptr<const FlatOracle> flats() const { return flats_; }

  const HyperSet& inversions(int w) const { return inv_[w]; }
  int length(int w) const { return static_cast<int>(inv_[w].count()); }
  const std::vector<int>& word(int w) const { return words_[w]; }
  int find(const HyperSet& inv) const {
    auto it = index_.find(inv);
    return it == index_.end() ? -1 : it->second;
  }

  // Image of a signed root index under w.
  int act(int w, int root) const { return perm_[std::size_t(w) * 2 * np_ + root]; }
  int simple_act(int s, int root) const { return comb_.action[s][root]; }
  bool is_positive(int root) const { return root < np_; }
  int positive_part(int root) const { return root < np_ ? root : root - np_; }
  std::uint32_t root_support(int positive_root) const { return comb_.support[positive_root]; }

  int right_multiply(int w, int s) const { return right_[std::size_t(w) * n_ + s]; }
  int left_multiply(int s, int w) const { return left_[std::size_t(w) * n_ + s]; }
  int simple(int s) const { return right_multiply(0, s); }

  int multiply(int u, int v) const {
    std::vector<int> p(2 * np_);
    for (int r = 0; r < 2 * np_; ++r) p[r] = act(u, act(v, r));
    return from_permutation_of_roots(p);
  }

  int inverse(int w) const {
    std::vector<int> p(2 * np_);
    for (int r = 0; r < 2 * np_; ++r) p[act(w, r)] = r;
    return from_permutation_of_roots(p);
  }

  int from_word(const std::vector<int>& letters) const {
    int w = 0;
    for (int s : letters) {
      if (s < 0 || s >= n_) throw std::invalid_argument("generator index out of range");
      w = right_multiply(w, s);
    }
    return w;
  }

  std::vector<int> descents(int w) const {
    std::vector<int> out;
    for (int s = 0; s < n_; ++s)
      if (!is_positive(act(w, s))) out.push_back(s);
    return out;
  }
  std::uint32_t descent_mask(int w) const {
    std::uint32_t m = 0;
    for (int s : descents(w)) m |= 1u << s;
    return m;
  }
  std::vector<int> left_descents(int w) const { return descents(inverse(w)); }

  // Positive roots of the cover reflections w s w^{-1}, one per descent s.
  std::vector<int> cover_reflection_roots(int w) const {
    std::vector<int> out;
    for (int s : descents(w)) out.push_back(act(w, s) - np_);
    return out;
  }

  // Reflection element for a positive root.
  int reflection(int root) const { return reflections_[root]; }
  const std::vector<int>& reflections() const { return reflections_; }
  // Positive root of a reflection element, or -1.
  int reflection_root(int w) const {
    auto it = std::find(reflections_.begin(), reflections_.end(), w);
    return it == reflections_.end() ? -1 : static_cast<int>(it - reflections_.begin());
  }

  // Hyperplanes containing the fixed space of w.
  HyperSet fixed_flat(int w) const { return fixed_flat_[w]; }
  int absolute_length(int w) const { return absolute_length_[w]; }

  // Absolute length by breadth-first search over products of reflections.
  std::vector<int> absolute_length_by_bfs() const {
    std::vector<int> dist(size(), -1);
    dist[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int w = queue[h];
      for (int t : reflections_) {
        int x = multiply(t, w);
        if (dist[x] < 0) {
          dist[x] = dist[w] + 1;
          queue.push_back(x);
        }
      }
    }
    return dist;
  }

  // Positive roots in the span of the simple roots in mask.
  HyperSet parabolic_roots(std::uint32_t mask) const {
    HyperSet s;
    for (int r = 0; r < np_; ++r)
      if ((comb_.support[r] & ~mask) == 0) s.set(r);
    return s;
  }

  std::vector<int> standard_parabolic(std::uint32_t mask) const {
    const HyperSet roots = parabolic_roots(mask);
    std::vector<int> out;
    for (int w = 0; w < size(); ++w)
      if (is_subset(inv_[w], roots)) out.push_back(w);
    return out;
  }

  // Longest element of W_J.
  int parabolic_longest(std::uint32_t mask) const { return find(parabolic_roots(mask)); }

  // c = s_{o1} s_{o2} ... for a total order of S.
  int coxeter_element(const std::vector<int>& order) const {
    std::vector<int> seen(order);
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < n_; ++i)
      if (static_cast<int>(seen.size()) != n_ || seen[i] != i)
        throw std::invalid_argument("coxeter_element: not an ordering of the simple generators");
    return from_word(order);
  }

  std::shared_ptr<WeakOrder> weak_order() const { return std::make_shared<WeakOrder>(inv_, flats_); }

  // One-line notation w(1)...w(n+1) for a single type A factor (right multiplication swaps positions).
  std::vector<int> to_permutation(int w) const {
    require_type_a();
    std::vector<int> p(n_ + 1);
    std::iota(p.begin(), p.end(), 1);
    for (int s : words_[w]) std::swap(p[s], p[s + 1]);
    return p;
  }

  std::string permutation_string(int w) const {
    std::string s;
    for (int v : to_permutation(w)) s += (v < 10 ? std::string(1, char('0' + v)) : "(" + std::to_string(v) + ")");
    return s;
  }

  int from_permutation(std::vector<int> p) const {
    require_type_a();
    if (static_cast<int>(p.size()) != n_ + 1) throw std::invalid_argument("permutation has wrong size");
    std::vector<int> letters;
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < n_; ++i)
        if (p[i] > p[i + 1]) {
          std::swap(p[i], p[i + 1]);
          letters.push_back(i);
          changed = true;
        }
    }
    for (int i = 0; i <= n_; ++i)
      if (p[i] != i + 1) throw std::invalid_argument("not a permutation");
    std::reverse(letters.begin(), letters.end());
    return from_word(letters);
  }

  int from_permutation_string(const std::string& s) const {
    std::vector<int> p;
    for (char c : s) p.push_back(c - '0');
    return from_permutation(p);
  }

  std::string word_string(int w) const {
    if (words_[w].empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < words_[w].size(); ++i) s += (i ? "," : "") + std::string("s") + std::to_string(words_[w][i] + 1);
    return s;
  }

  // Permutation notation in type A, word notation otherwise.
  std::string label(int w) const { return type_.is_single_type_a() && n_ <= 8 ? permutation_string(w) : word_string(w); }

 private:
  void require_type_a() const {
    if (!type_.is_single_type_a()) throw std::invalid_argument("permutation notation needs a single type A factor");
  }

  int from_permutation_of_roots(const std::vector<int>& p) const {
    HyperSet inv;
    for (int r = np_; r < 2 * np_; ++r)
      if (p[r] < np_) inv.set(p[r]);
    int id = find(inv);
    if (id < 0) throw std::logic_error("product left the group");
    return id;
  }

  void build_flats() {
    if (auto* g = std::get_if<RootGeometry<Rational>>(&geometry_))
      flats_ = std::make_shared<LinearFlatOracle<Rational>>(g->positive_roots);
    else if (auto* g5 = std::get_if<RootGeometry<QSqrt5>>(&geometry_))
      flats_ = std::make_shared<LinearFlatOracle<QSqrt5>>(g5->positive_roots);
    else
      flats_ = std::make_shared<RankTwoFlatOracle>(np_);
  }

  void enumerate() {
    const int nr = 2 * np_;
    std::vector<int> id(nr);
    std::iota(id.begin(), id.end(), 0);
    perm_.assign(id.begin(), id.end());
    inv_.push_back(HyperSet{});
    words_.push_back({});
    index_.emplace(HyperSet{}, 0);
    std::vector<std::pair<int, int>> pending;  // (w, s) edges for the right table
    for (std::size_t h = 0; h < inv_.size(); ++h) {
      const int w = static_cast<int>(h);
      for (int s = 0; s < n_; ++s) {
        const int img = act(w, s);
        if (!is_positive(img)) continue;
        HyperSet inv = inv_[w];
        inv.set(img);
        if (index_.count(inv)) continue;
        const int x = static_cast<int>(inv_.size());
        index_.emplace(inv, x);
        inv_.push_back(inv);
        auto word = words_[w];
        word.push_back(s);
        words_.push_back(std::move(word));
        for (int r = 0; r < nr; ++r) perm_.push_back(act(w, comb_.action[s][r]));
      }
    }
    const int size = static_cast<int>(inv_.size());
    right_.assign(std::size_t(size) * n_, -1);
    left_.assign(std::size_t(size) * n_, -1);
    for (int w = 0; w < size; ++w) {
      for (int s = 0; s < n_; ++s) {
        HyperSet inv = inv_[w];
        inv.flip(positive_part(act(w, s)));
        right_[std::size_t(w) * n_ + s] = find(inv);
        std::vector<int> p(nr);
        for (int r = 0; r < nr; ++r) p[r] = comb_.action[s][act(w, r)];
        left_[std::size_t(w) * n_ + s] = from_permutation_of_roots(p);
      }
    }
    HyperSet all;
    for (int r = 0; r < np_; ++r) all.set(r);
    longest_ = find(all);
  }

  void build_reflections() {
    reflections_.assign(np_, -1);
    for (int w = 0; w < size(); ++w)
      for (int s = 0; s < n_; ++s) {
        const int img = act(w, s);
        if (is_positive(img) && reflections_[img] < 0) reflections_[img] = multiply(right_multiply(w, s), inverse(w));
      }
    fixed_flat_.resize(size());
    absolute_length_.resize(size());
    for (int w = 0; w < size(); ++w) {
      if (auto* g = std::get_if<RootGeometry<Rational>>(&geometry_))
        set_fixed(w, *g);
      else if (auto* g5 = std::get_if<RootGeometry<QSqrt5>>(&geometry_))
        set_fixed(w, *g5);
      else
        set_fixed_dihedral(w);
    }
  }

  // Fix(w) is cut out by the roots in the image of (w - 1).
  template <class F>
  void set_fixed(int w, const RootGeometry<F>& g) {
    RowSpace<F> im(n_);
    for (int s = 0; s < n_; ++s) im.add(subtract(g.root(act(w, s)), g.root(s)));
    HyperSet flat;
    for (int r = 0; r < np_; ++r)
      if (im.contains(g.positive_roots[r])) flat.set(r);
    fixed_flat_[w] = flat;
    absolute_length_[w] = static_cast<int>(im.rank());
  }

  void set_fixed_dihedral(int w) {
    HyperSet flat;
    int len = 0;
    if (w == 0) {
      len = 0;
    } else if (length(w) % 2 == 1) {
      flat.set(reflection_root(w));
      len = 1;
    } else {
      for (int r = 0; r < np_; ++r) flat.set(r);
      len = 2;
    }
    fixed_flat_[w] = flat;
    absolute_length_[w] = len;
  }

  struct HyperSetHash {
    std::size_t operator()(const HyperSet& s) const { return std::hash<HyperSet>{}(s); }
  };

  CoxeterType type_;
  std::vector<std::vector<int>> cox_;
  detail::RootCombinatorics comb_;
  RootGeometryVariant geometry_;
  std::shared_ptr<const FlatOracle> flats_;
  int n_ = 0;
  int np_ = 0;
  std::vector<int> perm_;
  std::vector<HyperSet> inv_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<HyperSet, int, HyperSetHash> index_;
  std::vector<int> right_;
  std::vector<int> left_;
  int longest_ = -1;
  std::vector<int> reflections_;
  std::vector<HyperSet> fixed_flat_;
  std::vector<int> absolute_length_;
};

}  // namespace shardlab
