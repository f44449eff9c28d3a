#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace shardlab {

using Bits = boost::dynamic_bitset<>;

// Finite poset on nodes 0..n-1 given by its order matrix; immutable.
class Poset {
 public:
  Poset() = default;

  // up[i] = set of j with i <= j (reflexivity is enforced).
  explicit Poset(std::vector<Bits> up) : up_(std::move(up)) {
    const std::size_t n = up_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (up_[i].size() != n) throw std::invalid_argument("Poset: order matrix is not square");
      up_[i].set(i);
    }
    down_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (auto j = up_[i].find_first(); j != Bits::npos; j = up_[i].find_next(j)) down_[j].set(i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && up_[i][j] && up_[j][i]) throw std::invalid_argument("Poset: relation is not antisymmetric");
    compute_covers();
  }

  template <class Leq>
  static Poset from_relation(std::size_t n, Leq&& leq) {
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i == j || leq(static_cast<int>(i), static_cast<int>(j))) up[i].set(j);
    return Poset(std::move(up));
  }

  // Transitive closure of the given cover (or generating) relation.
  static Poset from_covers(std::size_t n, const std::vector<std::pair<int, int>>& covers) {
    std::vector<std::vector<int>> succ(n);
    for (auto [a, b] : covers) succ[a].push_back(b);
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> stack{static_cast<int>(s)};
      up[s].set(s);
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : succ[x])
          if (!up[s][y]) {
            up[s].set(y);
            stack.push_back(y);
          }
      }
    }
    return Poset(std::move(up));
  }

  std::size_t size() const { return up_.size(); }
  bool leq(int a, int b) const { return up_[a][b]; }
  bool less(int a, int b) const { return a != b && up_[a][b]; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  const Bits& up_set(int a) const { return up_[a]; }
  const Bits& down_set(int a) const { return down_[a]; }
  const std::vector<int>& upper_covers(int a) const { return ucov_[a]; }
  const std::vector<int>& lower_covers(int a) const { return lcov_[a]; }

  std::size_t num_cover_relations() const {
    std::size_t c = 0;
    for (const auto& u : ucov_) c += u.size();
    return c;
  }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (lcov_[i].empty()) out.push_back(static_cast<int>(i));
    return out;
  }
  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (ucov_[i].empty()) out.push_back(static_cast<int>(i));
    return out;
  }
  std::optional<int> bottom() const {
    auto m = minimal_elements();
    if (m.size() != 1) return std::nullopt;
    return m[0];
  }
  std::optional<int> top() const {
    auto m = maximal_elements();
    if (m.size() != 1) return std::nullopt;
    return m[0];
  }

  // Nodes sorted so that a < b in the poset implies a precedes b.
  std::vector<int> linear_extension() const {
    std::vector<int> order(size());
    for (std::size_t i = 0; i < size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return down_[a].count() < down_[b].count(); });
    return order;
  }

  // Rank function if every maximal chain of every lower interval from the bottom has equal length.
  std::optional<std::vector<int>> rank_function() const {
    auto b = bottom();
    if (!b) return std::nullopt;
    std::vector<int> rank(size(), -1);
    rank[*b] = 0;
    for (int x : linear_extension()) {
      for (int y : lcov_[x]) {
        if (rank[x] < 0) rank[x] = rank[y] + 1;
        if (rank[x] != rank[y] + 1) return std::nullopt;
      }
    }
    return rank;
  }

  bool is_graded() const { return rank_function().has_value() && top().has_value(); }

  // mu(a, x) for every x (zero outside the up-set of a).
  std::vector<std::int64_t> mobius_from(int a) const {
    std::vector<std::int64_t> mu(size(), 0);
    for (int x : linear_extension()) {
      if (!leq(a, x)) continue;
      if (x == a) {
        mu[x] = 1;
        continue;
      }
      std::int64_t s = 0;
      const Bits below = down_[x] & up_[a];
      for (auto y = below.find_first(); y != Bits::npos; y = below.find_next(y))
        if (static_cast<int>(y) != x) s += mu[y];
      mu[x] = -s;
    }
    return mu;
  }

  std::int64_t mobius(int a, int b) const { return leq(a, b) ? mobius_from(a)[b] : 0; }

  // Number of maximal chains from a minimal to a maximal element.
  std::int64_t maximal_chain_count() const {
    std::vector<std::int64_t> c(size(), 0);
    for (int x : linear_extension()) {
      if (lcov_[x].empty()) c[x] = 1;
      for (int y : lcov_[x]) c[x] += c[y];
    }
    std::int64_t total = 0;
    for (int m : maximal_elements()) total += c[m];
    return total;
  }

  // f[k] = number of chains with k+1 elements (simplices of dimension k of the order complex).
  std::vector<std::int64_t> chain_f_vector() const {
    std::vector<std::vector<std::int64_t>> ending(size());
    std::vector<std::int64_t> f;
    for (int x : linear_extension()) {
      auto& e = ending[x];
      e.assign(1, 1);
      const Bits& below = down_[x];
      for (auto y = below.find_first(); y != Bits::npos; y = below.find_next(y)) {
        if (static_cast<int>(y) == x) continue;
        const auto& ey = ending[y];
        if (e.size() < ey.size() + 1) e.resize(ey.size() + 1, 0);
        for (std::size_t k = 0; k < ey.size(); ++k) e[k + 1] += ey[k];
      }
      if (f.size() < e.size()) f.resize(e.size(), 0);
      for (std::size_t k = 0; k < e.size(); ++k) f[k] += e[k];
    }
    return f;
  }

  // Visits every nonempty chain as an increasing list of nodes.
  void for_each_chain(const std::function<void(const std::vector<int>&)>& visit) const {
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int x) {
      chain.push_back(x);
      visit(chain);
      const Bits& above = up_[x];
      for (auto y = above.find_first(); y != Bits::npos; y = above.find_next(y))
        if (static_cast<int>(y) != x) extend(static_cast<int>(y));
      chain.pop_back();
    };
    for (std::size_t x = 0; x < size(); ++x) extend(static_cast<int>(x));
  }

  std::vector<std::vector<int>> maximal_chains() const {
    std::vector<std::vector<int>> out;
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int x) {
      chain.push_back(x);
      if (ucov_[x].empty())
        out.push_back(chain);
      else
        for (int y : ucov_[x]) extend(y);
      chain.pop_back();
    };
    for (int m : minimal_elements()) extend(m);
    return out;
  }

  // Least upper bound if it exists.
  std::optional<int> join(int a, int b) const {
    Bits ub = up_[a] & up_[b];
    return least_of(ub);
  }
  std::optional<int> meet(int a, int b) const {
    Bits lb = down_[a] & down_[b];
    return greatest_of(lb);
  }

  bool is_lattice() const {
    if (size() == 0) return false;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = a + 1; b < size(); ++b)
        if (!join(int(a), int(b)) || !meet(int(a), int(b))) return false;
    return bottom().has_value();
  }

  std::vector<int> atoms() const {
    auto b = bottom();
    if (!b) return {};
    return ucov_[*b];
  }
  std::vector<int> coatoms() const {
    auto t = top();
    if (!t) return {};
    return lcov_[*t];
  }

  // Every element is the join of the atoms below it.
  bool is_atomic() const {
    auto b = bottom();
    if (!b) return false;
    for (std::size_t x = 0; x < size(); ++x) {
      if (static_cast<int>(x) == *b) continue;
      Bits ub(size());
      ub.set();
      bool any = false;
      for (int a : atoms())
        if (leq(a, int(x))) {
          ub &= up_[a];
          any = true;
        }
      if (!any) return false;
      auto l = least_of(ub);
      if (!l || *l != static_cast<int>(x)) return false;
    }
    return true;
  }

  bool is_coatomic() const { return dual().is_atomic(); }

  Poset dual() const { return Poset(down_); }

  Poset induced(const std::vector<int>& nodes) const {
    const std::size_t m = nodes.size();
    std::vector<Bits> up(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (leq(nodes[i], nodes[j])) up[i].set(j);
    return Poset(std::move(up));
  }

  // Nodes of the closed interval [a, b].
  std::vector<int> interval(int a, int b) const {
    std::vector<int> out;
    Bits in = up_[a] & down_[b];
    for (auto x = in.find_first(); x != Bits::npos; x = in.find_next(x)) out.push_back(static_cast<int>(x));
    return out;
  }

  bool is_interval(const std::vector<int>& nodes) const {
    if (nodes.empty()) return false;
    Bits in(size());
    for (int x : nodes) in.set(x);
    auto lo = least_of(in);
    auto hi = greatest_of(in);
    if (!lo || !hi) return false;
    return (up_[*lo] & down_[*hi]) == in;
  }

  // Order isomorphism to other (map[i] = image of node i), by backtracking with rank/degree pruning.
  std::optional<std::vector<int>> isomorphism_to(const Poset& other) const {
    const std::size_t n = size();
    if (other.size() != n || num_cover_relations() != other.num_cover_relations()) return std::nullopt;
    auto sig = [](const Poset& p, int x) {
      return std::array<std::size_t, 4>{p.up_[x].count(), p.down_[x].count(), p.ucov_[x].size(),
                                        p.lcov_[x].size()};
    };
    std::vector<int> order = linear_extension();
    std::vector<int> map(n, -1);
    Bits used(n);
    std::function<bool(std::size_t)> place = [&](std::size_t k) {
      if (k == n) return true;
      int x = order[k];
      auto sx = sig(*this, x);
      for (std::size_t y = 0; y < n; ++y) {
        if (used[y] || sig(other, int(y)) != sx) continue;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          int z = order[i];
          ok = leq(z, x) == other.leq(map[z], int(y)) && leq(x, z) == other.leq(int(y), map[z]);
        }
        if (!ok) continue;
        map[x] = int(y);
        used.set(y);
        if (place(k + 1)) return true;
        used.reset(y);
        map[x] = -1;
      }
      return false;
    };
    if (!place(0)) return std::nullopt;
    return map;
  }

  bool is_order_preserving_map(const Poset& target, const std::vector<int>& f) const {
    for (std::size_t a = 0; a < size(); ++a)
      for (int b : ucov_[a])
        if (!target.leq(f[a], f[b])) return false;
    return true;
  }

  std::string to_dot(const std::vector<std::string>& labels, const std::string& name = "poset") const {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < size(); ++i)
      os << "  n" << i << " [label=\"" << (i < labels.size() ? labels[i] : std::to_string(i)) << "\"];\n";
    for (std::size_t i = 0; i < size(); ++i)
      for (int j : ucov_[i]) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
  }

 private:
  std::optional<int> least_of(const Bits& set) const {
    for (auto x = set.find_first(); x != Bits::npos; x = set.find_next(x))
      if ((set & up_[x]) == set) return static_cast<int>(x);
    return std::nullopt;
  }
  std::optional<int> greatest_of(const Bits& set) const {
    for (auto x = set.find_first(); x != Bits::npos; x = set.find_next(x))
      if ((set & down_[x]) == set) return static_cast<int>(x);
    return std::nullopt;
  }

  void compute_covers() {
    const std::size_t n = size();
    ucov_.assign(n, {});
    lcov_.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
      for (auto b = up_[a].find_first(); b != Bits::npos; b = up_[a].find_next(b)) {
        if (b == a) continue;
        // a < b is a cover iff no c strictly between
        Bits mid = up_[a] & down_[b];
        if (mid.count() == 2) {
          ucov_[a].push_back(static_cast<int>(b));
          lcov_[b].push_back(static_cast<int>(a));
        }
      }
    }
  }

  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::vector<int>> ucov_;
  std::vector<std::vector<int>> lcov_;
};

}  // namespace shardlab
