#include <gtest/gtest.h>

#include <set>

#include "shardlab/coxeter.hpp"
#include "shardlab/geometry.hpp"
#include "shardlab/pipeline.hpp"
#include "shardlab/shards.hpp"

using namespace shardlab;

namespace {

// Basic hyperplanes of the rank-two subarrangement through h1 and h2: the two base-side normals spanning the
// extreme rays of the cone of base-side normals in that plane.
template <class F>
HyperSet extreme_ray_basics(const Arrangement<F>& a, int h1, int h2) {
  const auto u = a.base_normal(h1), v = a.base_normal(h2);
  std::vector<int> members;
  for (int h = 0; h < a.num_hyperplanes(); ++h)
    if (linear_rank(std::vector<Vec<F>>{u, v, a.hyperplanes[h].normal}) == 2) members.push_back(h);
  std::size_t pi = 0, pj = 1;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (sign(u[i] * v[j] - u[j] * v[i]) != 0) pi = i, pj = j;
  auto det = [&](const Vec<F>& x, const Vec<F>& y) { return sign(x[pi] * y[pj] - x[pj] * y[pi]); };
  HyperSet out;
  for (int b : members) {
    const auto nb = a.base_normal(b);
    bool interior = false;
    for (int c : members)
      for (int d : members) {
        if (c == b || d == b || c == d) continue;
        const auto nc = a.base_normal(c), nd = a.base_normal(d);
        const int s = det(nc, nd);
        interior = interior || (s != 0 && det(nc, nb) == s && det(nb, nd) == s);
      }
    if (!interior) out.set(b);
  }
  return out;
}

template <class F>
void expect_cuts_match_extreme_rays(const CoxeterGroup& g) {
  const auto arr = coxeter_arrangement<F>(g);
  ShardStructure sh(g.weak_order());
  for (int h1 = 0; h1 < arr.num_hyperplanes(); ++h1)
    for (int h2 = 0; h2 < arr.num_hyperplanes(); ++h2) {
      if (h1 == h2) continue;
      const HyperSet basic = extreme_ray_basics(arr, h1, h2);
      EXPECT_EQ(basic.count(), 2u) << g.type().name();
      EXPECT_EQ(sh.cuts(h1, h2), basic[h1] && !basic[h2]) << g.type().name() << " " << h1 << " " << h2;
    }
}

int root_index(const CoxeterGroup& g, std::initializer_list<int> coeffs) {
  const auto& geo = root_geometry<Rational>(g);
  Vec<Rational> v;
  for (int c : coeffs) v.emplace_back(c);
  for (int r = 0; r < g.num_positive_roots(); ++r)
    if (geo.positive_roots[r] == v) return r;
  return -1;
}

}  // namespace

TEST(Cuts, A2Examples) {
  const auto g = CoxeterGroup::from_string("A2");
  ShardStructure sh(g.weak_order());
  const int a1 = root_index(g, {1, 0}), a12 = root_index(g, {1, 1});
  EXPECT_TRUE(sh.cuts(a1, a12));
  EXPECT_FALSE(sh.cuts(a12, a1));
}

TEST(Cuts, NothingCutsABasicHyperplane) {
  for (const char* t : {"A3", "B3", "I2(5)", "H3"}) {
    const auto g = CoxeterGroup::from_string(t);
    ShardStructure sh(g.weak_order());
    for (int s = 0; s < g.rank(); ++s) EXPECT_TRUE(sh.cutting_hyperplanes(s).none()) << t;
  }
}

TEST(Cuts, DihedralFiveBasicLinesCutTheOthers) {
  const auto g = CoxeterGroup::from_string("I2(5)");
  ShardStructure sh(g.weak_order());
  int pairs = 0;
  for (int h = 0; h < 5; ++h)
    for (int h2 = 0; h2 < 5; ++h2) {
      const bool basic = h < 2, basic2 = h2 < 2;
      EXPECT_EQ(sh.cuts(h, h2), basic && !basic2);
      pairs += sh.cuts(h, h2);
    }
  EXPECT_EQ(pairs, 6);
  EXPECT_EQ(sh.size(), 8);
}

TEST(Cuts, MatchExtremeRayOracle) {
  expect_cuts_match_extreme_rays<Rational>(CoxeterGroup::from_string("A3"));
  expect_cuts_match_extreme_rays<Rational>(CoxeterGroup::from_string("B3"));
  expect_cuts_match_extreme_rays<Rational>(CoxeterGroup::from_string("A1xA2"));
  expect_cuts_match_extreme_rays<QSqrt5>(CoxeterGroup::from_string("H3"));
  expect_cuts_match_extreme_rays<QSqrt5>(CoxeterGroup::from_string("I2(5)"));
}

TEST(Cuts, ParabolicSubarrangementsAreNotCutFromOutside) {
  for (const char* t : {"A3", "B3"}) {
    const auto g = CoxeterGroup::from_string(t);
    ShardStructure sh(g.weak_order());
    for (std::uint32_t m = 0; m < (1u << g.rank()); ++m) {
      const HyperSet ak = g.parabolic_roots(m);
      for (int h = 0; h < g.num_positive_roots(); ++h)
        for (int h2 = 0; h2 < g.num_positive_roots(); ++h2)
          EXPECT_FALSE(!ak[h] && ak[h2] && sh.cuts(h, h2)) << t;
    }
  }
}

TEST(ShardOfCover, Examples) {
  const auto a2 = CoxeterGroup::from_string("A2");
  const auto w2 = a2.weak_order();
  ShardStructure sh2(w2);
  for (int s = 0; s < 2; ++s) {
    const int c = w2->cover_between(a2.identity(), a2.simple(s));
    EXPECT_EQ(sh2.shard(sh2.shard_of_cover(c)).ji, a2.simple(s));
  }
  const int s1s2 = a2.from_word({0, 1});
  const int c = w2->cover_between(s1s2, a2.longest());
  EXPECT_EQ(w2->cover(c).hyperplane, root_index(a2, {0, 1}));
  EXPECT_EQ(sh2.shard(sh2.shard_of_cover(c)).ji, a2.simple(1));

  const auto g = CoxeterGroup::from_string("A3");
  ShardStructure sh(g.weak_order());
  std::set<std::string> got;
  for (int s : sh.lower_shards(g.from_permutation_string("4312"))) got.insert(g.permutation_string(sh.shard(s).ji));
  EXPECT_EQ(got, (std::set<std::string>{"3124", "1243"}));
}

TEST(ShardOfCover, CountsAndBijectionWithJoinIrreducibles) {
  const std::vector<std::tuple<const char*, int, int>> cases{
      {"A1", 1, 1}, {"A2", 4, 6}, {"A3", 11, 36}, {"I2(5)", 8, 10}, {"B3", 23, 72}, {"A1xA1", 2, 4}};
  for (const auto& [t, shards, covers] : cases) {
    const auto g = CoxeterGroup::from_string(t);
    const auto w = g.weak_order();
    ShardStructure sh(w);
    EXPECT_EQ(sh.size(), shards) << t;
    EXPECT_EQ(static_cast<int>(w->covers().size()), covers) << t;
    EXPECT_EQ(sh.size(), static_cast<int>(w->join_irreducibles().size())) << t;
    for (int s = 0; s < sh.size(); ++s) {
      const auto& shard = sh.shard(s);
      for (int c : shard.covers) EXPECT_EQ(w->cover(c).hyperplane, shard.hyperplane) << t;
      const auto up = sh.upper_regions(s);
      EXPECT_EQ(up.front(), shard.ji) << t;
      for (int u : up) EXPECT_TRUE(w->leq(shard.ji, u)) << t;
    }
  }
}

TEST(ShardOfCover, GeometricPartitionAgrees) {
  for (const char* t : {"A1", "A2", "A3", "B3", "A1xA2", "G2"}) {
    const auto g = CoxeterGroup::from_string(t);
    auto sh = std::make_shared<ShardStructure>(g.weak_order());
    ShardGeometry<Rational> geo(g, sh);
    EXPECT_TRUE(geo.partition_agrees()) << t;
    EXPECT_EQ(geo.num_geometric_shards(), sh->size()) << t;
  }
  for (const char* t : {"I2(5)", "H3"}) {
    const auto g = CoxeterGroup::from_string(t);
    auto sh = std::make_shared<ShardStructure>(g.weak_order());
    ShardGeometry<QSqrt5> geo(g, sh);
    EXPECT_TRUE(geo.partition_agrees()) << t;
    EXPECT_EQ(geo.num_geometric_shards(), sh->size()) << t;
  }
}

TEST(ShardOfCover, A1SignVectorIsEmpty) {
  const auto g = CoxeterGroup::from_string("A1");
  auto sh = std::make_shared<ShardStructure>(g.weak_order());
  ShardGeometry<Rational> geo(g, sh);
  EXPECT_EQ(geo.num_geometric_shards(), 1);
  EXPECT_TRUE(sh->cutting_hyperplanes(0).none());
}

TEST(ShardCounts, PerHyperplane) {
  const auto g = CoxeterGroup::from_string("A3");
  ShardStructure sh(g.weak_order());
  for (int s = 0; s < 3; ++s) EXPECT_EQ(sh.shard_count_on(s), 1);
  EXPECT_EQ(sh.shard_count_on(root_index(g, {1, 1, 0})), 2);
  EXPECT_EQ(sh.shard_count_on(root_index(g, {1, 1, 1})), 4);
}

TEST(ShardCounts, WholeAndHalfHyperplanes) {
  // one shard on each basic hyperplane, two on each non-basic hyperplane of a rank-two standard parabolic
  for (const char* t : {"A3", "B3", "H3", "D4"}) {
    const auto g = CoxeterGroup::from_string(t);
    ShardStructure sh(g.weak_order());
    for (int h = 0; h < g.num_positive_roots(); ++h) {
      const int n = sh.shard_count_on(h);
      if (h < g.rank()) EXPECT_EQ(n, 1) << t;
      else EXPECT_GE(n, 2) << t;
    }
    for (int i = 0; i < g.rank(); ++i)
      for (int j = i + 1; j < g.rank(); ++j)
        for_each_bit(g.parabolic_roots((1u << i) | (1u << j)), [&](int h) {
          if (h >= g.rank()) {
            EXPECT_EQ(sh.shard_count_on(h), 2) << t;
          }
        });
  }
}

TEST(UpperRegions, Examples) {
  const auto g = CoxeterGroup::from_string("A3");
  const auto w = g.weak_order();
  ShardStructure sh(w);
  for (int s = 0; s < 3; ++s) {
    const int k = sh.shard_of_ji(g.simple(s));
    std::vector<int> expect;
    for (int x = 0; x < g.size(); ++x)
      if (w->lower_hyperplanes(x)[s]) expect.push_back(x);
    EXPECT_EQ(sh.upper_regions(k), expect);
  }
  const int k = sh.shard_of_ji(g.from_permutation_string("3124"));
  EXPECT_EQ(sh.upper_regions(k).front(), g.from_permutation_string("3124"));

  // each non-basic shard of I2(5) is a half-line crossed by exactly one cover
  const auto i25 = CoxeterGroup::from_string("I2(5)");
  ShardStructure sh5(i25.weak_order());
  for (int s = 0; s < sh5.size(); ++s) {
    const bool basic = sh5.shard(s).hyperplane < 2;
    EXPECT_EQ(sh5.upper_regions(s).size(), basic ? 2u : 1u);
  }
}

TEST(Depth, Examples) {
  const auto a2 = CoxeterGroup::from_string("A2");
  ShardStructure sh2(a2.weak_order());
  EXPECT_EQ(sh2.depth(0), 1);
  EXPECT_EQ(sh2.depth(root_index(a2, {1, 1})), 2);
  const auto a3 = CoxeterGroup::from_string("A3");
  ShardStructure sh3(a3.weak_order());
  EXPECT_EQ(sh3.depth(root_index(a3, {1, 1, 1})), 3);
}

TEST(Depth, NonBasicHyperplanesSitAboveShallowerBasics) {
  for (const char* t : {"A3", "B3"}) {
    const auto g = CoxeterGroup::from_string(t);
    ShardStructure sh(g.weak_order());
    for (int h = g.rank(); h < g.num_positive_roots(); ++h) {
      bool found = false;
      for (std::size_t f = 0; f < sh.rank_two_flats().size() && !found; ++f) {
        if (!sh.rank_two_flats()[f][h] || sh.basic_of_flat(f)[h]) continue;
        bool shallower = true;
        for_each_bit(sh.basic_of_flat(f), [&](int b) { shallower = shallower && sh.depth(b) < sh.depth(h); });
        found = shallower;
      }
      EXPECT_TRUE(found) << t << " " << h;
    }
  }
}

TEST(ShardDigraph, ProductHasNoArrows) {
  const auto g = CoxeterGroup::from_string("A1xA1");
  ShardStructure sh(g.weak_order());
  const auto d = sh.digraph();
  EXPECT_TRUE(d.arrows.empty());
  EXPECT_TRUE(d.acyclic);
}

TEST(ShardDigraph, DihedralFiveArrowsGoFromBasicToNonBasic) {
  const auto g = CoxeterGroup::from_string("I2(5)");
  ShardStructure sh(g.weak_order());
  const auto d = sh.digraph();
  for (auto [a, b] : d.arrows) {
    EXPECT_LT(sh.shard(a).hyperplane, 2);
    EXPECT_GE(sh.shard(b).hyperplane, 2);
  }
  EXPECT_EQ(d.arrows.size(), 12u);
  EXPECT_TRUE(d.acyclic);
}

TEST(ShardDigraph, S4Levels) {
  const auto g = CoxeterGroup::from_string("A3");
  ShardStructure sh(g.weak_order());
  const auto d = sh.digraph();
  ASSERT_TRUE(d.acyclic);
  auto id = [&](const char* p) { return sh.shard_of_ji(g.from_permutation_string(p)); };
  const std::vector<int> top{id("2134"), id("1324"), id("1243")};
  const std::vector<int> mid{id("2314"), id("3124"), id("1342"), id("1423")};
  const std::vector<int> bottom{id("2341"), id("2413"), id("3412"), id("4123")};
  // levels of the reachability order, arrows pointing down
  Poset reach = Poset::from_relation(sh.size(), [&](int a, int b) { return d.reaches(b, a); });
  std::vector<int> level(sh.size(), 0);
  for (int x : reach.linear_extension())
    for (int y : reach.lower_covers(x)) level[x] = std::max(level[x], level[y] + 1);
  for (int s : top) EXPECT_EQ(level[s], 2);
  for (int s : mid) EXPECT_EQ(level[s], 1);
  for (int s : bottom) EXPECT_EQ(level[s], 0);
  // arrows are the covers of the reachability order plus eight long arrows
  std::set<std::pair<int, int>> covers, extra;
  for (int a = 0; a < sh.size(); ++a)
    for (int b : reach.lower_covers(a)) covers.emplace(a, b);
  for (auto arrow : d.arrows)
    if (!covers.count(arrow)) extra.insert(arrow);
  std::set<std::pair<int, int>> expect;
  for (int s : {id("2134"), id("1243")})
    for (int b : bottom) expect.emplace(s, b);
  EXPECT_EQ(extra, expect);
  for (auto c : covers) EXPECT_TRUE(std::count(d.arrows.begin(), d.arrows.end(), c));
}

TEST(ShardDigraph, ArrowsRequireCuttingAndAreAcyclic) {
  for (const char* t : {"A3", "B3", "H3", "I2(8)", "A4"}) {
    const auto b = GroupBundle::build(t);
    EXPECT_TRUE(b.digraph.acyclic) << t;
    for (auto [x, y] : b.digraph.arrows)
      EXPECT_TRUE(b.shards->cuts(b.shards->shard(x).hyperplane, b.shards->shard(y).hyperplane)) << t;
  }
}

TEST(ShardNegation, IsAnInvolution) {
  for (const char* t : {"A2", "A3", "B3"}) {
    const auto g = CoxeterGroup::from_string(t);
    auto sh = std::make_shared<ShardStructure>(g.weak_order());
    ShardGeometry<Rational> geo(g, sh);
    const auto neg = geo.negation_map();
    ASSERT_EQ(static_cast<int>(neg.size()), sh->size());
    for (int s = 0; s < sh->size(); ++s) {
      EXPECT_EQ(neg[neg[s]], s) << t;
      EXPECT_EQ(sh->shard(neg[s]).hyperplane, sh->shard(s).hyperplane) << t;
    }
  }
}

TEST(NonCoxeterArrangement, RankTwoPencilShards) {
  // four lines at unequal angles: two whole basic shards and two half-line shards per other line
  std::vector<Vec<Rational>> normals{{Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                                     {Rational(1), Rational(1)}, {Rational(1), Rational(3)}};
  const auto a = ingest_arrangement(normals, Vec<Rational>{Rational(1), Rational(1)});
  const auto w = a.weak_order();
  EXPECT_EQ(w->size(), 8);
  ShardStructure sh(w);
  EXPECT_EQ(sh.size(), 6);
  EXPECT_EQ(sh.size(), static_cast<int>(w->join_irreducibles().size()));
  EXPECT_TRUE(sh.digraph().acyclic);
}

TEST(NonCoxeterArrangement, SevenPlanesShardsMatchJoinIrreducibles) {
  std::vector<Vec<Rational>> normals;
  for (int m = 1; m < 8; ++m) normals.push_back({Rational(m & 1), Rational(m >> 1 & 1), Rational(m >> 2 & 1)});
  const auto a = ingest_arrangement(normals, Vec<Rational>{Rational(1), Rational(2), Rational(4)});
  const auto w = a.weak_order();
  ASSERT_TRUE(w->poset().is_lattice());
  ShardStructure sh(w);
  EXPECT_EQ(sh.size(), static_cast<int>(w->join_irreducibles().size()));
  for (int c = 0; c < static_cast<int>(w->covers().size()); ++c) {
    const auto& cv = w->cover(c);
    EXPECT_EQ(w->minimal_region_with(cv.upper, cv.hyperplane), w->minimal_region_with_scan(cv.upper, cv.hyperplane));
  }
  const auto d = sh.digraph();
  for (auto [x, y] : d.arrows) EXPECT_TRUE(sh.cuts(sh.shard(x).hyperplane, sh.shard(y).hyperplane));
}
