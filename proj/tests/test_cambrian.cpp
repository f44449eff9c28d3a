#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "oracles.hpp"
#include "shardlab/cambrian.hpp"
#include "shardlab/pipeline.hpp"

using namespace shardlab;

namespace {

const std::vector<const char*> kCambrianTypes{"A2",    "A3",    "B2",    "B3",    "I2(3)", "I2(4)",
                                              "I2(5)", "I2(6)", "I2(7)", "I2(8)"};

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Every reduced word of a Coxeter element, by commuting adjacent letters.
std::set<std::vector<int>> commutation_class(const CoxeterGroup& g, int c) {
  std::set<std::vector<int>> seen{g.word(c)};
  std::vector<std::vector<int>> queue{g.word(c)};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (std::size_t i = 0; i + 1 < queue[h].size(); ++i)
      if (g.coxeter_m(queue[h][i], queue[h][i + 1]) == 2) {
        auto w = queue[h];
        std::swap(w[i], w[i + 1]);
        if (seen.insert(w).second) queue.push_back(w);
      }
  return seen;
}

// Elements of [e, c] lying in no proper standard parabolic subgroup, via subgroup enumeration.
int full_support_count(const CoxeterGroup& g, const std::vector<int>& nc) {
  std::set<int> in_proper;
  for (std::uint32_t m = 0; m + 1 < (1u << g.rank()); ++m)
    for (int u : g.standard_parabolic(m)) in_proper.insert(u);
  int n = 0;
  for (int u : nc) n += !in_proper.count(u);
  return n;
}

}  // namespace

TEST(CambrianGenerators, Examples) {
  const auto a11 = GroupBundle::build("A1xA1");
  const auto cd = cambrian_congruence(a11.g(), a11.shards, a11.digraph, {0, 1});
  EXPECT_TRUE(cd.generators.empty());
  EXPECT_EQ(cd.sortables.size(), 4u);

  const auto a3 = GroupBundle::build("A3");
  const auto& g = a3.g();
  const auto s4 = cambrian_congruence(g, a3.shards, a3.digraph, {0, 2, 1});
  EXPECT_EQ(g.permutation_string(s4.c), "2413");
  EXPECT_EQ(as_set(s4.generators), as_set({g.from_permutation_string("3124"), g.from_permutation_string("1342")}));
  EXPECT_EQ(s4.sortables.size(), 14u);
}

TEST(CambrianGenerators, H3Example) {
  // q, r, s, t are generators 0, 1, 2, 3 with m(q, r) = 5
  const auto g = CoxeterGroup::from_string("H3");
  ASSERT_EQ(g.coxeter_m(0, 1), 5);
  const int q = 0, r = 1, s = 2;
  const auto gens = cambrian_generators(g, {r, q, s});
  EXPECT_EQ(as_set(gens), as_set({g.from_word({q, r}), g.from_word({q, r, q}), g.from_word({q, r, q, r}),
                                  g.from_word({s, r})}));
}

TEST(CambrianGenerators, H4Example) {
  const auto g = CoxeterGroup::from_string("H4");
  ASSERT_EQ(g.coxeter_m(0, 1), 5);
  ASSERT_EQ(g.coxeter_m(1, 3), 2);
  const int q = 0, r = 1, s = 2, t = 3;
  const auto gens = cambrian_generators(g, {r, q, t, s});
  EXPECT_EQ(as_set(gens), as_set({g.from_word({q, r}), g.from_word({q, r, q}), g.from_word({q, r, q, r}),
                                  g.from_word({s, r}), g.from_word({s, t})}));
}

TEST(Sortables, S4PatternAvoidance) {
  const auto b = GroupBundle::build("A3");
  const auto& g = b.g();
  const auto cd = cambrian_congruence(g, b.shards, b.digraph, {0, 2, 1});
  std::set<int> avoiding;
  for (int w = 0; w < g.size(); ++w)
    if (avoids_s4_bipartite_patterns(g.to_permutation(w))) avoiding.insert(w);
  EXPECT_EQ(as_set(cd.sortables), avoiding);
  EXPECT_TRUE(avoids_s4_bipartite_patterns({1, 2, 3, 4}));
  EXPECT_FALSE(avoids_s4_bipartite_patterns({3, 1, 2, 4}));
  EXPECT_FALSE(std::count(cd.sortables.begin(), cd.sortables.end(), g.from_permutation_string("3124")));
}

TEST(Sortables, CountsEqualNoncrossingCounts) {
  const std::map<std::string, int> expect{{"A2", 5}, {"A3", 14}, {"B2", 6}, {"B3", 20}};
  std::vector<const char*> types = kCambrianTypes;
  types.insert(types.end(), {"A1", "A1xA1", "A1xA2", "G2", "H3", "A4"});
  for (const char* t : types) {
    const auto b = GroupBundle::build(t);
    for (const auto& ord : oracle::orderings(b.g().rank())) {
      const auto cd = cambrian_congruence(b.g(), b.shards, b.digraph, ord);
      const auto nc = oracle::noncrossing_elements(b.g(), cd.c);
      EXPECT_EQ(cd.sortables.size(), nc.size()) << t;
      EXPECT_EQ(NCLattice(b.g(), cd.c).elements(), nc) << t;
      if (expect.count(t)) {
        EXPECT_EQ(static_cast<int>(nc.size()), expect.at(t)) << t;
      }
    }
  }
  for (int m = 3; m <= 8; ++m) {
    const auto b = GroupBundle::build("I2(" + std::to_string(m) + ")");
    EXPECT_EQ(cambrian_congruence(b.g(), b.shards, b.digraph, {0, 1}).sortables.size(), std::size_t(m + 2));
  }
}

TEST(Sortables, OneUnremovedShardPerHyperplane) {
  std::vector<const char*> types = kCambrianTypes;
  types.insert(types.end(), {"A1xA2", "H3", "A4", "D4"});
  for (const char* t : types) {
    const auto b = GroupBundle::build(t);
    for (const auto& ord : oracle::orderings(b.g().rank())) {
      const auto cd = cambrian_congruence(b.g(), b.shards, b.digraph, ord);
      std::vector<int> kept(b.g().num_positive_roots(), 0);
      for (int s = 0; s < b.shards->size(); ++s)
        if (!cd.theta.is_removed(s)) ++kept[b.shards->shard(s).hyperplane];
      for (int k : kept) EXPECT_EQ(k, 1) << t;
    }
  }
}

TEST(NCLattice, Examples) {
  const auto a1 = CoxeterGroup::from_string("A1");
  const NCLattice n1(a1, a1.simple(0));
  EXPECT_EQ(n1.size(), 2);
  EXPECT_EQ(n1.mobius_direct(), -1);
  const auto a2 = CoxeterGroup::from_string("A2");
  const NCLattice n2(a2, a2.coxeter_element({0, 1}));
  EXPECT_EQ(n2.size(), 5);
  EXPECT_EQ(n2.rank_sizes(), (std::vector<int>{1, 3, 1}));
  EXPECT_EQ(n2.mobius_direct(), 2);
  const auto a3 = CoxeterGroup::from_string("A3");
  const NCLattice n3(a3, a3.coxeter_element({0, 1, 2}));
  EXPECT_EQ(n3.size(), 14);
  EXPECT_EQ(n3.rank_sizes(), (std::vector<int>{1, 6, 6, 1}));
}

TEST(NCLattice, LatticeGradedSelfDual) {
  std::vector<const char*> types = kCambrianTypes;
  types.insert(types.end(), {"A1xA2", "H3", "D4"});
  for (const char* t : types) {
    const auto g = CoxeterGroup::from_string(t);
    const auto rl = oracle::reflection_length(g);
    for (const auto& ord : oracle::orderings(g.rank())) {
      const NCLattice nc(g, g.coxeter_element(ord));
      EXPECT_TRUE(nc.poset().is_lattice()) << t;
      EXPECT_TRUE(nc.poset().is_graded()) << t;
      EXPECT_TRUE(nc.fix_is_injective()) << t;
      EXPECT_TRUE(nc.kreweras_is_anti_automorphism(g)) << t;
      for (int i = 0; i < nc.size(); ++i) EXPECT_EQ(nc.rank(i), rl[nc.elements()[i]]) << t;
    }
  }
}

TEST(NCLattice, MobiusEqualsSignedFullSupportCount) {
  std::vector<const char*> types = kCambrianTypes;
  types.insert(types.end(), {"A1", "A1xA2", "H3", "A4"});
  for (const char* t : types) {
    const auto g = CoxeterGroup::from_string(t);
    for (const auto& ord : oracle::orderings(g.rank())) {
      const NCLattice nc(g, g.coxeter_element(ord));
      const int n = full_support_count(g, nc.elements());
      const std::int64_t signed_count = g.rank() % 2 ? -n : n;
      EXPECT_EQ(nc.mobius_direct(), signed_count) << t;
      EXPECT_EQ(nc.mobius_by_support(g), signed_count) << t;
    }
  }
  const auto a3 = CoxeterGroup::from_string("A3");
  EXPECT_EQ(NCLattice(a3, a3.coxeter_element({0, 1, 2})).mobius_direct(), -5);
}

TEST(NCLattice, IsomorphismTypeIndependentOfCoxeterElement) {
  for (const char* t : {"A3", "B3"}) {
    const auto g = CoxeterGroup::from_string(t);
    const NCLattice first(g, g.coxeter_element({0, 1, 2}));
    for (const auto& ord : oracle::orderings(g.rank()))
      EXPECT_TRUE(oracle::isomorphic(first.poset(), NCLattice(g, g.coxeter_element(ord)).poset())) << t;
  }
}

TEST(NcMap, Examples) {
  const auto b = GroupBundle::build("A3");
  const auto& g = b.g();
  for (const auto& ord : oracle::orderings(3)) {
    const auto cd = cambrian_congruence(g, b.shards, b.digraph, ord);
    const NCLattice nc(g, cd.c);
    EXPECT_EQ(nc_map(g, nc, g.identity()), g.identity());
    EXPECT_EQ(nc_map(g, nc, g.longest()), cd.c);
    for (int s = 0; s < 3; ++s) EXPECT_EQ(nc_map(g, nc, g.simple(s)), g.simple(s));
  }
}

TEST(NcMap, IsomorphismForEveryCoxeterElement) {
  std::vector<const char*> types = kCambrianTypes;
  types.insert(types.end(), {"A1", "A1xA2", "H3", "A4"});
  for (const char* t : types) {
    const auto b = GroupBundle::build(t);
    for (const auto& ord : oracle::orderings(b.g().rank())) {
      const auto cd = cambrian_congruence(b.g(), b.shards, b.digraph, ord);
      const NCLattice nc(b.g(), cd.c);
      const auto rep = verify_isomorphism(b.g(), *b.order, cd, nc);
      EXPECT_TRUE(rep.all()) << t << " " << b.g().word_string(cd.c) << " "
                             << (rep.failures.empty() ? "" : rep.failures.front());
    }
  }
}

TEST(InitialFinal, MatchCommutationClass) {
  for (const char* t : {"A3", "B3", "A4", "D4", "A1xA2"}) {
    const auto g = CoxeterGroup::from_string(t);
    for (const auto& ord : oracle::orderings(g.rank())) {
      const int c = g.coxeter_element(ord);
      const auto words = commutation_class(g, c);
      for (int s = 0; s < g.rank(); ++s) {
        bool first = false, last = false;
        for (const auto& w : words) first |= w.front() == s, last |= w.back() == s;
        EXPECT_EQ(is_initial(g, c, s), first) << t;
        EXPECT_EQ(is_final(g, c, s), last) << t;
      }
      bool bip = true;
      for (int s = 0; s < g.rank(); ++s) bip = bip && (is_initial(g, c, s) || is_final(g, c, s));
      EXPECT_EQ(is_bipartite(g, c), bip) << t;
    }
  }
  const auto a3 = CoxeterGroup::from_string("A3");
  EXPECT_TRUE(is_bipartite(a3, a3.coxeter_element({0, 2, 1})));
  EXPECT_FALSE(is_bipartite(a3, a3.coxeter_element({0, 1, 2})));
  const auto a2 = CoxeterGroup::from_string("A2");
  EXPECT_TRUE(is_bipartite(a2, a2.coxeter_element({0, 1})));
}
