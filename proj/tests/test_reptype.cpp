#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "eiq/random_category.hpp"
#include "eiq/reptype.hpp"
#include "support.hpp"

using namespace eiq;
using namespace eiq::testing;

namespace {

Multigraph graph(std::size_t n, std::vector<MultiEdge> edges) { return {n, std::move(edges)}; }

Multigraph path(std::size_t n) {
  Multigraph g{n, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, 1});
  return g;
}

// Centre 0 with arms of the given lengths.
Multigraph star(const std::vector<std::size_t>& arms) {
  Multigraph g{1, {}};
  for (std::size_t len : arms) {
    std::size_t prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      g.edges.push_back({prev, g.vertices, 1});
      prev = g.vertices++;
    }
  }
  return g;
}

Multigraph cycle(std::size_t n) {
  Multigraph g = path(n);
  g.edges.push_back({n - 1, 0, 1});
  return g;
}

std::string single_type(const Multigraph& g) {
  const auto comps = classify_graph(g);
  EXPECT_EQ(comps.size(), 1u);
  return comps.empty() ? "" : comps.front().type;
}

std::vector<std::string> types(const Multigraph& g) {
  std::vector<std::string> out;
  for (const auto& c : classify_graph(g)) out.push_back(c.type);
  std::sort(out.begin(), out.end());
  return out;
}

Verdict verdict_of(const std::string& fixture) {
  const auto cat = load_fixture(fixture);
  auto tables = tables_for(cat);
  return rep_type(cat, tables).verdict;
}

bool has_rule(const std::vector<Certificate>& certs, const std::string& rule) {
  return std::any_of(certs.begin(), certs.end(), [&](const Certificate& c) { return c.rule == rule; });
}

}  // namespace

TEST(ClassifyGraph, DynkinShapes) {
  EXPECT_EQ(single_type(path(1)), "A1");
  EXPECT_EQ(single_type(path(5)), "A5");
  EXPECT_EQ(single_type(star({1, 1, 1})), "D4");
  EXPECT_EQ(single_type(star({1, 1, 4})), "D7");
  EXPECT_EQ(single_type(star({1, 2, 2})), "E6");
  EXPECT_EQ(single_type(star({1, 2, 3})), "E7");
  EXPECT_EQ(single_type(star({1, 2, 4})), "E8");
  for (const auto& c : classify_graph(star({1, 2, 4}))) EXPECT_EQ(c.kind, GraphKind::Dynkin);
}

TEST(ClassifyGraph, EuclideanShapes) {
  EXPECT_EQ(single_type(graph(2, {{0, 1, 2}})), "~A1");
  EXPECT_EQ(single_type(graph(1, {{0, 0, 1}})), "~A0");
  EXPECT_EQ(single_type(cycle(3)), "~A2");
  EXPECT_EQ(single_type(cycle(6)), "~A5");
  EXPECT_EQ(single_type(star({1, 1, 1, 1})), "~D4");
  EXPECT_EQ(single_type(star({2, 2, 2})), "~E6");
  EXPECT_EQ(single_type(star({1, 3, 3})), "~E7");
  EXPECT_EQ(single_type(star({1, 2, 5})), "~E8");
  // Two branch points joined by a path: ~D6.
  Multigraph d6{7, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}, {4, 5, 1}, {4, 6, 1}}};
  EXPECT_EQ(single_type(d6), "~D6");
  for (const auto& c : classify_graph(d6)) EXPECT_EQ(c.kind, GraphKind::Euclidean);
}

TEST(ClassifyGraph, WildShapes) {
  for (const auto& g : {graph(2, {{0, 1, 3}}), star({2, 2, 3}), star({1, 1, 1, 1, 1}), star({1, 2, 6}),
                        graph(3, {{0, 1, 2}, {1, 2, 1}}), graph(1, {{0, 0, 2}}),
                        Multigraph{8, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}, {4, 5, 1}, {4, 6, 1}, {6, 7, 1}}}}) {
    const auto comps = classify_graph(g);
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].kind, GraphKind::Wild) << comps[0].type;
  }
}

TEST(ClassifyGraph, ComponentsAndVerdict) {
  // A2, an isolated vertex and ~A1.
  const Multigraph g{5, {{0, 1, 1}, {3, 4, 2}}};
  const auto comps = classify_graph(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].type, "A2");
  EXPECT_EQ(comps[1].type, "A1");
  EXPECT_EQ(comps[1].vertices, (std::vector<std::size_t>{2}));
  EXPECT_EQ(comps[2].type, "~A1");
  EXPECT_EQ(graph_verdict(comps), Verdict::Tame);
  EXPECT_EQ(graph_verdict(classify_graph(path(4))), Verdict::Finite);
  EXPECT_EQ(graph_verdict(classify_graph(Multigraph{4, {{0, 1, 1}, {2, 3, 3}}})), Verdict::Wild);
}

TEST(ClassifyGraph, InvariantUnderRelabeling) {
  Rng rng(808);
  const std::vector<Multigraph> shapes{path(6), star({1, 2, 3}), star({2, 2, 2}), cycle(5), star({1, 1, 1, 1, 1}),
                                       Multigraph{6, {{0, 1, 1}, {2, 3, 2}, {4, 5, 1}}}};
  for (const auto& g : shapes) {
    const auto expected = types(g);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::size_t> perm(g.vertices);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Multigraph h{g.vertices, {}};
      for (const auto& e : g.edges) {
        if (rng() % 2) h.edges.push_back({perm[e.v], perm[e.u], e.mult});
        else h.edges.push_back({perm[e.u], perm[e.v], e.mult});
      }
      std::shuffle(h.edges.begin(), h.edges.end(), rng);
      EXPECT_EQ(types(h), expected);
    }
  }
}

TEST(RepType, FixtureVerdicts) {
  EXPECT_EQ(verdict_of("example_4_3.json"), Verdict::Finite);
  EXPECT_EQ(verdict_of("example_4_4.json"), Verdict::Finite);
  EXPECT_EQ(verdict_of("example_2_10.json"), Verdict::Finite);
  EXPECT_EQ(verdict_of("example_2_14.json"), Verdict::Finite);
  EXPECT_EQ(verdict_of("example_6_6.json"), Verdict::Wild);
  EXPECT_EQ(verdict_of("example_2_11_minus_g.json"), Verdict::InfiniteUncertified);
  // The cover of this non-free category is tame, which decides nothing.
  EXPECT_EQ(verdict_of("example_2_10_minus_beta.json"), Verdict::Unknown);
}

TEST(RepType, Example44IsDynkinA5) {
  const auto cat = load_fixture("example_4_4.json");
  auto tables = tables_for(cat);
  const auto v = rep_type(cat, tables);
  ASSERT_EQ(v.components.size(), 1u);
  EXPECT_EQ(v.components[0].type, "A5");
  EXPECT_EQ(describe(v.components), "Dynkin A5");
  EXPECT_TRUE(has_rule(v.certificates, "hereditary"));
}

TEST(RepType, Example43Components) {
  const auto cat = load_fixture("example_4_3.json");
  auto tables = tables_for(cat);
  const auto v = rep_type(cat, tables);
  std::vector<std::string> got;
  for (const auto& c : v.components) got.push_back(c.type);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"A1", "A1", "A2", "A3", "D4"}));
}

TEST(RepType, Hereditary) {
  EXPECT_TRUE(is_hereditary(load_fixture("example_4_4.json"), 13));
  EXPECT_TRUE(is_hereditary(load_fixture("example_4_3.json"), 13));
  EXPECT_FALSE(is_hereditary(load_fixture("example_2_14.json"), 2));
  EXPECT_FALSE(is_hereditary(load_fixture("example_4_4.json"), 3));
  EXPECT_FALSE(is_hereditary(load_fixture("example_2_11_minus_g.json"), 13));
}

TEST(Screens, FixtureCertificates) {
  {
    const auto cat = load_fixture("example_2_11_minus_g.json");
    auto tables = tables_for(cat);
    const auto certs = screen_two_object(cat, tables);
    ASSERT_TRUE(has_rule(certs, "multiple-orbits"));
    EXPECT_EQ(certs.front().pair, std::make_pair(cat.object_index("y"), cat.object_index("z")));
  }
  {
    const auto cat = load_fixture("example_4_4.json");
    auto tables = tables_for(cat);
    EXPECT_TRUE(screen_two_object(cat, tables).empty());
  }
  {
    const auto cat = load_fixture("example_6_6.json");
    auto tables = tables_for(cat);
    EXPECT_TRUE(has_rule(screen_two_object(cat, tables), "induced-not-multiplicity-free"));
  }
}

TEST(Screens, NeitherSideTransitive) {
  // Hom(x, y) = C2 x C2 with each group acting on its own factor.
  CategoryData d;
  d.objects.push_back({"x", cyclic(2)});
  d.objects.push_back({"y", cyclic(2)});
  d.homs.push_back({0, 1, 4, {{2, 3, 0, 1}}, {{1, 0, 3, 2}}});
  const auto cat = EICategory::build(d);
  auto tables = tables_for(cat);
  const auto certs = screen_two_object(cat, tables);
  EXPECT_TRUE(has_rule(certs, "neither-side-transitive"));
  const auto v = rep_type(cat, tables);
  EXPECT_NE(v.verdict, Verdict::Finite);
  EXPECT_NE(v.verdict, Verdict::Unknown);
}

// A category is no tamer than any of its full subcategories.
TEST(RepType, ConsistentWithTwoObjectSubcategories) {
  Rng rng(909);
  RandomCategoryOptions opts;
  opts.min_objects = 2;
  opts.max_objects = 4;
  opts.max_morphisms = 150;
  std::size_t screened = 0;
  for (int i = 0; i < 40; ++i) {
    const auto cat = random_free_category(rng, opts);
    auto tables = tables_for(cat);
    const auto v = rep_type(cat, tables);
    ASSERT_NE(v.verdict, Verdict::Unknown);
    EXPECT_TRUE(has_rule(v.certificates, "hereditary"));
    const auto certs = screen_two_object(cat, tables);
    screened += !certs.empty();
    if (!certs.empty()) {
      EXPECT_NE(v.verdict, Verdict::Finite);
    }
    if (v.verdict != Verdict::Finite) continue;
    for (std::size_t x = 0; x < cat.object_count(); ++x) {
      for (std::size_t y = 0; y < cat.object_count(); ++y) {
        if (x == y || cat.hom_size(x, y) == 0) continue;
        const auto sub = full_subcategory(cat, {x, y});
        auto sub_tables = tables_for(sub);
        EXPECT_EQ(rep_type(sub, sub_tables).verdict, Verdict::Finite);
      }
    }
  }
  EXPECT_GT(screened, 0u);
}
