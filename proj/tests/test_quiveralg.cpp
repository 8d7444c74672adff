#include <gtest/gtest.h>

#include <map>

#include "eiq/document.hpp"
#include "eiq/quiveralg.hpp"
#include "eiq/random_category.hpp"
#include "support.hpp"

using namespace eiq;
using namespace eiq::testing;

namespace {

struct Built {
  EICategory cat;
  CharTableCache tables;
  OrdinaryQuiver q;
};

Built build(const std::string& fixture) {
  auto cat = load_fixture(fixture);
  auto tables = tables_for(cat);
  auto q = build_quiver(cat, tables);
  return {std::move(cat), std::move(tables), std::move(q)};
}

std::map<std::string, std::size_t> named_arrows(const OrdinaryQuiver& q) {
  std::map<std::string, std::size_t> out;
  for (const auto& a : q.arrows) out[q.vertex_name(a.from) + " -> " + q.vertex_name(a.to)] = a.mult;
  return out;
}

std::map<std::string, std::size_t> golden_arrows(const std::string& name) {
  const json g = read_json_file(fixture_path("golden/" + name + ".quiver.json"));
  std::map<std::string, std::size_t> out;
  for (const auto& a : g.at("arrows")) {
    out[a.at("source").get<std::string>() + " -> " + a.at("target").get<std::string>()] = a.at("mult").get<std::size_t>();
  }
  return out;
}

}  // namespace

TEST(Quiver, MatchesGoldens) {
  for (const char* name : {"example_2_10", "example_2_14", "example_4_3", "example_4_4", "example_6_6"}) {
    SCOPED_TRACE(name);
    const auto b = build(std::string(name) + ".json");
    EXPECT_EQ(named_arrows(b.q), golden_arrows(name));
    const json g = read_json_file(fixture_path(std::string("golden/") + name + ".quiver.json"));
    std::size_t vertices = 0;
    for (const auto& [obj, n] : g.at("vertex_counts").items()) vertices += n.get<std::size_t>();
    EXPECT_EQ(b.q.vertices.size(), vertices);
  }
}

TEST(Quiver, Example44Dimensions) {
  const auto b = build("example_4_4.json");
  ASSERT_EQ(b.q.vertices.size(), 5u);
  EXPECT_EQ(b.q.vertices[vertex_named(b.q, "y:X2")].dim, 2u);
  EXPECT_EQ(b.q.vertices[vertex_named(b.q, "x:X1")].dim, 1u);
  EXPECT_EQ(b.q.vertex(1, 0), vertex_named(b.q, "y:X0"));
}

TEST(Quiver, DoubleArrowInExample66) {
  const auto b = build("example_6_6.json");
  const auto arrows = named_arrows(b.q);
  EXPECT_EQ(arrows.at("x:X0 -> y:X2"), 2u);
}

TEST(Quiver, ProvenanceAccountsForMultiplicity) {
  for (const char* name : {"example_4_3.json", "example_4_4.json", "example_6_6.json"}) {
    const auto b = build(name);
    for (const auto& a : b.q.arrows) {
      std::size_t total = 0;
      for (const auto& p : a.provenance) {
        total += p.e * p.f;
        EXPECT_EQ(b.q.vertices[a.from].object, p.alpha.source);
        EXPECT_EQ(b.q.vertices[a.to].object, p.alpha.target);
      }
      EXPECT_EQ(total, a.mult);
    }
  }
}

TEST(Quiver, VertexCountIsNumberOfClasses) {
  Rng rng(606);
  for (int i = 0; i < 20; ++i) {
    const auto cat = random_free_category(rng);
    auto tables = tables_for(cat);
    const auto q = build_quiver(cat, tables);
    std::size_t classes = 0;
    for (std::size_t x = 0; x < cat.object_count(); ++x) {
      EXPECT_EQ(q.first_vertex[x], classes);
      classes += cat.group(x)->classes().size();
    }
    EXPECT_EQ(q.vertices.size(), classes);
    EXPECT_NO_THROW(assert_acyclic(q, cat));
    EXPECT_NO_THROW(embedded_ei_quiver_check(cat, q));
  }
}

TEST(Quiver, CyclicQuiverIsRejected) {
  auto b = build("example_4_4.json");
  OrdinaryQuiver q = b.q;
  q.arrows.push_back({vertex_named(q, "y:X0"), vertex_named(q, "x:X0"), 1, {}});
  try {
    assert_acyclic(q, b.cat);
    FAIL() << "expected an invariant error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Invariant);
  }
}

TEST(Quiver, EmbeddedCheckNeedsTrivialArrows) {
  auto b = build("example_4_4.json");
  OrdinaryQuiver q = b.q;
  const std::size_t from = vertex_named(q, "x:X0"), to = vertex_named(q, "y:X0");
  std::erase_if(q.arrows, [&](const QuiverArrow& a) { return a.from == from && a.to == to; });
  EXPECT_THROW(embedded_ei_quiver_check(b.cat, q), Error);
}

TEST(Quiver, NonFreeCategoryMatchesItsCover) {
  for (const char* name : {"example_2_10_minus_beta.json", "example_2_11_minus_g.json"}) {
    auto b = build(name);
    EXPECT_NO_THROW(cover_quiver_equality(b.cat, b.tables));
  }
}

TEST(Quiver, SameLabeledQuiverSeesMultiplicities) {
  const auto a = build("example_6_6.json");
  OrdinaryQuiver q = a.q;
  EXPECT_TRUE(same_labeled_quiver(a.q, q));
  q.arrows.front().mult += 1;
  EXPECT_FALSE(same_labeled_quiver(a.q, q));
}

TEST(Quiver, DeterministicAcrossBuilds) {
  const auto a = build("example_4_3.json");
  const auto b = build("example_4_3.json");
  EXPECT_EQ(quiver_to_json(a.q), quiver_to_json(b.q));
}
