#include <gtest/gtest.h>

#include "eiq/document.hpp"
#include "eiq/random_category.hpp"
#include "support.hpp"

using namespace eiq;
using namespace eiq::testing;

namespace {

ErrorKind kind_of(const json& doc) {
  try {
    load_category(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "document loaded";
  return ErrorKind::Invariant;
}

std::string first_code(const json& doc) {
  try {
    load_category(doc);
  } catch (const Error& e) {
    return e.findings().empty() ? "" : e.findings().front().code;
  }
  return "";
}

json c2_object(const std::string& id) { return {{"id", id}, {"degree", 2}, {"generators", {{1, 0}}}}; }

void expect_same_category(const EICategory& a, const EICategory& b) {
  ASSERT_EQ(a.object_count(), b.object_count());
  EXPECT_EQ(a.morphism_count(), b.morphism_count());
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    EXPECT_EQ(a.id(x), b.id(x));
    EXPECT_EQ(a.group(x)->elements(), b.group(x)->elements());
    for (std::size_t y = 0; y < a.object_count(); ++y) {
      if (x == y) continue;
      EXPECT_EQ(a.hom(x, y).left, b.hom(x, y).left);
      EXPECT_EQ(a.hom(x, y).right, b.hom(x, y).right);
      for (std::size_t z = 0; z < a.object_count(); ++z) {
        if (z == x || z == y || a.hom_size(x, y) == 0 || a.hom_size(y, z) == 0) continue;
        for (std::size_t o = 0; o < a.hom_size(y, z); ++o) {
          for (std::size_t i = 0; i < a.hom_size(x, y); ++i) {
            EXPECT_EQ(a.compose_index(x, y, z, o, i), b.compose_index(x, y, z, o, i));
          }
        }
      }
    }
  }
}

}  // namespace

TEST(CategoryDocument, FixturesRoundTrip) {
  for (const char* name : {"example_4_3.json", "example_4_3_quiver.json", "example_4_4.json", "example_6_6.json",
                           "example_2_10_minus_beta.json", "example_2_11_minus_g.json"}) {
    SCOPED_TRACE(name);
    const auto cat = load_fixture(name);
    const json doc = category_to_json(cat);
    const auto again = load_category(doc);
    expect_same_category(cat, again);
    EXPECT_EQ(category_to_json(again), doc);
  }
}

TEST(CategoryDocument, RandomCategoriesRoundTrip) {
  Rng rng(2020);
  RandomCategoryOptions opts;
  opts.min_objects = 3;
  opts.max_morphisms = 150;
  for (int i = 0; i < 15; ++i) {
    const auto cat = i % 2 ? random_non_free_category(rng, opts) : random_free_category(rng, opts);
    const auto again = load_category(json::parse(category_to_json(cat).dump()));
    expect_same_category(cat, again);
  }
}

TEST(CategoryDocument, SchemaErrors) {
  EXPECT_EQ(kind_of(json::array()), ErrorKind::Schema);
  EXPECT_EQ(kind_of(json{{"mode", "explicit"}}), ErrorKind::Schema);
  EXPECT_EQ(kind_of(json{{"mode", "graph"}, {"objects", json::array()}}), ErrorKind::Schema);
  EXPECT_EQ(kind_of(json{{"objects", {{{"id", "x"}, {"degree", "two"}, {"generators", json::array()}}}}}),
            ErrorKind::Schema);
}

TEST(CategoryDocument, ValidationFindings) {
  json bad_perm{{"objects", {{{"id", "x"}, {"degree", 2}, {"generators", {{0, 0}}}}}}, {"homs", json::array()}};
  EXPECT_EQ(kind_of(bad_perm), ErrorKind::Validation);
  EXPECT_EQ(first_code(bad_perm), "bad-permutation");

  json short_perm{{"objects", {{{"id", "x"}, {"degree", 3}, {"generators", {{1, 0}}}}}}, {"homs", json::array()}};
  EXPECT_EQ(first_code(short_perm), "bad-permutation");

  json dup{{"objects", {c2_object("x"), c2_object("x")}}, {"homs", json::array()}};
  EXPECT_EQ(first_code(dup), "duplicate-object");

  json unknown{{"objects", {c2_object("x")}},
               {"homs", {{{"from", "x"}, {"to", "w"}, {"size", 1}, {"left_action", json::array()}, {"right_action", {{0}}}}}}};
  EXPECT_EQ(first_code(unknown), "unknown-object");
}

TEST(CategoryDocument, EIQuiverModeFindings) {
  json doc = read_json_file(fixture_path("example_4_3_quiver.json"));
  ASSERT_EQ(doc.at("mode"), "ei-quiver");
  json wrong = doc;
  auto& arrow = wrong.at("homs").at(0);
  arrow.at("left_action") = json::array();
  EXPECT_EQ(first_code(wrong), "action-shape");
}

TEST(Files, IoAndParseErrors) {
  try {
    read_json_file(fixture_path("does_not_exist.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
  try {
    read_json_file(fixture_path("malformed.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Schema);
  }
}

TEST(Matrices, RoundTripAndReduction) {
  const PrimeField f(13);
  MatrixFp m(2, 3);
  m << 1, 2, 3, 4, 5, 12;
  const json j = matrix_to_json(m);
  EXPECT_EQ(j, json({{1, 2, 3}, {4, 5, 12}}));
  EXPECT_EQ(matrix_from_json(j, 2, 3, f, "m"), m);
  MatrixFp neg(1, 2);
  neg << 12, 1;
  EXPECT_EQ(matrix_from_json(json({{-1, 14}}), 1, 2, f, "m"), neg);
  EXPECT_EQ(matrix_from_json(json::array(), 0, 4, f, "m").cols(), 4);
  EXPECT_THROW(matrix_from_json(j, 3, 2, f, "m"), Error);
  EXPECT_THROW(matrix_from_json(json({{1, 2, 3}, {4, 5}}), 2, 3, f, "m"), Error);
  EXPECT_THROW(matrix_from_json(json({{1, 2, 3}, {4, 5, 0.5}}), 2, 3, f, "m"), Error);
}

TEST(Reports, QuiverAndVerdictDocuments) {
  const auto cat = load_fixture("example_6_6.json");
  auto tables = tables_for(cat);
  const auto q = build_quiver(cat, tables);
  const json jq = quiver_to_json(q);
  EXPECT_EQ(jq.at("vertices").size(), 4u);
  std::size_t total = 0;
  for (const auto& a : jq.at("arrows")) total += a.at("mult").get<std::size_t>();
  EXPECT_EQ(total, 4u);
  const std::string dot = quiver_to_dot(q);
  const std::string edge = "\"x:X0\" -> \"y:X2\"";
  const auto first = dot.find(edge);
  ASSERT_NE(first, std::string::npos);
  EXPECT_NE(dot.find(edge, first + 1), std::string::npos);
  const json jv = verdict_to_json(rep_type(cat, tables), cat, &q);
  EXPECT_EQ(jv.at("verdict"), "Wild");
  EXPECT_FALSE(jv.at("certificates").empty());
}

TEST(Representations, CatRepRoundTrip) {
  const auto cat = load_fixture("example_4_4.json");
  auto tables = tables_for(cat);
  const MoritaContext ctx(cat, tables);
  const json doc = read_json_file(fixture_path("example_7_3_rep.json"));
  const CatRep r = load_cat_rep(doc, ctx);
  const CatRep again = load_cat_rep(cat_rep_to_json(r, ctx), ctx);
  EXPECT_EQ(again.dims, r.dims);
  EXPECT_EQ(again.generators, r.generators);
  EXPECT_EQ(again.alpha, r.alpha);
  const QuiverRep fr = ctx.on_morphisms(r);
  const QuiverRep fr2 = load_quiver_rep(quiver_rep_to_json(fr, ctx), ctx);
  EXPECT_EQ(fr2.dims, fr.dims);
  EXPECT_EQ(fr2.maps, fr.maps);
}
