#include <gtest/gtest.h>

#include "eiq/freecover.hpp"
#include "eiq/random_category.hpp"
#include "support.hpp"

using namespace eiq;
using namespace eiq::testing;

namespace {

Biset regular_biset(const PermGroup& g) {
  Biset b;
  b.size = g.order();
  b.left.assign(g.order(), std::vector<std::uint32_t>(g.order()));
  b.right = b.left;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t i = 0; i < g.order(); ++i) {
      b.left[a][i] = static_cast<std::uint32_t>(g.multiply(a, i));
      b.right[a][i] = static_cast<std::uint32_t>(g.multiply(i, a));
    }
  }
  return b;
}

Biset point_biset() { return Biset{1, {{0}}, {{0}}}; }

// a0 -> a1 -> ... with trivial groups.
EIQuiverData line_quiver(std::size_t n) {
  EIQuiverData q;
  for (std::size_t i = 0; i < n; ++i) {
    q.ids.push_back("v" + std::to_string(i));
    q.groups.push_back(make_group(1, {}));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) q.arrows.push_back({i, i + 1, point_biset(), {i, i + 1, 0}, {0}});
  return q;
}

void expect_same_homs(const EICategory& a, const EICategory& b) {
  ASSERT_EQ(a.object_count(), b.object_count());
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    for (std::size_t y = 0; y < a.object_count(); ++y) {
      if (x != y) {
        EXPECT_EQ(a.hom_size(x, y), b.hom_size(x, y)) << a.id(x) << " -> " << a.id(y);
      }
    }
  }
}

}  // namespace

TEST(BisetProduct, RegularBisetIsAUnit) {
  const auto cat = load_fixture("example_4_3.json");
  const std::size_t g = cat.object_index("G"), h = cat.object_index("H");
  const Biset& o1 = cat.hom(g, h);
  const auto left = biset_product(regular_biset(*cat.group(h)), o1, *cat.group(h));
  EXPECT_EQ(left.biset.size, o1.size);
  const auto right = biset_product(o1, regular_biset(*cat.group(g)), *cat.group(g));
  EXPECT_EQ(right.biset.size, o1.size);
  EXPECT_EQ(left.representatives.size(), left.biset.size);
}

TEST(BisetProduct, PathThroughTheMiddleObject) {
  const auto cat = load_fixture("example_4_3.json");
  const std::size_t g = cat.object_index("G"), h = cat.object_index("H"), k = cat.object_index("K");
  const auto prod = biset_product(cat.hom(h, k), cat.hom(g, h), *cat.group(h));
  EXPECT_EQ(prod.biset.size, 2u);
  EXPECT_EQ(cat.hom_size(g, k), 2u);
  // Balanced pairs land in the same class.
  for (std::uint32_t b2 = 0; b2 < cat.hom(h, k).size; ++b2) {
    for (std::uint32_t b1 = 0; b1 < cat.hom(g, h).size; ++b1) {
      for (std::size_t x = 0; x < cat.group(h)->order(); ++x) {
        EXPECT_EQ(prod.cls(cat.hom(h, k).act_right(b2, x), b1), prod.cls(b2, cat.hom(g, h).act_left(x, b1)));
      }
    }
  }
}

TEST(FreeGeneration, MatchesExplicitDocument) {
  expect_same_homs(load_fixture("example_4_3.json"), load_fixture("example_4_3_quiver.json"));
}

TEST(FreeGeneration, LineQuiverHasSingletonHomSets) {
  const auto cat = generate_free_category(line_quiver(5));
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = 0; b < 5; ++b) {
      if (a != b) {
        EXPECT_EQ(cat.hom_size(a, b), a < b ? 1u : 0u);
      }
    }
  }
  EXPECT_TRUE(is_free(cat).is_free);
}

TEST(FreeGeneration, PathBoundIsEnforced) {
  try {
    generate_free_category(line_quiver(6), 3);
    FAIL() << "expected a size-limit error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(Freeness, FixtureVerdicts) {
  for (const char* name : {"example_2_10.json", "example_2_11.json", "example_2_14.json", "example_4_3.json",
                           "example_4_4.json", "example_6_6.json"}) {
    SCOPED_TRACE(name);
    const auto cat = load_fixture(name);
    EXPECT_TRUE(is_free(cat).is_free);
    EXPECT_TRUE(ufp_oracle(cat).holds);
  }
  for (const char* name : {"example_2_10_minus_beta.json", "example_2_11_minus_g.json"}) {
    SCOPED_TRACE(name);
    const auto cat = load_fixture(name);
    EXPECT_FALSE(is_free(cat).is_free);
    const auto ufp = ufp_oracle(cat);
    EXPECT_FALSE(ufp.holds);
    EXPECT_FALSE(ufp.witness.empty());
  }
}

TEST(Freeness, CoverOfRemovedAutomorphism) {
  // Without g the two composites beta1 alpha and beta2 alpha stay apart in the cover.
  const auto cat = load_fixture("example_2_11_minus_g.json");
  const auto summary = is_free(cat);
  const std::size_t x = cat.object_index("x"), z = cat.object_index("z");
  EXPECT_EQ(summary.cover_sizes[x * summary.objects + z], 2u);
  EXPECT_EQ(summary.original_sizes[x * summary.objects + z], 1u);
}

TEST(Freeness, CoverDominatesOriginal) {
  Rng rng(404);
  RandomCategoryOptions opts;
  opts.min_objects = 3;
  opts.max_morphisms = 150;
  for (int i = 0; i < 20; ++i) {
    const auto cat = i % 2 ? random_non_free_category(rng, opts) : random_free_category(rng, opts);
    const auto summary = is_free(cat);
    bool equal = true;
    for (std::size_t k = 0; k < summary.cover_sizes.size(); ++k) {
      EXPECT_GE(summary.cover_sizes[k], summary.original_sizes[k]);
      equal &= summary.cover_sizes[k] == summary.original_sizes[k];
    }
    EXPECT_EQ(summary.is_free, equal);
    EXPECT_EQ(summary.is_free, i % 2 == 0);
    EXPECT_EQ(ufp_oracle(cat).holds, summary.is_free);
    // The cover is always free and keeps the objects and groups.
    const auto cover = free_cover(cat);
    EXPECT_TRUE(is_free(cover).is_free);
    for (std::size_t x = 0; x < cat.object_count(); ++x) EXPECT_EQ(cover.group(x)->order(), cat.group(x)->order());
  }
}

TEST(Freeness, FullSubcategoriesOfFreeCategoriesAreFree) {
  Rng rng(505);
  RandomCategoryOptions opts;
  opts.min_objects = 3;
  opts.max_morphisms = 150;
  std::size_t checked = 0;
  for (int i = 0; i < 15; ++i) {
    const auto cat = random_free_category(rng, opts);
    // Drop each object in turn; removals that disconnect the category are skipped.
    for (std::size_t drop = 0; drop < cat.object_count(); ++drop) {
      std::vector<std::size_t> keep;
      for (std::size_t x = 0; x < cat.object_count(); ++x) if (x != drop) keep.push_back(x);
      try {
        EXPECT_TRUE(is_free(full_subcategory(cat, keep)).is_free);
        ++checked;
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::Validation);
        EXPECT_EQ(e.findings().front().code, "disconnected");
      }
    }
  }
  EXPECT_GT(checked, 10u);
}
