#include <gtest/gtest.h>

#include "eiq/document.hpp"
#include "eiq/morita.hpp"
#include "eiq/random_category.hpp"
#include "support.hpp"

using namespace eiq;
using namespace eiq::testing;

namespace {

// Category, tables and context kept alive together.
struct Fixture {
  explicit Fixture(const std::string& fixture) : cat(load_fixture(fixture)), tables(tables_for(cat)), ctx(cat, tables) {}
  EICategory cat;
  CharTableCache tables;
  MoritaContext ctx;
};

bool same(const CatRep& a, const CatRep& b) {
  return a.dims == b.dims && a.generators == b.generators && a.alpha == b.alpha;
}

bool same(const QuiverRep& a, const QuiverRep& b) { return a.dims == b.dims && a.maps == b.maps; }

// The one-dimensional representation of Aut(x) given by irreducible v, as generator matrices.
std::vector<MatrixFp> generators_of(const MoritaContext& ctx, std::size_t x, std::size_t v) {
  std::vector<MatrixFp> out;
  for (std::size_t pos : ctx.category().group(x)->generator_positions()) out.push_back(ctx.realization(x, v)[pos]);
  return out;
}

// r moved by an invertible matrix at every object; p[x] is then a homomorphism r -> result.
CatRep conjugate(const CatRep& r, const std::vector<MatrixFp>& p, const MoritaContext& ctx) {
  const PrimeField& f = ctx.field();
  CatRep out = r;
  for (std::size_t x = 0; x < r.dims.size(); ++x) {
    if (r.dims[x] == 0) continue;
    const MatrixFp inv = inverse(p[x], f);
    for (auto& g : out.generators[x]) g = f.mul(f.mul(p[x], g), inv);
  }
  for (std::size_t k = 0; k < ctx.representatives().size(); ++k) {
    const auto& a = ctx.representatives()[k].alpha;
    if (r.dims[a.source] == 0 || r.dims[a.target] == 0) continue;
    out.alpha[k] = f.mul(f.mul(p[a.target], r.alpha[k]), inverse(p[a.source], f));
  }
  return out;
}

std::vector<MatrixFp> random_basis_change(const CatRep& r, const PrimeField& f, Rng& rng) {
  std::vector<MatrixFp> p;
  for (std::size_t d : r.dims) p.push_back(random_invertible(static_cast<Index>(d), f, rng));
  return p;
}

std::vector<MatrixFp> compose(const std::vector<MatrixFp>& a, const std::vector<MatrixFp>& b, const PrimeField& f) {
  std::vector<MatrixFp> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f.mul(a[i], b[i]));
  return out;
}

bool all_zero(const std::vector<MatrixFp>& ms) {
  for (const auto& m : ms) {
    if (!m.isZero()) return false;
  }
  return true;
}

QuiverRep simple_at(const MoritaContext& ctx, std::size_t vertex) {
  QuiverRep q;
  q.dims.assign(ctx.quiver().vertices.size(), 0);
  q.dims[vertex] = 1;
  for (const auto& u : ctx.units()) {
    const auto& a = ctx.quiver().arrows[u.arrow];
    q.maps.push_back(MatrixFp::Zero(static_cast<Index>(q.dims[a.to]), static_cast<Index>(q.dims[a.from])));
  }
  return q;
}

}  // namespace

TEST(Functor, Example73DimensionsAndShapes) {
  Fixture s("example_4_4.json");
  const CatRep r = load_cat_rep(read_json_file(fixture_path("example_7_3_rep.json")), s.ctx);
  EXPECT_NO_THROW(s.ctx.verify(r));
  const auto& q = s.ctx.quiver();
  const auto dims = s.ctx.on_objects(r);
  EXPECT_EQ(dims[vertex_named(q, "x:X0")], 2u);
  EXPECT_EQ(dims[vertex_named(q, "x:X1")], 1u);
  EXPECT_EQ(dims[vertex_named(q, "y:X0")], 1u);
  EXPECT_EQ(dims[vertex_named(q, "y:X1")], 1u);
  EXPECT_EQ(dims[vertex_named(q, "y:X2")], 2u);
  const QuiverRep fr = s.ctx.on_morphisms(r);
  EXPECT_EQ(fr.dims, dims);
  ASSERT_EQ(fr.maps.size(), 4u);
  for (std::size_t u = 0; u < fr.maps.size(); ++u) {
    const auto& a = q.arrows[s.ctx.units()[u].arrow];
    EXPECT_EQ(fr.maps[u].rows(), static_cast<Index>(dims[a.to]));
    EXPECT_EQ(fr.maps[u].cols(), static_cast<Index>(dims[a.from]));
  }
  EXPECT_TRUE(same(s.ctx.inverse(fr), s.ctx.canonical_form(r)));
}

TEST(Functor, ZeroRepresentation) {
  Fixture s("example_4_3.json");
  QuiverRep zero;
  zero.dims.assign(s.ctx.quiver().vertices.size(), 0);
  for (std::size_t u = 0; u < s.ctx.units().size(); ++u) zero.maps.emplace_back(0, 0);
  const CatRep r = s.ctx.inverse(zero);
  EXPECT_NO_THROW(s.ctx.verify(r));
  for (std::size_t d : r.dims) EXPECT_EQ(d, 0u);
  EXPECT_TRUE(same(s.ctx.on_morphisms(r), zero));
  EXPECT_EQ(s.ctx.hom_dim(r, r), 0u);
}

TEST(Functor, TrivialToSignViolatesTheBlockCondition) {
  Fixture s("example_4_4.json");
  const std::size_t x = s.cat.object_index("x"), y = s.cat.object_index("y");
  CatRep r;
  r.p = s.ctx.field().p();
  r.dims = {0, 0};
  r.generators.resize(2);
  r.dims[x] = 1;
  r.dims[y] = 1;
  r.generators[x] = generators_of(s.ctx, x, 0);
  r.generators[y] = generators_of(s.ctx, y, 1);
  r.alpha = {MatrixFp::Identity(1, 1)};
  try {
    s.ctx.verify(r);
    FAIL() << "k -> sign should not be a representation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Validation);
    EXPECT_EQ(e.findings().front().code, "block-condition");
  }
  // The sign on both ends is fine: the transposition in H1 matches the generator of G.
  r.generators[x] = generators_of(s.ctx, x, 1);
  EXPECT_NO_THROW(s.ctx.verify(r));
  EXPECT_EQ(s.ctx.on_objects(r)[vertex_named(s.ctx.quiver(), "x:X1")], 1u);
}

TEST(Functor, RoundTripsOnRandomRepresentations) {
  for (const char* name : {"example_4_3.json", "example_4_4.json", "example_6_6.json"}) {
    SCOPED_TRACE(name);
    Fixture s(name);
    Rng rng(1111);
    for (int i = 0; i < 15; ++i) {
      const QuiverRep q = random_quiver_rep(s.ctx, rng, 2);
      const CatRep r = s.ctx.inverse(q);
      EXPECT_NO_THROW(s.ctx.verify(r));
      EXPECT_TRUE(same(s.ctx.on_morphisms(r), q));
      const CatRep moved = random_cat_rep(s.ctx, rng, 2, true);
      EXPECT_NO_THROW(s.ctx.verify(moved));
      EXPECT_TRUE(same(s.ctx.inverse(s.ctx.on_morphisms(moved)), s.ctx.canonical_form(moved)));
      EXPECT_TRUE(same(s.ctx.canonical_form(s.ctx.canonical_form(moved)), s.ctx.canonical_form(moved)));
    }
  }
}

TEST(Functor, IdentityAndZeroTransport) {
  Fixture s("example_4_4.json");
  Rng rng(1212);
  for (int i = 0; i < 10; ++i) {
    const CatRep r = random_cat_rep(s.ctx, rng, 2, true);
    std::vector<MatrixFp> id, zero;
    for (std::size_t d : r.dims) {
      id.push_back(MatrixFp::Identity(static_cast<Index>(d), static_cast<Index>(d)));
      zero.push_back(MatrixFp::Zero(static_cast<Index>(d), static_cast<Index>(d)));
    }
    const auto fid = s.ctx.transport_hom(r, r, id);
    const auto fr = s.ctx.on_morphisms(r);
    for (std::size_t v = 0; v < fid.size(); ++v) {
      EXPECT_EQ(fid[v], MatrixFp::Identity(static_cast<Index>(fr.dims[v]), static_cast<Index>(fr.dims[v])));
    }
    EXPECT_TRUE(all_zero(s.ctx.transport_hom(r, r, zero)));
  }
}

TEST(Functor, TransportIsFunctorial) {
  for (const char* name : {"example_4_3.json", "example_4_4.json"}) {
    SCOPED_TRACE(name);
    Fixture s(name);
    const PrimeField& f = s.ctx.field();
    Rng rng(1313);
    for (int i = 0; i < 15; ++i) {
      const CatRep r1 = random_cat_rep(s.ctx, rng, 2, true);
      const auto p = random_basis_change(r1, f, rng);
      const CatRep r2 = conjugate(r1, p, s.ctx);
      const auto q = random_basis_change(r2, f, rng);
      const CatRep r3 = conjugate(r2, q, s.ctx);
      ASSERT_TRUE(s.ctx.is_hom(r1, r2, p));
      ASSERT_TRUE(s.ctx.is_hom(r2, r3, q));
      const auto fp = s.ctx.transport_hom(r1, r2, p);
      const auto fq = s.ctx.transport_hom(r2, r3, q);
      EXPECT_EQ(s.ctx.transport_hom(r1, r3, compose(q, p, f)), compose(fq, fp, f));
      EXPECT_TRUE(s.ctx.is_hom(s.ctx.on_morphisms(r1), s.ctx.on_morphisms(r2), fp));
      // Isomorphic inputs give identical quiver representations up to the transported isomorphism.
      EXPECT_EQ(s.ctx.on_objects(r1), s.ctx.on_objects(r3));
      // A multiple of p is zero exactly when the multiple is.
      for (Scalar c : {Scalar{0}, Scalar{3}}) {
        std::vector<MatrixFp> cp;
        for (const auto& m : p) cp.push_back(f.reduce(MatrixFp(m * c)));
        EXPECT_EQ(all_zero(s.ctx.transport_hom(r1, r2, cp)), c == 0 || all_zero(p));
      }
    }
  }
}

TEST(Functor, NonHomomorphismIsRejected) {
  Fixture s("example_4_4.json");
  const CatRep r = load_cat_rep(read_json_file(fixture_path("example_7_3_rep.json")), s.ctx);
  // w2 -> w1 at y mixes the trivial and sign summands.
  std::vector<MatrixFp> bad{MatrixFp::Zero(3, 3), MatrixFp::Zero(6, 6)};
  bad[s.cat.object_index("y")](0, 1) = 1;
  std::string why;
  EXPECT_FALSE(s.ctx.is_hom(r, r, bad, &why));
  EXPECT_NE(why.find("does not commute"), std::string::npos);
  try {
    s.ctx.transport_hom(r, r, bad);
    FAIL() << "expected a precondition error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(Functor, HomDimensionsAgree) {
  for (const char* name : {"example_4_3.json", "example_4_4.json", "example_6_6.json"}) {
    SCOPED_TRACE(name);
    Fixture s(name);
    Rng rng(1515);
    std::size_t nonzero = 0;
    for (int i = 0; i < 25; ++i) {
      const CatRep r1 = random_cat_rep(s.ctx, rng, 2, true);
      const CatRep r2 = random_cat_rep(s.ctx, rng, 2, true);
      const std::size_t d = s.ctx.hom_dim(r1, r2);
      EXPECT_EQ(d, s.ctx.hom_dim(s.ctx.on_morphisms(r1), s.ctx.on_morphisms(r2)));
      EXPECT_EQ(s.ctx.hom_dim(r1, r1), s.ctx.hom_dim(s.ctx.on_morphisms(r1), s.ctx.on_morphisms(r1)));
      nonzero += d > 0;
    }
    EXPECT_GT(nonzero, 0u);
  }
}

TEST(Functor, SimplesHaveNoHomsBetweenThem) {
  Fixture s("example_4_4.json");
  const std::size_t n = s.ctx.quiver().vertices.size();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      const QuiverRep a = simple_at(s.ctx, v), b = simple_at(s.ctx, w);
      EXPECT_EQ(s.ctx.hom_dim(a, b), v == w ? 1u : 0u);
      EXPECT_EQ(s.ctx.hom_dim(s.ctx.inverse(a), s.ctx.inverse(b)), v == w ? 1u : 0u);
    }
  }
}

TEST(Functor, LiftedMapsAreHomsExactlyWhenTheirImagesAre) {
  Fixture s("example_4_4.json");
  const PrimeField& f = s.ctx.field();
  Rng rng(1616);
  std::size_t homs = 0, non_homs = 0;
  for (int i = 0; i < 40; ++i) {
    const CatRep r1 = random_cat_rep(s.ctx, rng, 2, true);
    const auto p = random_basis_change(r1, f, rng);
    const CatRep r2 = conjugate(r1, p, s.ctx);
    auto pi_prime = s.ctx.transport_hom(r1, r2, p);
    // Half the samples are perturbed away from a homomorphism.
    if (i % 2) {
      for (auto& m : pi_prime) {
        if (m.size() == 0) continue;
        const Index r = static_cast<Index>(rng() % m.rows()), c = static_cast<Index>(rng() % m.cols());
        m(r, c) = f.add(m(r, c), static_cast<Scalar>(1 + rng() % 5));
      }
    }
    const bool quiver_side = s.ctx.is_hom(s.ctx.on_morphisms(r1), s.ctx.on_morphisms(r2), pi_prime);
    const auto lifted = s.ctx.lift_hom(r1, r2, pi_prime);
    EXPECT_EQ(s.ctx.is_hom(r1, r2, lifted), quiver_side);
    if (quiver_side) {
      ++homs;
      EXPECT_EQ(s.ctx.transport_hom(r1, r2, lifted), pi_prime);
    } else {
      ++non_homs;
    }
  }
  EXPECT_GT(homs, 0u);
  EXPECT_GT(non_homs, 0u);
}
