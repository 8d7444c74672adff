#pragma once

// The functor F from representations of a free EI category (orders
// invertible) to representations of its ordinary quiver, its inverse on
// objects, transport of homomorphisms, and hom-space dimensions on both sides.
//
// Everything is expressed in canonical aligned bases: every irreducible V of
// every Aut(x) has one fixed matrix realization, every copy of V inside a
// module is reached through an embedding V -> M from a canonical basis of
// Hom_G(V, M), and for each representative alpha each V is given a basis
// adapted to V|G1 = (+)_U (+)_s U_s (+) V_rest with each U_s aligned to a fixed
// realization of the quotient irreducible U.

#include <cstddef>
#include <string>
#include <vector>

#include "eiq/chartab.hpp"
#include "eiq/eicat.hpp"
#include "eiq/field.hpp"
#include "eiq/quiveralg.hpp"

namespace eiq {

struct CatRep {
  Scalar p = 0;
  std::vector<std::vector<MatrixFp>> generators;  // per object, one matrix per group generator
  std::vector<MatrixFp> alpha;                    // per orbit representative, target dim x source dim
  std::vector<std::size_t> dims;                  // per object

  std::size_t dim(std::size_t x) const { return dims[x]; }
};

/// One copy of an arrow: provenance entry of an arrow together with copy indices (s, l).
struct ArrowUnit {
  std::size_t arrow = 0;
  std::size_t provenance = 0;
  std::size_t rep = 0;  // index into the orbit representatives
  std::size_t s = 0;
  std::size_t l = 0;
};

struct QuiverRep {
  std::vector<std::size_t> dims;  // per quiver vertex
  std::vector<MatrixFp> maps;     // per arrow unit, dims[to] x dims[from]
};

/// Fixed realization of a group representation: one matrix per element position.
using Realization = std::vector<MatrixFp>;

/// Canonical realization of irreducible `index` of g. Deterministic.
Realization irreducible_realization(const GroupPtr& g, std::size_t index, CharTableCache& tables);

/// All T with a_k T = T b_k for every k, as a canonical (reduced echelon) basis.
std::vector<MatrixFp> intertwiners(const std::vector<MatrixFp>& a, const std::vector<MatrixFp>& b, Index rows,
                                   Index cols, const PrimeField& f);

class MoritaContext {
 public:
  /// Throws Precondition when the category is not free or some order is not invertible.
  MoritaContext(const EICategory& cat, CharTableCache& tables);

  const EICategory& category() const noexcept { return cat_; }
  const OrdinaryQuiver& quiver() const noexcept { return quiver_; }
  const std::vector<Orbit>& representatives() const noexcept { return reps_; }
  const std::vector<ArrowUnit>& units() const noexcept { return units_; }
  const PrimeField& field() const noexcept { return f_; }
  const Realization& realization(std::size_t x, std::size_t v) const { return objects_[x].irreducibles[v]; }

  /// Matrix of every group element on the module of object x.
  std::vector<MatrixFp> expand(std::size_t x, std::size_t dim, const std::vector<MatrixFp>& generators) const;

  /// Canonical basis of Hom_G(V, M) for each irreducible V of Aut(x).
  std::vector<std::vector<MatrixFp>> embeddings(std::size_t x, std::size_t dim,
                                                const std::vector<MatrixFp>& generators) const;

  /// Throws Validation with findings naming the offending (alpha, U, T) blocks.
  void verify(const CatRep& r) const;

  std::vector<std::size_t> on_objects(const CatRep& r) const;
  QuiverRep on_morphisms(const CatRep& r) const;
  CatRep inverse(const QuiverRep& q) const;
  /// r rewritten in the canonical bases of its objects (what inverse(on_morphisms(r)) returns).
  CatRep canonical_form(const CatRep& r) const;

  /// Per vertex the matrix of F(pi). Throws Precondition when pi is not a homomorphism.
  std::vector<MatrixFp> transport_hom(const CatRep& r1, const CatRep& r2, const std::vector<MatrixFp>& pi) const;
  /// Inverse of transport_hom on homomorphisms given in canonical bases.
  std::vector<MatrixFp> lift_hom(const CatRep& r1, const CatRep& r2, const std::vector<MatrixFp>& pi_prime) const;

  std::size_t hom_dim(const CatRep& r1, const CatRep& r2) const;
  std::size_t hom_dim(const QuiverRep& a, const QuiverRep& b) const;

  /// Whether pi satisfies every commutation square; the first failure is described in `why`.
  bool is_hom(const CatRep& r1, const CatRep& r2, const std::vector<MatrixFp>& pi, std::string* why = nullptr) const;
  bool is_hom(const QuiverRep& a, const QuiverRep& b, const std::vector<MatrixFp>& pi) const;

 private:
  struct Block {
    std::size_t u = 0;  // quotient irreducible, or kRest
    std::size_t s = 0;
    Index offset = 0;
    Index size = 0;
  };
  static constexpr std::size_t kRest = static_cast<std::size_t>(-1);

  struct Adapted {
    MatrixFp basis;              // d_V x d_V, columns in block order
    std::vector<Block> blocks;
  };
  struct ObjectReps {
    std::vector<Realization> irreducibles;
    std::vector<std::size_t> dims;
  };
  struct AlphaData {
    StabilizerData sd;
    std::vector<Adapted> source;  // per irreducible of Aut(source)
    std::vector<Adapted> target;  // per irreducible of Aut(target)
  };
  struct Frame {
    MatrixFp basis;                           // columns theta_{V,i} in (V, i) order
    std::vector<std::size_t> counts;          // copies of each V
    std::vector<Index> offsets;               // column offset of (V, 0)
  };

  Frame frame(std::size_t x, std::size_t dim, const std::vector<MatrixFp>& generators) const;
  MatrixFp adapted_frame(const Frame& fr, const std::vector<Adapted>& side) const;
  void check_shapes(const CatRep& r) const;
  std::string block_label(std::size_t u) const;

  const EICategory& cat_;
  CharTableCache& tables_;
  PrimeField f_;
  OrdinaryQuiver quiver_;
  std::vector<Orbit> reps_;
  std::vector<ArrowUnit> units_;
  std::vector<ObjectReps> objects_;
  std::vector<AlphaData> alphas_;
};

}  // namespace eiq
