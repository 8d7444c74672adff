#pragma once

// Brute-force cross-check of the quiver: the category algebra by structure
// constants, its radical layers, and arrow counts as multiplicities of
// simple bimodules in the span of unfactorizable morphisms.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eiq/chartab.hpp"
#include "eiq/eicat.hpp"
#include "eiq/quiveralg.hpp"

namespace eiq {

/// Basis = all morphisms; the product of two basis elements is their
/// composite when composable and zero otherwise.
class StructureConstantAlgebra {
 public:
  static constexpr std::int64_t kZero = -1;

  explicit StructureConstantAlgebra(const EICategory& cat);

  std::size_t dimension() const noexcept { return basis_.size(); }
  const MorphId& basis(std::size_t i) const { return basis_[i]; }
  std::size_t index_of(const MorphId& m) const;
  /// Basis index of a * b, or kZero.
  std::int64_t product(std::size_t a, std::size_t b) const { return table_[a * basis_.size() + b]; }
  /// Unit sum of identities.
  std::vector<std::size_t> identity_terms() const;
  /// Exhaustive associativity over all triples; returns false on the first failure.
  bool is_associative() const;

 private:
  std::vector<MorphId> basis_;
  std::vector<std::size_t> offsets_;  // per (from, to) pair, start of its block
  std::size_t objects_ = 0;
  std::vector<std::int64_t> table_;
};

struct RadicalData {
  std::size_t objects = 0;
  std::size_t rad_dim = 0;
  std::size_t rad2_dim = 0;
  std::vector<std::size_t> block_quotient_dims;  // dim e_y (rad / rad^2) e_x at [x * objects + y]
  std::size_t nilpotency_index = 0;              // least k with rad^k = 0
};

/// Throws Invariant if the non-isomorphisms do not form a nilpotent ideal or
/// if a block quotient dimension differs from the unfactorizable count.
RadicalData radical_data(const StructureConstantAlgebra& a, const EICategory& cat, const PrimeField& f);

/// Arrow multiplicities keyed by (source vertex, target vertex), with the
/// vertex numbering of build_quiver.
MultiplicityMap ext_quiver_oracle(const EICategory& cat, CharTableCache& tables);

}  // namespace eiq
