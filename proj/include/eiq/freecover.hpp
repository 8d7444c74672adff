#pragma once

// Free EI categories generated by finite EI quivers, the free EI cover, and
// two independent freeness decisions.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eiq/eicat.hpp"

namespace eiq {

inline constexpr std::size_t kDefaultMaxPaths = 100000;
inline constexpr std::size_t kDefaultMaxChains = 1000000;

/// outer x_H inner: pairs (b2, b1) modulo (b2 h, b1) ~ (b2, h b1).
struct BisetProduct {
  Biset biset;
  std::size_t inner_size = 0;
  std::vector<std::uint32_t> class_of;                             // [b2 * inner_size + b1]
  std::vector<std::pair<std::uint32_t, std::uint32_t>> representatives;  // least pair per class

  std::uint32_t cls(std::uint32_t b2, std::uint32_t b1) const { return class_of[b2 * inner_size + b1]; }
};

BisetProduct biset_product(const Biset& outer, const Biset& inner, const PermGroup& middle);

/// Hom-sets are disjoint unions of path bisets, ordered by path length then
/// by the arrow sequence (first arrow first).
EICategory generate_free_category(const EIQuiverData& q, std::size_t max_paths = kDefaultMaxPaths);

EICategory free_cover(const EICategory& cat, std::size_t max_paths = kDefaultMaxPaths);

struct FreeCoverSummary {
  std::size_t objects = 0;
  std::vector<std::size_t> cover_sizes;     // [from * objects + to]
  std::vector<std::size_t> original_sizes;  // [from * objects + to]
  bool is_free = false;
};

FreeCoverSummary is_free(const EICategory& cat, std::size_t max_paths = kDefaultMaxPaths);

struct UfpVerdict {
  bool holds = true;
  std::string witness;  // empty when the property holds
};

/// Enumerates every decomposition into unfactorizables and checks that all
/// decompositions of each morphism lie in one orbit of the interleaving
/// automorphism action. Throws SizeLimit past max_chains.
UfpVerdict ufp_oracle(const EICategory& cat, std::size_t max_chains = kDefaultMaxChains);

}  // namespace eiq
