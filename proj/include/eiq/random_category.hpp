#pragma once

// Seeded random inputs for property tests and the `random` command: small
// groups, transitive bisets, free categories on random acyclic EI quivers,
// non-free quotients of those, and random representations.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "eiq/eicat.hpp"
#include "eiq/morita.hpp"

namespace eiq {

using Rng = std::mt19937_64;

struct RandomCategoryOptions {
  std::size_t min_objects = 1;
  std::size_t max_objects = 4;
  std::size_t max_group_order = 8;
  std::size_t max_morphisms = 300;
  std::size_t max_biset = 12;
  std::size_t max_attempts = 1000;
};

/// Names of the pooled groups, smallest first.
const std::vector<std::string>& group_pool();
GroupPtr pooled_group(const std::string& name);
GroupPtr random_group(Rng& rng, std::size_t max_order);

/// (H x G)/L for a random subgroup L, as an (h, g)-biset.
Biset random_transitive_biset(const GroupPtr& h, const GroupPtr& g, Rng& rng, std::size_t max_size);

/// Connected random acyclic EI quiver; every arrow carries a transitive biset.
EIQuiverData random_ei_quiver(Rng& rng, const RandomCategoryOptions& opts);

EICategory random_free_category(Rng& rng, const RandomCategoryOptions& opts = {});

/// Quotient of a free category by the smallest congruence identifying two
/// composite morphisms. The unfactorizables are untouched, so the result is
/// never free. Needs at least three objects.
EICategory random_non_free_category(Rng& rng, const RandomCategoryOptions& opts = {});

/// Quotient of cat by the congruence generated by identifying morphisms a and b of hom(from, to).
EICategory quotient_category(const EICategory& cat, std::size_t from, std::size_t to, std::uint32_t a, std::uint32_t b);

QuiverRep random_quiver_rep(const MoritaContext& ctx, Rng& rng, std::size_t max_dim);
/// inverse(random quiver rep), optionally moved out of canonical bases by a
/// random change of basis at every object.
CatRep random_cat_rep(const MoritaContext& ctx, Rng& rng, std::size_t max_dim, bool change_basis);

MatrixFp random_matrix(Index rows, Index cols, const PrimeField& f, Rng& rng);
MatrixFp random_invertible(Index n, const PrimeField& f, Rng& rng);

}  // namespace eiq
