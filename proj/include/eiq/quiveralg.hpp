#pragma once

// The ordinary quiver of a category algebra, built from character data of
// the automorphism groups and the stabilizer data of each representative
// unfactorizable morphism.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eiq/chartab.hpp"
#include "eiq/eicat.hpp"

namespace eiq {

struct QuiverVertex {
  std::size_t object = 0;
  std::size_t irreducible = 0;  // index into the character table of Aut(object)
  std::size_t dim = 0;
};

/// One (alpha, V, W, U) term contributing e * f arrows.
struct ArrowProvenance {
  MorphId alpha;
  std::size_t v = 0;  // irreducible of Aut(source)
  std::size_t w = 0;  // irreducible of Aut(target)
  std::size_t u = 0;  // irreducible of G1/G0
  std::size_t e = 0;
  std::size_t f = 0;
};

struct QuiverArrow {
  std::size_t from = 0;  // vertex index
  std::size_t to = 0;
  std::size_t mult = 0;
  std::vector<ArrowProvenance> provenance;
};

struct OrdinaryQuiver {
  std::vector<std::string> object_ids;
  std::vector<QuiverVertex> vertices;
  std::vector<QuiverArrow> arrows;      // sorted by (from, to), mult > 0
  std::vector<std::size_t> first_vertex;  // per object, index of its first vertex

  std::size_t vertex(std::size_t object, std::size_t irreducible) const { return first_vertex[object] + irreducible; }
  std::string vertex_name(std::size_t v) const;
};

using MultiplicityMap = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

OrdinaryQuiver build_quiver(const EICategory& cat, CharTableCache& tables);
MultiplicityMap multiplicities(const OrdinaryQuiver& q);

/// Throws Invariant on a directed cycle or an arrow against the object order.
void assert_acyclic(const OrdinaryQuiver& q, const EICategory& cat);

/// Each representative contributes an arrow between the trivial-module
/// vertices of its end objects. Throws Invariant otherwise.
void embedded_ei_quiver_check(const EICategory& cat, const OrdinaryQuiver& q);

/// Same vertices (object, irreducible, dim) and the same multiplicities.
bool same_labeled_quiver(const OrdinaryQuiver& a, const OrdinaryQuiver& b);

/// Builds the quiver of cat and of its free cover; throws Invariant when they differ.
void cover_quiver_equality(const EICategory& cat, CharTableCache& tables);

}  // namespace eiq
