#pragma once

// Finite EI categories: skeletal, connected, with every endomorphism an
// automorphism. Morphisms between distinct objects live in hom-sets that are
// (Aut(target), Aut(source))-bisets; composition between two non-endomorphisms
// comes from explicit tables, everything else from group data and the actions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "eiq/error.hpp"
#include "eiq/permgrp.hpp"

namespace eiq {

using ActionTable = std::vector<std::vector<std::uint32_t>>;  // [group element][point] -> point

/// A finite set with commuting left and right group actions, stored for every
/// group element (not just generators).
struct Biset {
  std::size_t size = 0;
  ActionTable left;   // left[h][i] = h . i
  ActionTable right;  // right[g][i] = i . g

  std::uint32_t act_left(std::size_t h, std::size_t i) const { return left[h][i]; }
  std::uint32_t act_right(std::size_t i, std::size_t g) const { return right[g][i]; }
};

/// Expands generator images to a full action table. `on_left` selects the
/// composition rule; returns a finding code on failure ("" on success).
std::string expand_action(const PermGroup& g, const std::vector<std::vector<std::uint32_t>>& generator_images,
                          std::size_t points, bool on_left, ActionTable& out);

struct MorphId {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t index = 0;

  bool is_endo() const noexcept { return source == target; }
  auto operator<=>(const MorphId&) const = default;
};

struct ObjectData {
  std::string id;
  GroupPtr group;
};

struct HomData {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t size = 0;
  std::vector<std::vector<std::uint32_t>> left_generators;   // one image list per generator of Aut(to)
  std::vector<std::vector<std::uint32_t>> right_generators;  // one image list per generator of Aut(from)
};

/// table[outer][inner] for outer in hom(mid, to), inner in hom(from, mid).
struct CompositionData {
  std::size_t from = 0;
  std::size_t mid = 0;
  std::size_t to = 0;
  std::vector<std::vector<std::uint32_t>> table;
};

struct CategoryData {
  std::vector<ObjectData> objects;
  std::vector<HomData> homs;
  std::vector<CompositionData> compositions;
};

class EICategory {
 public:
  /// Validates every axiom; throws Error(Validation, findings) listing all violations.
  static EICategory build(CategoryData data);

  std::size_t object_count() const noexcept { return objects_.size(); }
  const std::string& id(std::size_t x) const { return objects_[x].id; }
  std::size_t object_index(const std::string& id) const;
  const GroupPtr& group(std::size_t x) const { return objects_[x].group; }
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

  /// Hom-set between distinct objects (size 0 when empty).
  const Biset& hom(std::size_t from, std::size_t to) const { return homs_[from * object_count() + to]; }
  std::size_t hom_size(std::size_t from, std::size_t to) const;
  std::size_t morphism_count() const;

  /// outer o inner.
  MorphId compose(const MorphId& outer, const MorphId& inner) const;
  /// Entries of the stored table for non-endo outer (mid->to) and inner (from->mid).
  std::uint32_t compose_index(std::size_t from, std::size_t mid, std::size_t to, std::size_t outer,
                              std::size_t inner) const;
  bool has_table(std::size_t from, std::size_t mid, std::size_t to) const;

  /// The raw construction data (for serialization).
  const CategoryData& data() const noexcept { return data_; }

 private:
  std::size_t key(std::size_t a, std::size_t b, std::size_t c) const {
    return (a * object_count() + b) * object_count() + c;
  }

  CategoryData data_;
  std::vector<ObjectData> objects_;
  std::vector<Biset> homs_;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> tables_;  // key(from,mid,to) -> flattened [outer][inner]
  std::vector<std::size_t> topo_;
};

/// Per ordered pair, ascending indices of unfactorizable morphisms.
struct UnfactorizableSets {
  std::size_t objects = 0;
  std::vector<std::vector<std::uint32_t>> sets;  // sets[from * objects + to]

  const std::vector<std::uint32_t>& at(std::size_t from, std::size_t to) const { return sets[from * objects + to]; }
  std::size_t total() const;
};

UnfactorizableSets unfactorizables(const EICategory& cat);

struct Orbit {
  MorphId alpha;                       // least index in the orbit
  std::vector<std::uint32_t> members;  // ascending
};

/// Two-sided orbits on the unfactorizables, sorted by (source, target, representative).
std::vector<Orbit> orbit_representatives(const EICategory& cat, const UnfactorizableSets& unf);
std::vector<Orbit> orbit_representatives(const EICategory& cat);

/// Orbits of a biset under both actions, each as ascending points.
std::vector<std::vector<std::uint32_t>> biset_orbits(const Biset& b);

struct StabilizerData {
  MorphId alpha;
  Subgroup g0, g1;  // in Aut(source)
  Subgroup h0, h1;  // in Aut(target)
  std::shared_ptr<const QuotientGroup> quot_g;
  std::shared_ptr<const QuotientGroup> quot_h;
  GroupIso phi;     // quot_g -> quot_h
};

/// Stabilizer data of point i in a biset between Aut(target)=h and Aut(source)=g.
StabilizerData stabilizer_data(const Biset& b, const GroupPtr& h, const GroupPtr& g, std::uint32_t point);
StabilizerData stabilizer_data(const EICategory& cat, const MorphId& alpha);

/// Restriction of a biset to an invariant subset, renumbered in ascending order.
Biset sub_biset(const Biset& b, const std::vector<std::uint32_t>& points);

struct EIQuiverArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  Biset biset;
  MorphId alpha;  // where the arrow came from in the category (index into hom(from,to))
  std::vector<std::uint32_t> orbit;
};

struct EIQuiverData {
  std::vector<std::string> ids;
  std::vector<GroupPtr> groups;
  std::vector<EIQuiverArrow> arrows;
};

EIQuiverData ei_quiver_of(const EICategory& cat);

/// Full subcategory on the given objects (kept in the given order).
EICategory full_subcategory(const EICategory& cat, const std::vector<std::size_t>& objects);

}  // namespace eiq
