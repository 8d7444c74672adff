#pragma once

#include <string>
#include <vector>

#include "eiq/chartab.hpp"
#include "eiq/document.hpp"
#include "eiq/eicat.hpp"

namespace eiq::testing {

inline std::string fixture_path(const std::string& name) { return std::string(EIQ_FIXTURE_DIR) + "/" + name; }

inline EICategory load_fixture(const std::string& name) { return load_category(read_json_file(fixture_path(name))); }

inline std::vector<GroupPtr> groups_of(const EICategory& cat) {
  std::vector<GroupPtr> out;
  for (std::size_t x = 0; x < cat.object_count(); ++x) out.push_back(cat.group(x));
  return out;
}

inline CharTableCache tables_for(const EICategory& cat) { return CharTableCache(choose_splitting_prime(groups_of(cat))); }

inline GroupPtr make_group(std::size_t degree, std::vector<std::vector<std::uint32_t>> gens) {
  std::vector<Permutation> perms;
  for (auto& g : gens) perms.emplace_back(std::move(g));
  return PermGroup::generate(degree, std::move(perms));
}

inline GroupPtr s3() { return make_group(3, {{1, 0, 2}, {1, 2, 0}}); }
inline GroupPtr cyclic(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
  return make_group(n, {img});
}

// Vertex index by "object:Xi" name.
inline std::size_t vertex_named(const OrdinaryQuiver& q, const std::string& name) {
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    if (q.vertex_name(v) == name) return v;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace eiq::testing
