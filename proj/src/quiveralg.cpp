#include "eiq/quiveralg.hpp"

#include <algorithm>

#include "eiq/error.hpp"
#include "eiq/freecover.hpp"

namespace eiq {

std::string OrdinaryQuiver::vertex_name(std::size_t v) const {
  return object_ids[vertices[v].object] + ":X" + std::to_string(vertices[v].irreducible);
}

OrdinaryQuiver build_quiver(const EICategory& cat, CharTableCache& tables) {
  OrdinaryQuiver q;
  for (std::size_t x = 0; x < cat.object_count(); ++x) {
    q.object_ids.push_back(cat.id(x));
    q.first_vertex.push_back(q.vertices.size());
    const CharTable& t = tables.get(cat.group(x));
    for (std::size_t i = 0; i < t.size(); ++i) q.vertices.push_back({x, i, t.dim(i)});
  }

  std::map<std::pair<std::size_t, std::size_t>, QuiverArrow> arrows;
  const PrimeField& f = tables.field();
  for (const auto& orbit : orbit_representatives(cat)) {
    const MorphId& alpha = orbit.alpha;
    const StabilizerData sd = stabilizer_data(cat, alpha);
    const CharTable& source = tables.get(cat.group(alpha.source));
    const CharTable& target = tables.get(cat.group(alpha.target));
    const CharTable& quot = tables.get(sd.quot_g->group());

    // e[v][u] and f[w][u].
    std::vector<std::vector<std::size_t>> e(source.size(), std::vector<std::size_t>(quot.size()));
    std::vector<std::vector<std::size_t>> fm(target.size(), std::vector<std::size_t>(quot.size()));
    for (std::size_t u = 0; u < quot.size(); ++u) {
      const ClassFunction on_g1 = inflate(quot.irreducible(u), *sd.quot_g);
      const ClassFunction on_h1 = inflate(transport(quot.irreducible(u), sd.phi), *sd.quot_h);
      for (std::size_t v = 0; v < source.size(); ++v) {
        e[v][u] = restriction_multiplicity(source.irreducible(v), sd.g1, on_g1, f);
      }
      for (std::size_t w = 0; w < target.size(); ++w) {
        fm[w][u] = restriction_multiplicity(target.irreducible(w), sd.h1, on_h1, f);
      }
    }
    for (std::size_t v = 0; v < source.size(); ++v) {
      for (std::size_t w = 0; w < target.size(); ++w) {
        for (std::size_t u = 0; u < quot.size(); ++u) {
          const std::size_t count = e[v][u] * fm[w][u];
          if (count == 0) continue;
          const std::size_t from = q.vertex(alpha.source, v);
          const std::size_t to = q.vertex(alpha.target, w);
          QuiverArrow& a = arrows[{from, to}];
          a.from = from;
          a.to = to;
          a.mult += count;
          a.provenance.push_back({alpha, v, w, u, e[v][u], fm[w][u]});
        }
      }
    }
  }
  for (auto& [key, a] : arrows) q.arrows.push_back(std::move(a));
  return q;
}

MultiplicityMap multiplicities(const OrdinaryQuiver& q) {
  MultiplicityMap m;
  for (const auto& a : q.arrows) m[{a.from, a.to}] += a.mult;
  return m;
}

void assert_acyclic(const OrdinaryQuiver& q, const EICategory& cat) {
  std::vector<std::size_t> rank(cat.object_count());
  for (std::size_t i = 0; i < cat.topological_order().size(); ++i) rank[cat.topological_order()[i]] = i;
  for (const auto& a : q.arrows) {
    if (rank[q.vertices[a.from].object] >= rank[q.vertices[a.to].object]) {
      fail(ErrorKind::Invariant, "arrow " + q.vertex_name(a.from) + " -> " + q.vertex_name(a.to) +
                                     " does not go forward in the object order");
    }
  }
  // Independent check by depth-first search for a back edge.
  const std::size_t n = q.vertices.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& a : q.arrows) out[a.from].push_back(a.to);
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        const std::size_t w = out[v][next++];
        if (state[w] == 1) fail(ErrorKind::Invariant, "quiver has a directed cycle through " + q.vertex_name(w));
        if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
}

void embedded_ei_quiver_check(const EICategory& cat, const OrdinaryQuiver& q) {
  const auto orbits = orbit_representatives(cat);
  for (const auto& orbit : orbits) {
    const std::size_t from = q.vertex(orbit.alpha.source, 0);
    const std::size_t to = q.vertex(orbit.alpha.target, 0);
    bool found = false;
    for (const auto& a : q.arrows) {
      if (a.from != from || a.to != to) continue;
      for (const auto& p : a.provenance) {
        found = found || (p.alpha == orbit.alpha && p.u == 0 && p.e == 1 && p.f == 1);
      }
    }
    if (!found) {
      fail(ErrorKind::Invariant, "no trivial-module arrow " + q.vertex_name(from) + " -> " + q.vertex_name(to) +
                                     " for representative " + std::to_string(orbit.alpha.index));
    }
  }
}

bool same_labeled_quiver(const OrdinaryQuiver& a, const OrdinaryQuiver& b) {
  if (a.object_ids != b.object_ids || a.vertices.size() != b.vertices.size()) return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    const auto& x = a.vertices[i];
    const auto& y = b.vertices[i];
    if (x.object != y.object || x.irreducible != y.irreducible || x.dim != y.dim) return false;
  }
  return multiplicities(a) == multiplicities(b);
}

void cover_quiver_equality(const EICategory& cat, CharTableCache& tables) {
  const OrdinaryQuiver original = build_quiver(cat, tables);
  const OrdinaryQuiver covered = build_quiver(free_cover(cat), tables);
  if (!same_labeled_quiver(original, covered)) {
    fail(ErrorKind::Invariant, "quiver of the category differs from the quiver of its free cover");
  }
}

}  // namespace eiq
