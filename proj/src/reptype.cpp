#include "eiq/reptype.hpp"

#include <algorithm>
#include <map>

#include "eiq/error.hpp"
#include "eiq/freecover.hpp"

namespace eiq {

namespace {

ComponentClass wild(std::vector<std::size_t> vertices) { return {GraphKind::Wild, "wild", std::move(vertices)}; }

ComponentClass classify_component(std::vector<std::size_t> vertices, const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& edges) {
  const std::size_t n = vertices.size();
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < n; ++i) local[vertices[i]] = i;
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t loops = 0;
  std::size_t loop_mult = 0;
  std::size_t max_mult = 0;
  std::size_t edge_count = 0;
  for (const auto& [uv, mult] : edges) {
    if (!local.contains(uv.first)) continue;
    if (uv.first == uv.second) {
      ++loops;
      loop_mult += mult;
      continue;
    }
    const std::size_t a = local.at(uv.first);
    const std::size_t b = local.at(uv.second);
    adj[a].push_back(b);
    adj[b].push_back(a);
    max_mult = std::max(max_mult, mult);
    ++edge_count;
  }
  if (loops > 0) {
    if (n == 1 && loop_mult == 1) return {GraphKind::Euclidean, "~A0", vertices};
    return wild(vertices);
  }
  if (max_mult >= 2) {
    if (n == 2 && max_mult == 2) return {GraphKind::Euclidean, "~A1", vertices};
    return wild(vertices);
  }
  if (n == 1) return {GraphKind::Dynkin, "A1", vertices};
  if (edge_count == n) {
    for (const auto& nb : adj) {
      if (nb.size() != 2) return wild(vertices);
    }
    return {GraphKind::Euclidean, "~A" + std::to_string(n - 1), vertices};
  }
  if (edge_count > n) return wild(vertices);

  // A tree.
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() >= 5) return wild(vertices);
    if (adj[i].size() == 4) {
      if (n == 5) return {GraphKind::Euclidean, "~D4", vertices};
      return wild(vertices);
    }
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (branch.empty()) return {GraphKind::Dynkin, "A" + std::to_string(n), vertices};
  if (branch.size() == 1) {
    const std::size_t c = branch.front();
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[c]) {
      std::size_t prev = c;
      std::size_t cur = start;
      std::size_t len = 1;
      while (adj[cur].size() == 2) {
        const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    const std::size_t a = arms[0];
    const std::size_t b = arms[1];
    const std::size_t l = arms[2];
    if (a == 1 && b == 1) return {GraphKind::Dynkin, "D" + std::to_string(n), vertices};
    if (a == 1 && b == 2 && l <= 4) return {GraphKind::Dynkin, "E" + std::to_string(n), vertices};
    if (a == 2 && b == 2 && l == 2) return {GraphKind::Euclidean, "~E6", vertices};
    if (a == 1 && b == 3 && l == 3) return {GraphKind::Euclidean, "~E7", vertices};
    if (a == 1 && b == 2 && l == 5) return {GraphKind::Euclidean, "~E8", vertices};
    return wild(vertices);
  }
  if (branch.size() == 2) {
    for (std::size_t c : branch) {
      const auto leaves = std::count_if(adj[c].begin(), adj[c].end(), [&](std::size_t v) { return adj[v].size() == 1; });
      if (leaves != 2) return wild(vertices);
    }
    return {GraphKind::Euclidean, "~D" + std::to_string(n - 1), vertices};
  }
  return wild(vertices);
}

std::string pair_text(const EICategory& cat, std::size_t x, std::size_t y) { return cat.id(x) + "->" + cat.id(y); }

// Looks for a quotient irreducible S whose induction from the stabilizer
// `sub` to `whole` is not multiplicity free or has more than three summands.
std::optional<std::string> induced_screen(const Subgroup& sub, const QuotientGroup& quot, CharTableCache& tables) {
  const CharTable& qt = tables.get(quot.group());
  const CharTable& wt = tables.get(sub.parent());
  for (std::size_t s = 0; s < qt.size(); ++s) {
    const ClassFunction inflated = inflate(qt.irreducible(s), quot);
    std::vector<std::size_t> mult;
    std::size_t distinct = 0;
    bool repeated = false;
    for (std::size_t t = 0; t < wt.size(); ++t) {
      mult.push_back(restriction_multiplicity(wt.irreducible(t), sub, inflated, tables.field()));
      if (mult.back() > 0) ++distinct;
      if (mult.back() > 1) repeated = true;
    }
    if (repeated || distinct > 3) {
      std::string w = "quotient irreducible X" + std::to_string(s) + " induces with multiplicities [";
      for (std::size_t t = 0; t < mult.size(); ++t) w += (t ? ", " : "") + std::to_string(mult[t]);
      return w + "]";
    }
  }
  return std::nullopt;
}

}  // namespace

Multigraph underlying_graph(const OrdinaryQuiver& q) {
  Multigraph g;
  g.vertices = q.vertices.size();
  for (const auto& a : q.arrows) g.edges.push_back({a.from, a.to, a.mult});
  return g;
}

std::vector<ComponentClass> classify_graph(const Multigraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (const auto& e : g.edges) {
    if (e.mult == 0) continue;
    edges[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.mult;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<ComponentClass> out;
  std::vector<bool> seen(g.vertices, false);
  for (std::size_t root = 0; root < g.vertices; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t w : adj[comp[i]]) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(classify_component(std::move(comp), edges));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "Finite";
    case Verdict::Tame: return "Tame";
    case Verdict::Wild: return "Wild";
    case Verdict::InfiniteUncertified: return "InfiniteUncertified";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(GraphKind k) {
  switch (k) {
    case GraphKind::Dynkin: return "Dynkin";
    case GraphKind::Euclidean: return "Euclidean";
    case GraphKind::Wild: return "Wild";
  }
  return "Wild";
}

Verdict graph_verdict(const std::vector<ComponentClass>& components) {
  bool euclidean = false;
  for (const auto& c : components) {
    if (c.kind == GraphKind::Wild) return Verdict::Wild;
    if (c.kind == GraphKind::Euclidean) euclidean = true;
  }
  return euclidean ? Verdict::Tame : Verdict::Finite;
}

std::string describe(const std::vector<ComponentClass>& components) {
  bool uniform = true;
  for (const auto& c : components) uniform = uniform && c.kind == components.front().kind;
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.kind == GraphKind::Wild) {
      if (!uniform || i == 0) out += (i == 0 ? "" : ", ") + std::string("wild component");
    } else if (uniform) {
      out += (i == 0 ? to_string(c.kind) + " " : std::string(" + ")) + c.type;
    } else {
      out += (i == 0 ? "" : ", ") + to_string(c.kind) + " " + c.type;
    }
  }
  return out;
}

bool is_hereditary(const EICategory& cat, Scalar p) {
  for (std::size_t x = 0; x < cat.object_count(); ++x) {
    if (cat.group(x)->order() % static_cast<std::size_t>(p) == 0) return false;
  }
  return is_free(cat).is_free;
}

std::vector<Certificate> screen_two_object(const EICategory& cat, CharTableCache& tables) {
  std::vector<Certificate> out;
  const std::size_t n = cat.object_count();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || cat.hom_size(x, y) == 0) continue;
      const Biset& b = cat.hom(x, y);
      const auto orbits = biset_orbits(b);
      if (orbits.size() > 1) {
        out.push_back({"multiple-orbits", std::make_pair(x, y),
                       "hom(" + pair_text(cat, x, y) + ") has " + std::to_string(orbits.size()) + " orbits"});
        continue;
      }
      const StabilizerData sd = stabilizer_data(b, cat.group(y), cat.group(x), 0);
      const bool h_transitive = sd.g1.is_whole();
      const bool g_transitive = sd.h1.is_whole();
      if (!h_transitive && !g_transitive) {
        out.push_back({"neither-side-transitive", std::make_pair(x, y),
                       "neither Aut(" + cat.id(y) + ") nor Aut(" + cat.id(x) + ") acts transitively"});
        continue;
      }
      if (h_transitive) {
        if (auto w = induced_screen(sd.h1, *sd.quot_h, tables)) {
          out.push_back({"induced-not-multiplicity-free", std::make_pair(x, y),
                         "to Aut(" + cat.id(y) + "): " + *w});
          continue;
        }
      }
      if (g_transitive) {
        if (auto w = induced_screen(sd.g1, *sd.quot_g, tables)) {
          out.push_back({"induced-not-multiplicity-free", std::make_pair(x, y),
                         "to Aut(" + cat.id(x) + "): " + *w});
        }
      }
    }
  }
  return out;
}

RepTypeVerdict rep_type(const EICategory& cat, CharTableCache& tables) {
  RepTypeVerdict out;
  const auto screens = screen_two_object(cat, tables);
  if (is_hereditary(cat, tables.prime().p())) {
    out.components = classify_graph(underlying_graph(build_quiver(cat, tables)));
    out.verdict = graph_verdict(out.components);
    out.certificates.push_back({"hereditary", std::nullopt, "hereditary + " + describe(out.components)});
    out.certificates.insert(out.certificates.end(), screens.begin(), screens.end());
    return out;
  }
  out.components = classify_graph(underlying_graph(build_quiver(free_cover(cat), tables)));
  if (graph_verdict(out.components) == Verdict::Finite) {
    out.verdict = Verdict::Finite;
    out.certificates.push_back({"free-cover-finite", std::nullopt, "quotient of free cover with " + describe(out.components)});
    return out;
  }
  if (!screens.empty()) {
    out.verdict = Verdict::InfiniteUncertified;
    out.certificates = screens;
    return out;
  }
  out.verdict = Verdict::Unknown;
  out.certificates.push_back({"undecided", std::nullopt, "free cover quiver: " + describe(out.components)});
  return out;
}

}  // namespace eiq
