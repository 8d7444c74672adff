#include "eiq/freecover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "eiq/error.hpp"

namespace eiq {

BisetProduct biset_product(const Biset& outer, const Biset& inner, const PermGroup& middle) {
  require(outer.right.size() == middle.order() && inner.left.size() == middle.order(), ErrorKind::Precondition,
          "biset product over mismatched middle groups");
  BisetProduct out;
  out.inner_size = inner.size;
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  out.class_of.assign(outer.size * inner.size, kUnset);
  // Pairs are visited in lexicographic order, so the first unclassed pair is its class's least member.
  for (std::uint32_t b2 = 0; b2 < outer.size; ++b2) {
    for (std::uint32_t b1 = 0; b1 < inner.size; ++b1) {
      if (out.class_of[b2 * inner.size + b1] != kUnset) continue;
      const auto cls = static_cast<std::uint32_t>(out.representatives.size());
      out.representatives.emplace_back(b2, b1);
      for (std::size_t h = 0; h < middle.order(); ++h) {
        const std::uint32_t x = outer.right[middle.inverse(h)][b2];
        const std::uint32_t y = inner.left[h][b1];
        out.class_of[x * inner.size + y] = cls;
      }
    }
  }
  Biset& b = out.biset;
  b.size = out.representatives.size();
  b.left.assign(outer.left.size(), std::vector<std::uint32_t>(b.size));
  b.right.assign(inner.right.size(), std::vector<std::uint32_t>(b.size));
  for (std::size_t c = 0; c < b.size; ++c) {
    const auto [b2, b1] = out.representatives[c];
    for (std::size_t k = 0; k < outer.left.size(); ++k) b.left[k][c] = out.cls(outer.left[k][b2], b1);
    for (std::size_t g = 0; g < inner.right.size(); ++g) b.right[g][c] = out.cls(b2, inner.right[g][b1]);
  }
  return out;
}

namespace {

struct PathData {
  std::vector<std::size_t> arrows;
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t prefix = static_cast<std::size_t>(-1);  // path without its last arrow
  Biset biset;
  BisetProduct product;  // for paths of length at least 2
  std::size_t offset = 0;  // position of this path's block inside hom(from, to)
};

class PathCategory {
 public:
  PathCategory(const EIQuiverData& q, std::size_t max_paths) : q_(q) {
    const std::size_t n = q.ids.size();
    for (const auto& a : q.arrows) {
      require(a.from < n && a.to < n, ErrorKind::Validation, "arrow names an unknown vertex");
      require(a.from != a.to, ErrorKind::Validation, "cyclic quiver: loop at " + q.ids[a.from]);
      require(a.biset.left.size() == q.groups[a.to]->order() && a.biset.right.size() == q.groups[a.from]->order(),
              ErrorKind::Validation, "arrow biset does not match its end groups");
    }
    check_acyclic();

    std::vector<std::size_t> level;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      PathData p;
      p.arrows = {a};
      p.from = q.arrows[a].from;
      p.to = q.arrows[a].to;
      p.biset = q.arrows[a].biset;
      level.push_back(add(std::move(p), max_paths));
    }
    while (!level.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t pi : level) {
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
          if (q.arrows[a].from != paths_[pi].to) continue;
          PathData p;
          p.arrows = paths_[pi].arrows;
          p.arrows.push_back(a);
          p.from = paths_[pi].from;
          p.to = q.arrows[a].to;
          p.prefix = pi;
          p.product = biset_product(q.arrows[a].biset, paths_[pi].biset, *q.groups[paths_[pi].to]);
          p.biset = p.product.biset;
          const std::size_t idx = add(std::move(p), max_paths);
          extend_.emplace(std::make_pair(pi, a), idx);
          next.push_back(idx);
        }
      }
      level = std::move(next);
    }

    by_pair_.resize(n * n);
    for (std::size_t i = 0; i < paths_.size(); ++i) by_pair_[paths_[i].from * n + paths_[i].to].push_back(i);
    for (auto& list : by_pair_) {
      std::size_t offset = 0;
      for (std::size_t i : list) {
        paths_[i].offset = offset;
        offset += paths_[i].biset.size;
      }
    }
  }

  EICategory build() const {
    const std::size_t n = q_.ids.size();
    CategoryData data;
    for (std::size_t x = 0; x < n; ++x) data.objects.push_back({q_.ids[x], q_.groups[x]});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto& list = by_pair_[a * n + c];
        if (list.empty()) continue;
        HomData h;
        h.from = a;
        h.to = c;
        for (std::size_t i : list) h.size += paths_[i].biset.size;
        for (std::size_t gen : q_.groups[c]->generator_positions()) {
          std::vector<std::uint32_t> img;
          for (std::size_t i : list) {
            for (std::uint32_t v : paths_[i].biset.left[gen]) img.push_back(static_cast<std::uint32_t>(paths_[i].offset + v));
          }
          h.left_generators.push_back(std::move(img));
        }
        for (std::size_t gen : q_.groups[a]->generator_positions()) {
          std::vector<std::uint32_t> img;
          for (std::size_t i : list) {
            for (std::uint32_t v : paths_[i].biset.right[gen]) img.push_back(static_cast<std::uint32_t>(paths_[i].offset + v));
          }
          h.right_generators.push_back(std::move(img));
        }
        data.homs.push_back(std::move(h));
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          const auto& inner = by_pair_[a * n + b];
          const auto& outer = by_pair_[b * n + c];
          if (inner.empty() || outer.empty()) continue;
          CompositionData comp;
          comp.from = a;
          comp.mid = b;
          comp.to = c;
          for (std::size_t op : outer) {
            for (std::uint32_t x = 0; x < paths_[op].biset.size; ++x) {
              const auto tuple = expand(op, x);
              std::vector<std::uint32_t> row;
              for (std::size_t ip : inner) {
                for (std::uint32_t y = 0; y < paths_[ip].biset.size; ++y) row.push_back(fold(ip, y, op, tuple));
              }
              comp.table.push_back(std::move(row));
            }
          }
          data.compositions.push_back(std::move(comp));
        }
      }
    }
    return EICategory::build(std::move(data));
  }

 private:
  std::size_t add(PathData p, std::size_t max_paths) {
    require(paths_.size() < max_paths, ErrorKind::SizeLimit,
            "path enumeration exceeds the limit of " + std::to_string(max_paths));
    paths_.push_back(std::move(p));
    return paths_.size() - 1;
  }

  void check_acyclic() const {
    const std::size_t n = q_.ids.size();
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& a : q_.arrows) ++indegree[a.to];
    std::vector<std::size_t> ready;
    for (std::size_t x = 0; x < n; ++x) {
      if (indegree[x] == 0) ready.push_back(x);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
      const std::size_t x = ready.back();
      ready.pop_back();
      ++seen;
      for (const auto& a : q_.arrows) {
        if (a.from == x && --indegree[a.to] == 0) ready.push_back(a.to);
      }
    }
    require(seen == n, ErrorKind::Validation, "cyclic quiver");
  }

  // Arrow-biset elements e_1..e_m (first arrow first) with x = [e_m, [..., [e_1]]].
  std::vector<std::uint32_t> expand(std::size_t path, std::uint32_t x) const {
    std::vector<std::uint32_t> out;
    while (paths_[path].prefix != static_cast<std::size_t>(-1)) {
      const auto [b2, b1] = paths_[path].product.representatives[x];
      out.push_back(b2);
      x = b1;
      path = paths_[path].prefix;
    }
    out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
  }

  // Index in hom(from(inner), to(outer)) of (outer element given by its tuple) o (inner element y).
  std::uint32_t fold(std::size_t inner, std::uint32_t y, std::size_t outer, const std::vector<std::uint32_t>& tuple) const {
    std::size_t current = inner;
    std::uint32_t z = y;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      current = extend_.at({current, paths_[outer].arrows[i]});
      z = paths_[current].product.cls(tuple[i], z);
    }
    return static_cast<std::uint32_t>(paths_[current].offset + z);
  }

  const EIQuiverData& q_;
  std::vector<PathData> paths_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> extend_;
  std::vector<std::vector<std::size_t>> by_pair_;
};

// A chain of unfactorizables, first morphism first, together with its composite.
struct Chain {
  std::vector<std::size_t> objects;    // objects[0] -> objects[1] -> ...
  std::vector<std::uint32_t> morphs;   // morphs[i] : objects[i] -> objects[i+1]
  std::size_t composite = 0;

  auto key() const { return std::make_pair(objects, morphs); }
};

}  // namespace

EICategory generate_free_category(const EIQuiverData& q, std::size_t max_paths) {
  return PathCategory(q, max_paths).build();
}

EICategory free_cover(const EICategory& cat, std::size_t max_paths) {
  return generate_free_category(ei_quiver_of(cat), max_paths);
}

FreeCoverSummary is_free(const EICategory& cat, std::size_t max_paths) {
  const EICategory cover = free_cover(cat, max_paths);
  const std::size_t n = cat.object_count();
  FreeCoverSummary s;
  s.objects = n;
  s.is_free = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      s.cover_sizes.push_back(cover.hom_size(x, y));
      s.original_sizes.push_back(cat.hom_size(x, y));
      if (s.cover_sizes.back() < s.original_sizes.back()) fail(ErrorKind::Invariant, "free cover is not full");
      if (s.cover_sizes.back() != s.original_sizes.back()) s.is_free = false;
    }
  }
  return s;
}

UfpVerdict ufp_oracle(const EICategory& cat, std::size_t max_chains) {
  const std::size_t n = cat.object_count();
  const UnfactorizableSets unf = unfactorizables(cat);
  std::vector<std::vector<Chain>> chains(n * n);  // by (first object, last object)
  std::size_t total = 0;
  auto push = [&](Chain c) {
    require(++total <= max_chains, ErrorKind::SizeLimit,
            "decomposition enumeration exceeds " + std::to_string(max_chains) + " chains");
    chains[c.objects.front() * n + c.objects.back()].push_back(std::move(c));
  };
  // Process targets in topological order so every chain ending at b exists before extending it.
  for (std::size_t c : cat.topological_order()) {
    for (std::size_t a = 0; a < n; ++a) {
      if (a == c) continue;
      for (std::uint32_t m : unf.at(a, c)) push({{a, c}, {m}, m});
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a || b == c || unf.at(b, c).empty()) continue;
        const auto& prefixes = chains[a * n + b];
        for (const auto& prefix : prefixes) {
          for (std::uint32_t m : unf.at(b, c)) {
            Chain next = prefix;
            next.objects.push_back(c);
            next.morphs.push_back(m);
            next.composite = cat.compose({b, c, m}, {a, b, prefix.composite}).index;
            push(std::move(next));
          }
        }
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a == c || cat.hom_size(a, c) == 0) continue;
      std::map<std::size_t, std::vector<const Chain*>> by_composite;
      for (const auto& ch : chains[a * n + c]) by_composite[ch.composite].push_back(&ch);
      if (by_composite.size() != cat.hom_size(a, c)) {
        fail(ErrorKind::Invariant, "a morphism " + cat.id(a) + "->" + cat.id(c) + " has no decomposition");
      }
      for (const auto& [composite, list] : by_composite) {
        const Chain& first = *list.front();
        // Orbit of the first chain under the interleaving action at each junction object.
        std::set<std::pair<std::vector<std::size_t>, std::vector<std::uint32_t>>> orbit{first.key()};
        std::vector<Chain> frontier{first};
        while (!frontier.empty()) {
          Chain ch = std::move(frontier.back());
          frontier.pop_back();
          for (std::size_t j = 1; j + 1 < ch.objects.size(); ++j) {
            const std::size_t y = ch.objects[j];
            const PermGroup& g = *cat.group(y);
            for (std::size_t s : g.generator_positions()) {
              Chain moved = ch;
              moved.morphs[j - 1] = cat.hom(ch.objects[j - 1], y).left[s][ch.morphs[j - 1]];
              moved.morphs[j] = cat.hom(y, ch.objects[j + 1]).right[g.inverse(s)][ch.morphs[j]];
              if (orbit.insert(moved.key()).second) frontier.push_back(std::move(moved));
            }
          }
        }
        for (const Chain* other : list) {
          if (!orbit.contains(other->key())) {
            std::string w = "morphism " + std::to_string(composite) + " in hom(" + cat.id(a) + ", " + cat.id(c) +
                            ") has inequivalent decompositions through";
            for (std::size_t x : first.objects) w += " " + cat.id(x);
            w += " and";
            for (std::size_t x : other->objects) w += " " + cat.id(x);
            return {false, w};
          }
        }
      }
    }
  }
  return {true, ""};
}

}  // namespace eiq
