#include "eiq/eicat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace eiq {

namespace {

constexpr std::size_t kWitnessesPerCode = 5;

class FindingLog {
 public:
  void add(const std::string& code, std::string message) {
    if (counts_[code]++ < kWitnessesPerCode) findings_.push_back({code, std::move(message)});
  }
  bool empty() const { return findings_.empty(); }
  std::vector<Finding> take() { return std::move(findings_); }

 private:
  std::vector<Finding> findings_;
  std::map<std::string, std::size_t> counts_;
};

bool is_bijection(const std::vector<std::uint32_t>& images, std::size_t points) {
  if (images.size() != points) return false;
  std::vector<bool> seen(points, false);
  for (std::uint32_t v : images) {
    if (v >= points || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::uint32_t> identity_images(std::size_t points) {
  std::vector<std::uint32_t> out(points);
  std::iota(out.begin(), out.end(), 0U);
  return out;
}

}  // namespace

std::string expand_action(const PermGroup& g, const std::vector<std::vector<std::uint32_t>>& generator_images,
                          std::size_t points, bool on_left, ActionTable& out) {
  if (generator_images.size() != g.generators().size()) return "action-shape";
  for (const auto& img : generator_images) {
    if (!is_bijection(img, points)) return "action-shape";
  }
  out.assign(g.order(), {});
  out[PermGroup::identity()] = identity_images(points);
  std::vector<std::size_t> queue{PermGroup::identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t x = queue[q];
    for (std::size_t k = 0; k < generator_images.size(); ++k) {
      const std::size_t y = g.multiply(g.generator_positions()[k], x);
      std::vector<std::uint32_t> img(points);
      // Left: rho(s x) = rho(s) o rho(x). Right: rho(s x) = rho(x) o rho(s).
      for (std::size_t i = 0; i < points; ++i) {
        img[i] = on_left ? generator_images[k][out[x][i]] : out[x][generator_images[k][i]];
      }
      if (out[y].empty()) {
        out[y] = std::move(img);
        queue.push_back(y);
      } else if (out[y] != img) {
        return y == PermGroup::identity() ? "identity" : "action-not-homomorphism";
      }
    }
  }
  return "";
}

EICategory EICategory::build(CategoryData data) {
  EICategory cat;
  FindingLog log;
  const std::size_t n = data.objects.size();
  require(n > 0, ErrorKind::Validation, "category has no objects");
  cat.objects_ = data.objects;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (data.objects[x].id == data.objects[y].id) log.add("duplicate-object", "object id " + data.objects[x].id);
    }
  }
  auto name = [&](std::size_t x) { return x < n ? data.objects[x].id : "#" + std::to_string(x); };
  auto pair_name = [&](std::size_t a, std::size_t b) { return name(a) + "->" + name(b); };

  cat.homs_.assign(n * n, Biset{});
  std::vector<bool> declared(n * n, false);
  for (const auto& h : data.homs) {
    if (h.from >= n || h.to >= n) {
      log.add("unknown-object", "hom " + pair_name(h.from, h.to));
      continue;
    }
    if (h.from == h.to) {
      log.add("non-ei", "hom " + pair_name(h.from, h.to) + " lists endomorphisms beyond Aut(" + name(h.from) + ")");
      continue;
    }
    const std::size_t k = h.from * n + h.to;
    if (declared[k]) {
      log.add("duplicate-hom", "hom " + pair_name(h.from, h.to) + " declared twice");
      continue;
    }
    declared[k] = true;
    Biset& b = cat.homs_[k];
    b.size = h.size;
    const PermGroup& target = *data.objects[h.to].group;
    const PermGroup& source = *data.objects[h.from].group;
    if (auto code = expand_action(target, h.left_generators, h.size, true, b.left); !code.empty()) {
      log.add(code, "left action of Aut(" + name(h.to) + ") on hom " + pair_name(h.from, h.to));
      b.size = 0;
      continue;
    }
    if (auto code = expand_action(source, h.right_generators, h.size, false, b.right); !code.empty()) {
      log.add(code, "right action of Aut(" + name(h.from) + ") on hom " + pair_name(h.from, h.to));
      b.size = 0;
      continue;
    }
    auto commute_failure = [&]() -> std::optional<std::size_t> {
      for (std::size_t hg : target.generator_positions()) {
        for (std::size_t gg : source.generator_positions()) {
          for (std::size_t i = 0; i < h.size; ++i) {
            if (b.left[hg][b.right[gg][i]] != b.right[gg][b.left[hg][i]]) return i;
          }
        }
      }
      return std::nullopt;
    };
    if (auto i = commute_failure()) {
      log.add("actions-do-not-commute", "hom " + pair_name(h.from, h.to) + " at morphism " + std::to_string(*i));
    }
  }
  // Skeletal and acyclic object preorder; topological order by Kahn with least index first.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || cat.hom_size(x, y) == 0) continue;
      ++indegree[y];
      if (x < y && cat.hom_size(y, x) > 0) log.add("hom-both-directions", "objects " + name(x) + " and " + name(y));
    }
  }
  std::set<std::size_t> ready;
  for (std::size_t x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.insert(x);
  }
  while (!ready.empty()) {
    const std::size_t x = *ready.begin();
    ready.erase(ready.begin());
    cat.topo_.push_back(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x && cat.hom_size(x, y) > 0 && --indegree[y] == 0) ready.insert(y);
    }
  }
  if (cat.topo_.size() != n) {
    bool pairwise = false;
    for (std::size_t x = 0; x < n && !pairwise; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (cat.hom_size(x, y) > 0 && cat.hom_size(y, x) > 0) pairwise = true;
      }
    }
    if (!pairwise) log.add("hom-both-directions", "objects lie on a cycle of nonempty hom-sets");
  }

  {
    std::vector<std::size_t> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < n; ++y) {
        if (!seen[y] && (cat.hom_size(x, y) > 0 || cat.hom_size(y, x) > 0)) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (!seen[y]) {
        log.add("disconnected", "object " + name(y) + " is not connected to " + name(0));
        break;
      }
    }
  }

  for (const auto& c : data.compositions) {
    const std::string where = "composition " + name(c.from) + "->" + name(c.mid) + "->" + name(c.to);
    if (c.from >= n || c.mid >= n || c.to >= n || c.from == c.mid || c.mid == c.to || c.from == c.to) {
      log.add("composition-shape", where + " does not name three distinct objects");
      continue;
    }
    const std::size_t outer = cat.hom_size(c.mid, c.to);
    const std::size_t inner = cat.hom_size(c.from, c.mid);
    const std::size_t land = cat.hom_size(c.from, c.to);
    if (outer == 0 || inner == 0) {
      log.add("composition-shape", where + " composes an empty hom-set");
      continue;
    }
    if (cat.tables_.contains(cat.key(c.from, c.mid, c.to))) {
      log.add("composition-shape", where + " declared twice");
      continue;
    }
    bool ok = c.table.size() == outer;
    std::vector<std::uint32_t> flat;
    for (const auto& row : c.table) {
      ok = ok && row.size() == inner;
      for (std::uint32_t v : row) {
        ok = ok && v < land;
        flat.push_back(v);
      }
    }
    if (!ok) {
      log.add("composition-shape", where + " table has the wrong shape or lands outside hom(" +
                                       pair_name(c.from, c.to) + ")");
      continue;
    }
    cat.tables_.emplace(cat.key(c.from, c.mid, c.to), std::move(flat));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (a == b || b == c || a == c || cat.hom_size(a, b) == 0 || cat.hom_size(b, c) == 0) continue;
        if (!cat.has_table(a, b, c)) {
          log.add("missing-composition", "no table for " + name(a) + "->" + name(b) + "->" + name(c));
        }
      }
    }
  }
  if (!log.empty()) throw Error(ErrorKind::Validation, log.take());

  // Tables must be compatible with the actions on all three objects.
  for (const auto& [k, table] : cat.tables_) {
    const std::size_t a = k / (n * n);
    const std::size_t b = (k / n) % n;
    const std::size_t c = k % n;
    const Biset& ab = cat.hom(a, b);
    const Biset& bc = cat.hom(b, c);
    const Biset& ac = cat.hom(a, c);
    auto t = [&](std::size_t o, std::size_t i) { return table[o * ab.size + i]; };
    const std::string where = name(a) + "->" + name(b) + "->" + name(c);
    bool bad = false;
    for (std::size_t o = 0; o < bc.size && !bad; ++o) {
      for (std::size_t i = 0; i < ab.size && !bad; ++i) {
        for (std::size_t h : cat.group(c)->generator_positions()) {
          bad = bad || ac.left[h][t(o, i)] != t(bc.left[h][o], i);
        }
        for (std::size_t g : cat.group(a)->generator_positions()) {
          bad = bad || ac.right[g][t(o, i)] != t(o, ab.right[g][i]);
        }
        for (std::size_t m : cat.group(b)->generator_positions()) {
          bad = bad || t(bc.right[m][o], i) != t(o, ab.left[m][i]);
        }
        if (bad) log.add("composition-action-mismatch", where + " at (" + std::to_string(o) + ", " +
                                                             std::to_string(i) + ")");
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          if (!cat.has_table(a, b, c) || !cat.has_table(b, c, d)) continue;
          for (std::size_t gm = 0; gm < cat.hom_size(c, d); ++gm) {
            for (std::size_t be = 0; be < cat.hom_size(b, c); ++be) {
              const std::size_t gb = cat.compose_index(b, c, d, gm, be);
              for (std::size_t al = 0; al < cat.hom_size(a, b); ++al) {
                const std::size_t lhs = cat.compose_index(a, b, d, gb, al);
                const std::size_t rhs = cat.compose_index(a, c, d, gm, cat.compose_index(a, b, c, be, al));
                if (lhs != rhs) {
                  log.add("associativity", "triple (" + std::to_string(gm) + ", " + std::to_string(be) + ", " +
                                               std::to_string(al) + ") along " + name(a) + "->" + name(b) +
                                               "->" + name(c) + "->" + name(d));
                }
              }
            }
          }
        }
      }
    }
  }
  if (!log.empty()) throw Error(ErrorKind::Validation, log.take());
  cat.data_ = std::move(data);
  return cat;
}

std::size_t EICategory::object_index(const std::string& id) const {
  for (std::size_t x = 0; x < objects_.size(); ++x) {
    if (objects_[x].id == id) return x;
  }
  fail(ErrorKind::Precondition, "unknown object " + id);
}

std::size_t EICategory::hom_size(std::size_t from, std::size_t to) const {
  if (from == to) return group(from)->order();
  return hom(from, to).size;
}

std::size_t EICategory::morphism_count() const {
  std::size_t total = 0;
  for (std::size_t x = 0; x < object_count(); ++x) {
    for (std::size_t y = 0; y < object_count(); ++y) total += hom_size(x, y);
  }
  return total;
}

bool EICategory::has_table(std::size_t from, std::size_t mid, std::size_t to) const {
  return tables_.contains(key(from, mid, to));
}

std::uint32_t EICategory::compose_index(std::size_t from, std::size_t mid, std::size_t to, std::size_t outer,
                                        std::size_t inner) const {
  return tables_.at(key(from, mid, to))[outer * hom(from, mid).size + inner];
}

MorphId EICategory::compose(const MorphId& outer, const MorphId& inner) const {
  require(outer.source == inner.target, ErrorKind::Precondition, "morphisms are not composable");
  const std::size_t a = inner.source;
  const std::size_t b = inner.target;
  const std::size_t c = outer.target;
  if (a == b && b == c) return {a, c, group(a)->multiply(outer.index, inner.index)};
  if (b == c) return {a, c, hom(a, b).left[outer.index][inner.index]};
  if (a == b) return {a, c, hom(b, c).right[inner.index][outer.index]};
  return {a, c, compose_index(a, b, c, outer.index, inner.index)};
}

std::size_t UnfactorizableSets::total() const {
  std::size_t t = 0;
  for (const auto& s : sets) t += s.size();
  return t;
}

UnfactorizableSets unfactorizables(const EICategory& cat) {
  const std::size_t n = cat.object_count();
  UnfactorizableSets out;
  out.objects = n;
  out.sets.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a == c || cat.hom_size(a, c) == 0) continue;
      std::vector<bool> composite(cat.hom_size(a, c), false);
      for (std::size_t b = 0; b < n; ++b) {
        if (!cat.has_table(a, b, c)) continue;
        for (std::size_t o = 0; o < cat.hom_size(b, c); ++o) {
          for (std::size_t i = 0; i < cat.hom_size(a, b); ++i) composite[cat.compose_index(a, b, c, o, i)] = true;
        }
      }
      for (std::size_t m = 0; m < composite.size(); ++m) {
        if (!composite[m]) out.sets[a * n + c].push_back(static_cast<std::uint32_t>(m));
      }
    }
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> biset_orbits(const Biset& b) {
  std::vector<std::vector<std::uint32_t>> orbits;
  std::vector<bool> seen(b.size, false);
  for (std::uint32_t start = 0; start < b.size; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> orbit{start};
    seen[start] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      auto visit = [&](std::uint32_t y) {
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      };
      for (const auto& l : b.left) visit(l[orbit[q]]);
      for (const auto& r : b.right) visit(r[orbit[q]]);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<Orbit> orbit_representatives(const EICategory& cat, const UnfactorizableSets& unf) {
  const std::size_t n = cat.object_count();
  std::vector<Orbit> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto& set = unf.at(a, c);
      if (set.empty()) continue;
      std::vector<bool> in(cat.hom_size(a, c), false);
      for (std::uint32_t m : set) in[m] = true;
      for (auto& orbit : biset_orbits(cat.hom(a, c))) {
        const auto inside = std::count_if(orbit.begin(), orbit.end(), [&](std::uint32_t m) { return in[m]; });
        if (inside == 0) continue;
        if (static_cast<std::size_t>(inside) != orbit.size()) {
          fail(ErrorKind::Invariant, "unfactorizable morphisms are not closed under the group actions");
        }
        out.push_back({{a, c, orbit.front()}, std::move(orbit)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Orbit& x, const Orbit& y) { return x.alpha < y.alpha; });
  return out;
}

std::vector<Orbit> orbit_representatives(const EICategory& cat) {
  return orbit_representatives(cat, unfactorizables(cat));
}

StabilizerData stabilizer_data(const Biset& b, const GroupPtr& h, const GroupPtr& g, std::uint32_t point) {
  std::vector<bool> h_orbit(b.size, false);
  std::vector<bool> g_orbit(b.size, false);
  for (const auto& l : b.left) h_orbit[l[point]] = true;
  for (const auto& r : b.right) g_orbit[r[point]] = true;

  std::vector<std::size_t> g0, g1, h0, h1;
  for (std::size_t x = 0; x < g->order(); ++x) {
    const std::uint32_t img = b.right[x][point];
    if (img == point) g0.push_back(x);
    if (h_orbit[img]) g1.push_back(x);
  }
  for (std::size_t y = 0; y < h->order(); ++y) {
    const std::uint32_t img = b.left[y][point];
    if (img == point) h0.push_back(y);
    if (g_orbit[img]) h1.push_back(y);
  }
  StabilizerData sd;
  sd.g0 = stabilizer_closure(g, g0);
  sd.g1 = stabilizer_closure(g, g1);
  sd.h0 = stabilizer_closure(h, h0);
  sd.h1 = stabilizer_closure(h, h1);
  if (sd.g0.order() != g0.size() || sd.g1.order() != g1.size() || sd.h0.order() != h0.size() ||
      sd.h1.order() != h1.size()) {
    fail(ErrorKind::Invariant, "stabilizer sets are not subgroups");
  }
  sd.quot_g = std::make_shared<QuotientGroup>(quotient(sd.g1, sd.g0));
  sd.quot_h = std::make_shared<QuotientGroup>(quotient(sd.h1, sd.h0));
  sd.phi.source = sd.quot_g;
  sd.phi.target = sd.quot_h;
  sd.phi.map.assign(sd.quot_g->order(), static_cast<std::size_t>(-1));
  for (std::size_t x : g1) {
    const std::uint32_t img = b.right[x][point];
    std::size_t y = 0;
    while (y < h->order() && b.left[y][point] != img) ++y;
    if (y == h->order()) fail(ErrorKind::Invariant, "no h with h.alpha = alpha.g");
    const std::size_t from = sd.quot_g->project(x);
    const std::size_t to = sd.quot_h->project(y);
    if (sd.phi.map[from] == static_cast<std::size_t>(-1)) {
      sd.phi.map[from] = to;
    } else if (sd.phi.map[from] != to) {
      fail(ErrorKind::Invariant, "quotient isomorphism is not well defined");
    }
  }
  if (!sd.phi.is_valid()) fail(ErrorKind::Invariant, "G1/G0 -> H1/H0 is not an isomorphism");
  return sd;
}

StabilizerData stabilizer_data(const EICategory& cat, const MorphId& alpha) {
  require(!alpha.is_endo(), ErrorKind::Precondition, "stabilizer data needs a non-endomorphism");
  StabilizerData sd = stabilizer_data(cat.hom(alpha.source, alpha.target), cat.group(alpha.target),
                                      cat.group(alpha.source), static_cast<std::uint32_t>(alpha.index));
  sd.alpha = alpha;
  return sd;
}

Biset sub_biset(const Biset& b, const std::vector<std::uint32_t>& points) {
  std::vector<std::uint32_t> local(b.size, static_cast<std::uint32_t>(-1));
  for (std::size_t i = 0; i < points.size(); ++i) local[points[i]] = static_cast<std::uint32_t>(i);
  Biset out;
  out.size = points.size();
  auto restrict_table = [&](const ActionTable& t) {
    ActionTable r(t.size(), std::vector<std::uint32_t>(points.size()));
    for (std::size_t e = 0; e < t.size(); ++e) {
      for (std::size_t i = 0; i < points.size(); ++i) {
        const std::uint32_t v = local[t[e][points[i]]];
        if (v == static_cast<std::uint32_t>(-1)) fail(ErrorKind::Precondition, "subset is not invariant");
        r[e][i] = v;
      }
    }
    return r;
  };
  out.left = restrict_table(b.left);
  out.right = restrict_table(b.right);
  return out;
}

EIQuiverData ei_quiver_of(const EICategory& cat) {
  EIQuiverData q;
  for (std::size_t x = 0; x < cat.object_count(); ++x) {
    q.ids.push_back(cat.id(x));
    q.groups.push_back(cat.group(x));
  }
  for (auto& orbit : orbit_representatives(cat)) {
    EIQuiverArrow arrow;
    arrow.from = orbit.alpha.source;
    arrow.to = orbit.alpha.target;
    arrow.biset = sub_biset(cat.hom(arrow.from, arrow.to), orbit.members);
    arrow.alpha = orbit.alpha;
    arrow.orbit = std::move(orbit.members);
    q.arrows.push_back(std::move(arrow));
  }
  return q;
}

EICategory full_subcategory(const EICategory& cat, const std::vector<std::size_t>& objects) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(cat.object_count(), none);
  for (std::size_t i = 0; i < objects.size(); ++i) local[objects[i]] = i;
  CategoryData data;
  for (std::size_t x : objects) data.objects.push_back({cat.id(x), cat.group(x)});
  for (const auto& h : cat.data().homs) {
    if (local[h.from] == none || local[h.to] == none) continue;
    HomData copy = h;
    copy.from = local[h.from];
    copy.to = local[h.to];
    data.homs.push_back(std::move(copy));
  }
  for (const auto& c : cat.data().compositions) {
    if (local[c.from] == none || local[c.mid] == none || local[c.to] == none) continue;
    CompositionData copy = c;
    copy.from = local[c.from];
    copy.mid = local[c.mid];
    copy.to = local[c.to];
    data.compositions.push_back(std::move(copy));
  }
  return EICategory::build(std::move(data));
}

}  // namespace eiq
