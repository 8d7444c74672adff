#include "eiq/random_category.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "eiq/error.hpp"
#include "eiq/freecover.hpp"

namespace eiq {

namespace {

using Images = std::vector<std::vector<std::uint32_t>>;

struct PoolEntry {
  std::string name;
  std::size_t degree;
  Images generators;
};

const std::vector<PoolEntry>& pool_entries() {
  static const std::vector<PoolEntry> pool = {
      {"1", 1, {}},
      {"C2", 2, {{1, 0}}},
      {"C3", 3, {{1, 2, 0}}},
      {"C4", 4, {{1, 2, 3, 0}}},
      {"V4", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}},
      {"C5", 5, {{1, 2, 3, 4, 0}}},
      {"S3", 3, {{1, 0, 2}, {1, 2, 0}}},
      {"C6", 6, {{1, 2, 3, 4, 5, 0}}},
      {"C7", 7, {{1, 2, 3, 4, 5, 6, 0}}},
      {"D4", 4, {{1, 2, 3, 0}, {3, 2, 1, 0}}},
      {"C2^3", 6, {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}}},
  };
  return pool;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

const std::vector<std::string>& group_pool() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : pool_entries()) out.push_back(e.name);
    return out;
  }();
  return names;
}

GroupPtr pooled_group(const std::string& name) {
  static std::map<std::string, GroupPtr> cache;
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (const auto& e : pool_entries()) {
    if (e.name != name) continue;
    std::vector<Permutation> gens;
    for (const auto& img : e.generators) gens.emplace_back(img);
    return cache[name] = PermGroup::generate(e.degree, std::move(gens));
  }
  fail(ErrorKind::Precondition, "no pooled group named " + name);
}

GroupPtr random_group(Rng& rng, std::size_t max_order) {
  std::vector<GroupPtr> fits;
  for (const auto& name : group_pool()) {
    GroupPtr g = pooled_group(name);
    if (g->order() <= max_order) fits.push_back(g);
  }
  require(!fits.empty(), ErrorKind::Precondition, "no pooled group is small enough");
  return fits[uniform(rng, 0, fits.size() - 1)];
}

Biset random_transitive_biset(const GroupPtr& h, const GroupPtr& g, Rng& rng, std::size_t max_size) {
  const std::size_t nh = h->order();
  const std::size_t ng = g->order();
  const std::size_t n = nh * ng;
  // Pairs (a, b) are encoded as a * ng + b.
  auto mul = [&](std::size_t x, std::size_t y) { return h->multiply(x / ng, y / ng) * ng + g->multiply(x % ng, y % ng); };

  std::vector<std::size_t> sub;
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<std::size_t> gens;
    const std::size_t k = uniform(rng, 0, 2);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(uniform(rng, 0, n - 1));
    std::vector<bool> in(n, false);
    std::vector<std::size_t> members{0};
    in[0] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t s : gens) {
        const std::size_t next = mul(members[i], s);
        if (!in[next]) {
          in[next] = true;
          members.push_back(next);
        }
      }
    }
    if (n / members.size() <= max_size) {
      sub = std::move(members);
      break;
    }
  }
  if (sub.empty()) {
    sub.resize(n);
    std::iota(sub.begin(), sub.end(), 0);
  }

  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset(n, kUnset);
  std::vector<std::size_t> reps;
  for (std::size_t e = 0; e < n; ++e) {
    if (coset[e] != kUnset) continue;
    for (std::size_t l : sub) coset[mul(e, l)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(e);
  }
  Biset b;
  b.size = reps.size();
  b.left.assign(nh, std::vector<std::uint32_t>(b.size));
  b.right.assign(ng, std::vector<std::uint32_t>(b.size));
  for (std::size_t i = 0; i < b.size; ++i) {
    for (std::size_t a = 0; a < nh; ++a) b.left[a][i] = coset[mul(a * ng, reps[i])];
    for (std::size_t c = 0; c < ng; ++c) b.right[c][i] = coset[mul(g->inverse(c), reps[i])];
  }
  return b;
}

EIQuiverData random_ei_quiver(Rng& rng, const RandomCategoryOptions& opts) {
  EIQuiverData q;
  const std::size_t n = uniform(rng, opts.min_objects, opts.max_objects);
  for (std::size_t x = 0; x < n; ++x) {
    q.ids.push_back("x" + std::to_string(x));
    q.groups.push_back(random_group(rng, opts.max_group_order));
  }
  // Arrows run forward along a random ordering of the objects.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  auto add = [&](std::size_t i, std::size_t j) {
    EIQuiverArrow a;
    a.from = order[i];
    a.to = order[j];
    a.biset = random_transitive_biset(q.groups[a.to], q.groups[a.from], rng, opts.max_biset);
    a.orbit.resize(a.biset.size);
    std::iota(a.orbit.begin(), a.orbit.end(), 0);
    q.arrows.push_back(std::move(a));
  };
  for (std::size_t j = 1; j < n; ++j) add(uniform(rng, 0, j - 1), j);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng, 0.25)) add(i, j);
    }
  }
  return q;
}

EICategory random_free_category(Rng& rng, const RandomCategoryOptions& opts) {
  for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
    const EIQuiverData q = random_ei_quiver(rng, opts);
    try {
      EICategory cat = generate_free_category(q, 4 * opts.max_morphisms);
      if (cat.morphism_count() <= opts.max_morphisms) return cat;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeLimit) throw;
    }
  }
  fail(ErrorKind::SizeLimit, "no random free category within the morphism bound");
}

EICategory quotient_category(const EICategory& cat, std::size_t from, std::size_t to, std::uint32_t a, std::uint32_t b) {
  const std::size_t n = cat.object_count();
  std::vector<std::vector<std::uint32_t>> parent(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      parent[x * n + y].resize(cat.hom_size(x, y));
      std::iota(parent[x * n + y].begin(), parent[x * n + y].end(), 0);
    }
  }
  auto find = [&](std::size_t pair, std::uint32_t v) {
    auto& p = parent[pair];
    while (p[v] != v) v = p[v] = p[p[v]];
    return v;
  };
  // Every merged pair is pushed through composition on both sides.
  std::vector<std::pair<MorphId, MorphId>> work{{MorphId{from, to, a}, MorphId{from, to, b}}};
  while (!work.empty()) {
    auto [m1, m2] = work.back();
    work.pop_back();
    const std::size_t pair = m1.source * n + m1.target;
    const std::uint32_t r1 = find(pair, static_cast<std::uint32_t>(m1.index));
    const std::uint32_t r2 = find(pair, static_cast<std::uint32_t>(m2.index));
    if (r1 == r2) continue;
    parent[pair][std::max(r1, r2)] = std::min(r1, r2);
    for (std::size_t z = 0; z < n; ++z) {
      const std::size_t count = z == m1.target ? cat.group(z)->order() : cat.hom_size(m1.target, z);
      for (std::size_t k = 0; k < count; ++k) {
        const MorphId m{m1.target, z, k};
        work.emplace_back(cat.compose(m, m1), cat.compose(m, m2));
      }
    }
    for (std::size_t w = 0; w < n; ++w) {
      const std::size_t count = w == m1.source ? cat.group(w)->order() : cat.hom_size(w, m1.source);
      for (std::size_t k = 0; k < count; ++k) {
        const MorphId m{w, m1.source, k};
        work.emplace_back(cat.compose(m1, m), cat.compose(m2, m));
      }
    }
  }

  // Classes are numbered by their least member.
  std::vector<std::vector<std::uint32_t>> cls(n * n);
  std::vector<std::vector<std::uint32_t>> rep(n * n);
  for (std::size_t pair = 0; pair < n * n; ++pair) {
    std::map<std::uint32_t, std::uint32_t> number;
    for (std::uint32_t v = 0; v < parent[pair].size(); ++v) {
      const std::uint32_t r = find(pair, v);
      if (!number.contains(r)) {
        number[r] = static_cast<std::uint32_t>(rep[pair].size());
        rep[pair].push_back(v);
      }
      cls[pair].push_back(number[r]);
    }
  }

  CategoryData data;
  for (std::size_t x = 0; x < n; ++x) data.objects.push_back({cat.id(x), cat.group(x)});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t pair = x * n + y;
      if (x == y || rep[pair].empty()) continue;
      HomData h;
      h.from = x;
      h.to = y;
      h.size = rep[pair].size();
      for (std::size_t gen : cat.group(y)->generator_positions()) {
        std::vector<std::uint32_t> img;
        for (std::uint32_t r : rep[pair]) img.push_back(cls[pair][cat.compose({y, y, gen}, {x, y, r}).index]);
        h.left_generators.push_back(std::move(img));
      }
      for (std::size_t gen : cat.group(x)->generator_positions()) {
        std::vector<std::uint32_t> img;
        for (std::uint32_t r : rep[pair]) img.push_back(cls[pair][cat.compose({x, y, r}, {x, x, gen}).index]);
        h.right_generators.push_back(std::move(img));
      }
      data.homs.push_back(std::move(h));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (rep[x * n + y].empty() || rep[y * n + z].empty()) continue;
        CompositionData c;
        c.from = x;
        c.mid = y;
        c.to = z;
        for (std::uint32_t o : rep[y * n + z]) {
          std::vector<std::uint32_t> row;
          for (std::uint32_t i : rep[x * n + y]) row.push_back(cls[x * n + z][cat.compose({y, z, o}, {x, y, i}).index]);
          c.table.push_back(std::move(row));
        }
        data.compositions.push_back(std::move(c));
      }
    }
  }
  return EICategory::build(std::move(data));
}

EICategory random_non_free_category(Rng& rng, const RandomCategoryOptions& opts) {
  RandomCategoryOptions o = opts;
  o.min_objects = std::max<std::size_t>(3, o.min_objects);
  require(o.max_objects >= 3, ErrorKind::Precondition, "non-free categories need at least three objects");
  for (std::size_t attempt = 0; attempt < o.max_attempts; ++attempt) {
    EICategory free = random_free_category(rng, o);
    const UnfactorizableSets unf = unfactorizables(free);
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t x = 0; x < free.object_count(); ++x) {
      for (std::size_t z = 0; z < free.object_count(); ++z) {
        if (x != z && free.hom_size(x, z) >= unf.at(x, z).size() + 2) candidates.emplace_back(x, z);
      }
    }
    if (candidates.empty()) continue;
    const auto [x, z] = candidates[uniform(rng, 0, candidates.size() - 1)];
    std::vector<std::uint32_t> composites;
    const auto& u = unf.at(x, z);
    for (std::uint32_t m = 0; m < free.hom_size(x, z); ++m) {
      if (!std::binary_search(u.begin(), u.end(), m)) composites.push_back(m);
    }
    std::shuffle(composites.begin(), composites.end(), rng);
    return quotient_category(free, x, z, composites[0], composites[1]);
  }
  fail(ErrorKind::SizeLimit, "no random non-free category found");
}

MatrixFp random_matrix(Index rows, Index cols, const PrimeField& f, Rng& rng) {
  std::uniform_int_distribution<Scalar> dist(0, f.p() - 1);
  MatrixFp m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
  }
  return m;
}

MatrixFp random_invertible(Index n, const PrimeField& f, Rng& rng) {
  while (true) {
    MatrixFp m = random_matrix(n, n, f, rng);
    if (rank(m, f) == n) return m;
  }
}

QuiverRep random_quiver_rep(const MoritaContext& ctx, Rng& rng, std::size_t max_dim) {
  const OrdinaryQuiver& q = ctx.quiver();
  QuiverRep r;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) r.dims.push_back(uniform(rng, 0, max_dim));
  for (const auto& unit : ctx.units()) {
    const auto& a = q.arrows[unit.arrow];
    r.maps.push_back(random_matrix(static_cast<Index>(r.dims[a.to]), static_cast<Index>(r.dims[a.from]), ctx.field(), rng));
  }
  return r;
}

CatRep random_cat_rep(const MoritaContext& ctx, Rng& rng, std::size_t max_dim, bool change_basis) {
  CatRep r = ctx.inverse(random_quiver_rep(ctx, rng, max_dim));
  if (!change_basis) return r;
  const PrimeField& f = ctx.field();
  std::vector<MatrixFp> p, pinv;
  for (std::size_t x = 0; x < r.dims.size(); ++x) {
    p.push_back(random_invertible(static_cast<Index>(r.dims[x]), f, rng));
    pinv.push_back(inverse(p.back(), f));
    for (auto& g : r.generators[x]) g = f.mul(f.mul(p[x], g), pinv[x]);
  }
  for (std::size_t k = 0; k < r.alpha.size(); ++k) {
    const MorphId& a = ctx.representatives()[k].alpha;
    r.alpha[k] = f.mul(f.mul(p[a.target], r.alpha[k]), pinv[a.source]);
  }
  return r;
}

}  // namespace eiq
