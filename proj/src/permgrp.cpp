#include "eiq/permgrp.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "eiq/error.hpp"

namespace eiq {

namespace {

constexpr std::size_t kTableLimit = 1024;

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    require(v < images_.size() && !seen[v], ErrorKind::Validation, "permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), ErrorKind::Precondition, "permutation degree mismatch");
  Permutation out;
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = a.images_[b.images_[i]];
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

std::shared_ptr<const PermGroup> PermGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                                                     std::size_t bound) {
  for (const auto& g : generators) {
    require(g.degree() == degree, ErrorKind::Validation,
            "generator of degree " + std::to_string(g.degree()) + " in a group of degree " + std::to_string(degree));
  }
  std::shared_ptr<PermGroup> grp(new PermGroup());
  grp->degree_ = degree;
  grp->generators_ = std::move(generators);

  std::vector<Permutation> level{Permutation::identity(degree)};
  grp->index_.emplace(level.front(), 0);
  grp->elements_.push_back(level.front());
  while (!level.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : level) {
      for (const auto& s : grp->generators_) {
        Permutation candidate = s * e;
        if (grp->index_.contains(candidate)) continue;
        grp->index_.emplace(candidate, static_cast<std::size_t>(-1));
        next.push_back(std::move(candidate));
        require(grp->index_.size() <= bound, ErrorKind::SizeLimit,
                "group exceeds the enumeration bound of " + std::to_string(bound));
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& e : next) {
      grp->index_[e] = grp->elements_.size();
      grp->elements_.push_back(e);
    }
    level = std::move(next);
  }

  for (const auto& s : grp->generators_) grp->generator_positions_.push_back(grp->index_.at(s));
  grp->build_tables();
  grp->build_classes();
  return grp;
}

void PermGroup::build_tables() {
  const std::size_t n = order();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table_[a * n + b] = static_cast<std::uint32_t>(index_.at(elements_[a] * elements_[b]));
      }
    }
  }
  inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) inverses_[a] = index_.at(elements_[a].inverse());

  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t elt_order = 1;
    for (std::size_t x = a; x != identity(); x = multiply(x, a)) ++elt_order;
    exponent_ = std::lcm(exponent_, elt_order);
  }
}

std::size_t PermGroup::multiply(std::size_t a, std::size_t b) const {
  const std::size_t n = order();
  if (!table_.empty()) return table_[a * n + b];
  return index_.at(elements_[a] * elements_[b]);
}

std::optional<std::size_t> PermGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::position(const Permutation& p) const {
  auto pos = find(p);
  require(pos.has_value(), ErrorKind::Precondition, "permutation is not a group element");
  return *pos;
}

void PermGroup::build_classes() {
  const std::size_t n = order();
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> classes;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t s : generator_positions_) {
        const std::size_t y = conjugate(s, orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    const std::size_t rep = *std::min_element(orbit.begin(), orbit.end(), [this](std::size_t a, std::size_t b) {
      return elements_[a] < elements_[b];
    });
    classes.push_back({rep, std::move(orbit)});
  }
  std::sort(classes.begin(), classes.end(), [this](const ConjugacyClass& a, const ConjugacyClass& b) {
    return elements_[a.representative] < elements_[b.representative];
  });
  classes_ = std::move(classes);
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (std::size_t m : classes_[c].members) class_of_[m] = c;
  }
  inverse_class_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) inverse_class_[c] = class_of_[inverse(classes_[c].representative)];
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) { return g.classes(); }

std::size_t Subgroup::to_local(std::size_t parent_pos) const {
  const std::size_t local = local_[parent_pos];
  require(local != kAbsent, ErrorKind::Precondition, "element is not in the subgroup");
  return local;
}

bool Subgroup::is_normal_in(const Subgroup& over) const {
  for (std::size_t g : over.members()) {
    for (std::size_t x : members_) {
      if (!contains(parent_->conjugate(g, x))) return false;
    }
  }
  return true;
}

Subgroup stabilizer_closure(const GroupPtr& parent, std::span<const std::size_t> members) {
  const PermGroup& grp = *parent;
  std::vector<std::size_t> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<bool> in(grp.order(), false);
  std::vector<std::size_t> closure{PermGroup::identity()};
  in[PermGroup::identity()] = true;
  std::vector<std::size_t> gens;
  for (std::size_t m : sorted) {
    if (in[m]) continue;
    gens.push_back(m);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (std::size_t s : gens) {
        const std::size_t y = grp.multiply(closure[i], s);
        if (!in[y]) {
          in[y] = true;
          closure.push_back(y);
        }
      }
    }
  }

  Subgroup sub;
  sub.parent_ = parent;
  sub.members_ = std::move(closure);
  std::sort(sub.members_.begin(), sub.members_.end());
  std::vector<Permutation> gen_perms;
  for (std::size_t s : gens) gen_perms.push_back(grp.element(s));
  sub.group_ = PermGroup::generate(grp.degree(), std::move(gen_perms), grp.order());
  if (sub.group_->order() != sub.members_.size()) fail(ErrorKind::Invariant, "subgroup enumeration disagrees");
  sub.local_.assign(grp.order(), Subgroup::kAbsent);
  sub.to_parent_.resize(sub.group_->order());
  for (std::size_t i = 0; i < sub.group_->order(); ++i) {
    const std::size_t pp = grp.position(sub.group_->element(i));
    sub.to_parent_[i] = pp;
    sub.local_[pp] = i;
  }
  return sub;
}

Subgroup whole_group(const GroupPtr& parent) {
  std::vector<std::size_t> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return stabilizer_closure(parent, all);
}

Subgroup trivial_subgroup(const GroupPtr& parent) {
  const std::size_t id = PermGroup::identity();
  return stabilizer_closure(parent, std::span<const std::size_t>(&id, 1));
}

QuotientGroup quotient(const Subgroup& base, const Subgroup& kernel) {
  require(base.parent() == kernel.parent(), ErrorKind::Precondition, "quotient of subgroups of different groups");
  for (std::size_t k : kernel.members()) {
    require(base.contains(k), ErrorKind::Validation, "normality: kernel is not contained in the base");
  }
  require(kernel.is_normal_in(base), ErrorKind::Validation, "normality: kernel is not normal in the base");

  const PermGroup& grp = *base.parent();
  QuotientGroup q;
  q.base_ = base;
  q.kernel_ = kernel;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  q.coset_of_.assign(grp.order(), kNone);
  for (std::size_t m : base.members()) {
    if (q.coset_of_[m] != kNone) continue;
    std::vector<std::size_t> coset;
    for (std::size_t k : kernel.members()) coset.push_back(grp.multiply(m, k));
    std::sort(coset.begin(), coset.end());
    for (std::size_t c : coset) q.coset_of_[c] = q.cosets_.size();
    q.cosets_.push_back(std::move(coset));
  }

  const std::size_t n = q.cosets_.size();
  q.product_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      q.product_[a * n + b] = q.coset_of_[grp.multiply(q.cosets_[a].front(), q.cosets_[b].front())];
    }
  }

  auto regular = [&](std::size_t c) {
    std::vector<std::uint32_t> images(n);
    for (std::size_t d = 0; d < n; ++d) images[d] = static_cast<std::uint32_t>(q.product_[c * n + d]);
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (std::size_t s : base.group()->generator_positions()) gens.push_back(regular(q.coset_of_[base.to_parent(s)]));
  q.group_ = PermGroup::generate(n, std::move(gens), n);
  if (q.group_->order() != n) fail(ErrorKind::Invariant, "quotient realization has the wrong order");
  q.coset_to_element_.resize(n);
  q.element_to_coset_.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t e = q.group_->position(regular(c));
    q.coset_to_element_[c] = e;
    q.element_to_coset_[e] = c;
  }
  return q;
}

std::size_t QuotientGroup::project(std::size_t parent_pos) const {
  const std::size_t c = coset_of_[parent_pos];
  require(c != static_cast<std::size_t>(-1), ErrorKind::Precondition, "element lies outside the quotient base");
  return c;
}

std::size_t QuotientGroup::coset_product(std::size_t a, std::size_t b) const { return product_[a * order() + b]; }

std::size_t GroupIso::apply_inverse(std::size_t coset) const {
  auto it = std::find(map.begin(), map.end(), coset);
  require(it != map.end(), ErrorKind::Precondition, "coset outside the isomorphism image");
  return static_cast<std::size_t>(it - map.begin());
}

bool GroupIso::is_valid() const {
  if (!source || !target) return false;
  const std::size_t n = source->order();
  if (map.size() != n || target->order() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (map[source->coset_product(a, b)] != target->coset_product(map[a], map[b])) return false;
    }
  }
  return true;
}

}  // namespace eiq
