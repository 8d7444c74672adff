#include "eiq/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

#include "eiq/error.hpp"

namespace eiq {

namespace {

constexpr Scalar kPrimeSearchLimit = 1000000;

std::pair<std::size_t, std::size_t> exponent_and_order(std::span<const GroupPtr> groups) {
  std::size_t e = 1;
  std::size_t m = 1;
  for (const auto& g : groups) {
    e = std::lcm(e, g->exponent());
    m = std::max(m, g->order());
  }
  return {e, m};
}

// Class multiplication matrix for class r: entry (s, t) counts x in C_r with
// x^-1 z_t in C_s, z_t the representative of C_t.
MatrixFp class_matrix(const PermGroup& g, std::size_t r, const PrimeField& f) {
  const auto& classes = g.classes();
  const auto k = static_cast<Index>(classes.size());
  MatrixFp m = MatrixFp::Zero(k, k);
  for (Index t = 0; t < k; ++t) {
    const std::size_t z = classes[static_cast<std::size_t>(t)].representative;
    for (std::size_t x : classes[r].members) {
      const std::size_t y = g.multiply(g.inverse(x), z);
      m(static_cast<Index>(g.class_of(y)), t) += 1;
    }
  }
  return f.reduce(m);
}

}  // namespace

bool SplittingPrime::certifies(const PermGroup& g) const {
  const auto p = static_cast<std::size_t>(field.p());
  return (p - 1) % g.exponent() == 0 && p > 2 * g.order();
}

SplittingPrime choose_splitting_prime(std::span<const GroupPtr> groups) {
  require(!groups.empty(), ErrorKind::Precondition, "no groups to certify a prime for");
  const auto [e, m] = exponent_and_order(groups);
  for (Scalar p = static_cast<Scalar>(e) + 1; p <= kPrimeSearchLimit; p += static_cast<Scalar>(e)) {
    if (p > static_cast<Scalar>(2 * m) && is_prime(p)) return {PrimeField(p), e, m};
  }
  fail(ErrorKind::SizeLimit, "no splitting prime below " + std::to_string(kPrimeSearchLimit));
}

SplittingPrime certify_prime(Scalar p, std::span<const GroupPtr> groups) {
  const auto [e, m] = exponent_and_order(groups);
  require(is_prime(p), ErrorKind::Precondition, std::to_string(p) + " is not prime");
  require((p - 1) % static_cast<Scalar>(e) == 0, ErrorKind::Precondition,
          "prime " + std::to_string(p) + " is not 1 mod the exponent " + std::to_string(e));
  require(p > static_cast<Scalar>(2 * m), ErrorKind::Precondition,
          "prime " + std::to_string(p) + " does not exceed twice the largest group order " + std::to_string(m));
  return {PrimeField(p), e, m};
}

CharTable::CharTable(GroupPtr group, PrimeField field, std::vector<ClassFunction> irreducibles,
                     std::vector<std::size_t> dims)
    : group_(std::move(group)), field_(field), irreducibles_(std::move(irreducibles)), dims_(std::move(dims)) {}

std::vector<std::size_t> CharTable::decompose(const ClassFunction& chi) const {
  std::vector<std::size_t> out;
  out.reserve(irreducibles_.size());
  for (const auto& irr : irreducibles_) out.push_back(multiplicity(chi, irr, field_));
  return out;
}

CharTable character_table(const GroupPtr& gp, const SplittingPrime& prime) {
  const PermGroup& g = *gp;
  const PrimeField& f = prime.field;
  require(prime.certifies(g), ErrorKind::Precondition,
          "prime " + std::to_string(f.p()) + " is not certified for a group of order " + std::to_string(g.order()));
  const auto& classes = g.classes();
  const std::size_t k = classes.size();

  // Split F_p^k into common eigenspaces, one class matrix at a time.
  std::vector<MatrixFp> spaces{MatrixFp::Identity(static_cast<Index>(k), static_cast<Index>(k))};
  for (std::size_t r = 0; r < k && spaces.size() < k; ++r) {
    const MatrixFp m = class_matrix(g, r, f);
    std::vector<MatrixFp> next;
    for (const auto& basis : spaces) {
      if (basis.cols() == 1) {
        next.push_back(basis);
        continue;
      }
      const MatrixFp restricted = f.mul(left_inverse(basis, f), f.mul(m, basis));
      const auto roots = roots_in_field(characteristic_polynomial(restricted, f), f);
      Index total = 0;
      for (Scalar lambda : roots) {
        MatrixFp shifted = restricted;
        for (Index i = 0; i < shifted.rows(); ++i) shifted(i, i) = f.sub(shifted(i, i), lambda);
        const MatrixFp sub = f.mul(basis, nullspace(shifted, f));
        total += sub.cols();
        next.push_back(sub);
      }
      if (total != basis.cols()) fail(ErrorKind::Invariant, "class algebra did not diagonalize over F_p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) fail(ErrorKind::Invariant, "class matrices did not separate the irreducibles");

  const auto order = static_cast<Scalar>(g.order());
  struct Row {
    std::size_t dim;
    std::vector<Scalar> values;
  };
  std::vector<Row> rows;
  for (const auto& w : spaces) {
    // Normalize so the identity class (class 0) has central character 1.
    const Scalar scale = f.inv(w(0, 0));
    std::vector<Scalar> omega(k);
    for (std::size_t t = 0; t < k; ++t) omega[t] = f.mul(w(static_cast<Index>(t), 0), scale);
    Scalar s = 0;
    for (std::size_t t = 0; t < k; ++t) {
      const Scalar term = f.mul(omega[t], omega[g.inverse_class(t)]);
      s = f.add(s, f.div(term, static_cast<Scalar>(classes[t].members.size())));
    }
    const Scalar d2 = f.div(order, s);
    std::size_t dim = 0;
    for (Scalar d = 1; d * d <= order; ++d) {
      if (f.reduce(d * d) == d2) {
        dim = static_cast<std::size_t>(d);
        break;
      }
    }
    if (dim == 0) fail(ErrorKind::Invariant, "character degree is not an integer square root");
    std::vector<Scalar> values(k);
    for (std::size_t t = 0; t < k; ++t) {
      values[t] = f.div(f.mul(omega[t], static_cast<Scalar>(dim)), static_cast<Scalar>(classes[t].members.size()));
    }
    rows.push_back({dim, std::move(values)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.dim, a.values) < std::tie(b.dim, b.values);
  });

  std::vector<ClassFunction> irreducibles;
  std::vector<std::size_t> dims;
  std::size_t sum_sq = 0;
  for (auto& row : rows) {
    sum_sq += row.dim * row.dim;
    dims.push_back(row.dim);
    irreducibles.push_back({gp, std::move(row.values)});
  }
  if (sum_sq != g.order()) fail(ErrorKind::Invariant, "character degrees do not satisfy sum of squares");
  if (irreducibles.front() != trivial_character(gp)) fail(ErrorKind::Invariant, "first character is not trivial");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (inner_product(irreducibles[i], irreducibles[j], f) != (i == j ? 1 : 0)) {
        fail(ErrorKind::Invariant, "character rows are not orthonormal");
      }
    }
  }
  return CharTable(gp, f, std::move(irreducibles), std::move(dims));
}

const CharTable& CharTableCache::get(const GroupPtr& g) {
  auto it = tables_.find(g.get());
  if (it != tables_.end()) return *it->second;
  auto table = std::make_unique<CharTable>(character_table(g, prime_));
  return *tables_.emplace(g.get(), std::move(table)).first->second;
}

ClassFunction trivial_character(const GroupPtr& g) { return {g, std::vector<Scalar>(g->classes().size(), 1)}; }

Scalar inner_product(const ClassFunction& a, const ClassFunction& b, const PrimeField& f) {
  require(a.group == b.group, ErrorKind::Precondition, "inner product of class functions on different groups");
  const PermGroup& g = *a.group;
  Scalar s = 0;
  for (std::size_t t = 0; t < g.classes().size(); ++t) {
    const auto size = static_cast<Scalar>(g.classes()[t].members.size());
    s = f.add(s, f.mul(size, f.mul(a.values[t], b.values[g.inverse_class(t)])));
  }
  return f.div(s, static_cast<Scalar>(g.order()));
}

std::size_t multiplicity(const ClassFunction& a, const ClassFunction& b, const PrimeField& f) {
  return static_cast<std::size_t>(inner_product(a, b, f));
}

std::vector<std::size_t> class_fusion(const Subgroup& sub) {
  const PermGroup& local = *sub.group();
  std::vector<std::size_t> out;
  for (const auto& cls : local.classes()) out.push_back(sub.parent()->class_of(sub.to_parent(cls.representative)));
  return out;
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& sub) {
  require(chi.group == sub.parent(), ErrorKind::Precondition, "restriction from a group that is not the parent");
  ClassFunction out{sub.group(), {}};
  for (std::size_t c : class_fusion(sub)) out.values.push_back(chi.values[c]);
  return out;
}

std::size_t restriction_multiplicity(const ClassFunction& chi, const Subgroup& sub, const ClassFunction& mu,
                                     const PrimeField& f) {
  return multiplicity(restrict_to(chi, sub), mu, f);
}

ClassFunction inflate(const ClassFunction& chi, const QuotientGroup& q) {
  require(chi.group == q.group(), ErrorKind::Precondition, "inflation of a class function off the quotient");
  const Subgroup& base = q.base();
  ClassFunction out{base.group(), {}};
  for (const auto& cls : base.group()->classes()) {
    const std::size_t coset = q.project(base.to_parent(cls.representative));
    out.values.push_back(chi.values[q.group()->class_of(q.coset_to_element(coset))]);
  }
  return out;
}

ClassFunction transport(const ClassFunction& chi, const GroupIso& iso) {
  require(chi.group == iso.source->group(), ErrorKind::Precondition, "transport of a class function off the source");
  const QuotientGroup& src = *iso.source;
  const QuotientGroup& dst = *iso.target;
  ClassFunction out{dst.group(), {}};
  for (const auto& cls : dst.group()->classes()) {
    const std::size_t back = iso.apply_inverse(dst.element_to_coset(cls.representative));
    out.values.push_back(chi.values[src.group()->class_of(src.coset_to_element(back))]);
  }
  return out;
}

ClassFunction permutation_character(const GroupPtr& g, std::size_t points,
                                    const std::function<std::size_t(std::size_t, std::size_t)>& act,
                                    const PrimeField& f) {
  ClassFunction out{g, {}};
  for (const auto& cls : g->classes()) {
    Scalar fixed = 0;
    for (std::size_t x = 0; x < points; ++x) {
      if (act(cls.representative, x) == x) ++fixed;
    }
    out.values.push_back(f.reduce(fixed));
  }
  return out;
}

}  // namespace eiq
