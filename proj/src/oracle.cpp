#include "eiq/oracle.hpp"

#include <set>
#include <string>

#include "eiq/error.hpp"

namespace eiq {

StructureConstantAlgebra::StructureConstantAlgebra(const EICategory& cat) : objects_(cat.object_count()) {
  const std::size_t n = objects_;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      offsets_.push_back(basis_.size());
      for (std::size_t i = 0; i < cat.hom_size(x, y); ++i) basis_.push_back({x, y, i});
    }
  }
  const std::size_t d = basis_.size();
  table_.assign(d * d, kZero);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (basis_[a].source != basis_[b].target) continue;
      table_[a * d + b] = static_cast<std::int64_t>(index_of(cat.compose(basis_[a], basis_[b])));
    }
  }
}

std::size_t StructureConstantAlgebra::index_of(const MorphId& m) const {
  return offsets_[m.source * objects_ + m.target] + m.index;
}

std::vector<std::size_t> StructureConstantAlgebra::identity_terms() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < objects_; ++x) out.push_back(index_of({x, x, PermGroup::identity()}));
  return out;
}

bool StructureConstantAlgebra::is_associative() const {
  const std::size_t d = basis_.size();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const std::int64_t ab = product(a, b);
      for (std::size_t c = 0; c < d; ++c) {
        const std::int64_t bc = product(b, c);
        const std::int64_t lhs = ab == kZero ? kZero : product(static_cast<std::size_t>(ab), c);
        const std::int64_t rhs = bc == kZero ? kZero : product(a, static_cast<std::size_t>(bc));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

RadicalData radical_data(const StructureConstantAlgebra& a, const EICategory& cat, const PrimeField& f) {
  const std::size_t n = cat.object_count();
  const std::size_t d = a.dimension();
  std::vector<std::size_t> rad;
  for (std::size_t i = 0; i < d; ++i) {
    if (a.basis(i).source != a.basis(i).target) rad.push_back(i);
  }
  auto in_rad = [&](std::size_t i) { return a.basis(i).source != a.basis(i).target; };

  for (std::size_t r : rad) {
    for (std::size_t b = 0; b < d; ++b) {
      const std::int64_t left = a.product(b, r);
      const std::int64_t right = a.product(r, b);
      if ((left != StructureConstantAlgebra::kZero && !in_rad(static_cast<std::size_t>(left))) ||
          (right != StructureConstantAlgebra::kZero && !in_rad(static_cast<std::size_t>(right)))) {
        fail(ErrorKind::Invariant, "non-isomorphisms do not span a two-sided ideal");
      }
    }
  }

  RadicalData out;
  out.objects = n;
  out.rad_dim = rad.size();
  // Span of products of two radical elements, one coordinate matrix per block.
  std::vector<std::vector<VectorFp>> products(n * n);
  std::set<std::int64_t> seen;
  for (std::size_t r1 : rad) {
    for (std::size_t r2 : rad) {
      const std::int64_t p = a.product(r1, r2);
      if (p == StructureConstantAlgebra::kZero || !seen.insert(p).second) continue;
      const MorphId& m = a.basis(static_cast<std::size_t>(p));
      VectorFp v = VectorFp::Zero(static_cast<Index>(cat.hom_size(m.source, m.target)));
      v(static_cast<Index>(m.index)) = 1;
      products[m.source * n + m.target].push_back(std::move(v));
    }
  }
  const UnfactorizableSets unf = unfactorizables(cat);
  out.block_quotient_dims.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::size_t size = cat.hom_size(x, y);
      std::size_t r2 = 0;
      if (!products[x * n + y].empty()) {
        MatrixFp m(static_cast<Index>(products[x * n + y].size()), static_cast<Index>(size));
        for (std::size_t i = 0; i < products[x * n + y].size(); ++i) {
          m.row(static_cast<Index>(i)) = products[x * n + y][i].transpose();
        }
        r2 = static_cast<std::size_t>(rank(m, f));
      }
      out.rad2_dim += r2;
      out.block_quotient_dims[x * n + y] = size - r2;
      if (size - r2 != unf.at(x, y).size()) {
        fail(ErrorKind::Invariant, "dim of rad/rad^2 block " + cat.id(x) + "->" + cat.id(y) + " is " +
                                       std::to_string(size - r2) + " but there are " +
                                       std::to_string(unf.at(x, y).size()) + " unfactorizable morphisms");
      }
    }
  }

  // Powers of the radical, as sets of basis elements (products of basis elements are basis elements).
  std::set<std::size_t> power(rad.begin(), rad.end());
  std::size_t k = 1;
  while (!power.empty()) {
    std::set<std::size_t> next;
    for (std::size_t r : rad) {
      for (std::size_t p : power) {
        const std::int64_t q = a.product(r, p);
        if (q != StructureConstantAlgebra::kZero) next.insert(static_cast<std::size_t>(q));
      }
    }
    power = std::move(next);
    ++k;
    if (k > n + 1) fail(ErrorKind::Invariant, "radical is not nilpotent of index at most n + 1");
  }
  out.nilpotency_index = k;
  return out;
}

MultiplicityMap ext_quiver_oracle(const EICategory& cat, CharTableCache& tables) {
  const PrimeField& f = tables.field();
  const std::size_t n = cat.object_count();
  std::vector<std::size_t> first(n);
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    first[x] = count;
    count += tables.get(cat.group(x)).size();
  }
  const UnfactorizableSets unf = unfactorizables(cat);
  MultiplicityMap out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& block = unf.at(x, y);
      if (x == y || block.empty()) continue;
      const PermGroup& g = *cat.group(x);
      const PermGroup& h = *cat.group(y);
      const Biset& b = cat.hom(x, y);
      const CharTable& tg = tables.get(cat.group(x));
      const CharTable& th = tables.get(cat.group(y));
      // chi_B(h, g) = #{beta in block : h beta g^-1 = beta}.
      std::vector<Scalar> fixed(h.order() * g.order(), 0);
      for (std::size_t hi = 0; hi < h.order(); ++hi) {
        for (std::size_t gi = 0; gi < g.order(); ++gi) {
          Scalar c = 0;
          for (std::uint32_t beta : block) {
            if (b.right[g.inverse(gi)][b.left[hi][beta]] == beta) ++c;
          }
          fixed[hi * g.order() + gi] = c;
        }
      }
      const Scalar denom = f.inv(static_cast<Scalar>(h.order() * g.order()));
      for (std::size_t v = 0; v < tg.size(); ++v) {
        for (std::size_t w = 0; w < th.size(); ++w) {
          Scalar s = 0;
          for (std::size_t hi = 0; hi < h.order(); ++hi) {
            const Scalar chi_w = th.irreducible(w).values[h.class_of(h.inverse(hi))];
            for (std::size_t gi = 0; gi < g.order(); ++gi) {
              const Scalar chi_v = tg.irreducible(v).values[g.class_of(gi)];
              s = f.add(s, f.mul(fixed[hi * g.order() + gi], f.mul(chi_w, chi_v)));
            }
          }
          const auto mult = static_cast<std::size_t>(f.mul(s, denom));
          if (mult > 0) out[{first[x] + v, first[y] + w}] = mult;
        }
      }
    }
  }
  return out;
}

}  // namespace eiq
