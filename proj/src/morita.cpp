#include "eiq/morita.hpp"

#include <deque>
#include <map>
#include <optional>
#include <random>

#include "eiq/error.hpp"
#include "eiq/freecover.hpp"

namespace eiq {

namespace {

constexpr std::size_t kMaxRegular = 2048;
constexpr std::size_t kMaxFindings = 10;

MatrixFp identity(Index n) { return MatrixFp::Identity(n, n); }

// Coefficients of A X (X at column offset `off`, shape A.cols() x cols) inside
// an equation block whose rows index an r x cols matrix in row-major order.
void add_left(MatrixFp& eq, Index off, const MatrixFp& a, Index cols, Scalar sign, const PrimeField& f) {
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < cols; ++c) {
      for (Index t = 0; t < a.cols(); ++t) {
        Scalar& e = eq(r * cols + c, off + t * cols + c);
        e = f.add(e, f.mul(sign, a(r, t)));
      }
    }
  }
}

// Coefficients of X B (X at `off`, shape rows x B.rows()).
void add_right(MatrixFp& eq, Index off, const MatrixFp& b, Index rows, Scalar sign, const PrimeField& f) {
  const Index cols = b.cols();
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      for (Index t = 0; t < b.rows(); ++t) {
        Scalar& e = eq(r * cols + c, off + r * b.rows() + t);
        e = f.add(e, f.mul(sign, b(t, c)));
      }
    }
  }
}

MatrixFp vconcat(const std::vector<MatrixFp>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  MatrixFp out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

std::size_t solution_dim(const std::vector<MatrixFp>& eqs, Index unknowns, const PrimeField& f) {
  if (eqs.empty() || unknowns == 0) return static_cast<std::size_t>(unknowns);
  return static_cast<std::size_t>(unknowns - rank(vconcat(eqs, unknowns), f));
}

bool is_scalar_block(const MatrixFp& b, Scalar& lambda) {
  lambda = b(0, 0);
  for (Index i = 0; i < b.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) {
      if (b(i, j) != (i == j ? lambda : 0)) return false;
    }
  }
  return true;
}

// Kronecker product c (x) I_n.
MatrixFp kron_identity(const MatrixFp& c, Index n) {
  MatrixFp out = MatrixFp::Zero(c.rows() * n, c.cols() * n);
  for (Index i = 0; i < c.rows(); ++i) {
    for (Index j = 0; j < c.cols(); ++j) out.block(i * n, j * n, n, n) = c(i, j) * identity(n);
  }
  return out;
}

}  // namespace

std::vector<MatrixFp> intertwiners(const std::vector<MatrixFp>& a, const std::vector<MatrixFp>& b, Index rows,
                                   Index cols, const PrimeField& f) {
  const Index n = rows * cols;
  MatrixFp basis;
  if (a.empty()) {
    basis = identity(n);
  } else {
    std::vector<MatrixFp> eqs;
    for (std::size_t k = 0; k < a.size(); ++k) {
      MatrixFp eq = MatrixFp::Zero(n, n);
      add_left(eq, 0, a[k], cols, 1, f);
      add_right(eq, 0, b[k], rows, -1, f);
      eqs.push_back(std::move(eq));
    }
    const MatrixFp null = nullspace(vconcat(eqs, n), f);
    if (null.cols() == 0) return {};
    const RowEchelon re = row_echelon(null.transpose(), f);
    basis = re.form.topRows(re.rank());
  }
  std::vector<MatrixFp> out;
  for (Index i = 0; i < basis.rows(); ++i) {
    MatrixFp t(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      for (Index c = 0; c < cols; ++c) t(r, c) = basis(i, r * cols + c);
    }
    out.push_back(std::move(t));
  }
  return out;
}

Realization irreducible_realization(const GroupPtr& g, std::size_t index, CharTableCache& tables) {
  const PrimeField& f = tables.field();
  const CharTable& table = tables.get(g);
  const auto& chi = table.irreducible(index).values;
  const std::size_t n = g->order();
  const auto d = static_cast<Index>(table.dim(index));
  Realization out(n);
  if (d == 1) {
    for (std::size_t e = 0; e < n; ++e) out[e] = MatrixFp::Constant(1, 1, chi[g->class_of(e)]);
    return out;
  }
  require(n <= kMaxRegular, ErrorKind::SizeLimit,
          "irreducible realization needs the regular module; group order " + std::to_string(n) + " is too large");

  // Isotypic component of the regular module: image of (d/|G|) sum chi(g^-1) L_g.
  const Scalar coef = f.mul(d, f.inv(static_cast<Scalar>(n)));
  MatrixFp proj(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t gy = g->multiply(y, g->inverse(x));
      proj(static_cast<Index>(y), static_cast<Index>(x)) = f.mul(coef, chi[g->class_of(g->inverse(gy))]);
    }
  }
  const MatrixFp comp = column_basis(proj, f);
  require(comp.cols() == d * d, ErrorKind::Invariant, "isotypic component of the regular module has the wrong size");
  const MatrixFp back = left_inverse(comp, f);

  // A random element of the right regular action commutes with the left one; an
  // eigenvalue of geometric multiplicity one on the centralizer cuts out one copy.
  std::mt19937_64 rng(0x5eedULL + index);
  std::uniform_int_distribution<Scalar> coeff(0, f.p() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Scalar> c(n);
    for (auto& x : c) x = coeff(rng);
    MatrixFp zb = MatrixFp::Zero(comp.rows(), comp.cols());
    for (std::size_t h = 0; h < n; ++h) {
      if (c[h] == 0) continue;
      const std::size_t hinv = g->inverse(h);
      for (std::size_t y = 0; y < n; ++y) {
        zb.row(static_cast<Index>(y)) += c[h] * comp.row(static_cast<Index>(g->multiply(y, hinv)));
      }
    }
    const MatrixFp z = f.mul(back, f.reduce(zb));
    for (Scalar lambda : roots_in_field(characteristic_polynomial(z, f), f)) {
      const MatrixFp shifted = f.reduce(z - lambda * identity(z.rows()));
      const MatrixFp kernel = nullspace(shifted, f);
      if (kernel.cols() != d) continue;
      const RowEchelon re = row_echelon(f.mul(comp, kernel).transpose(), f);
      const MatrixFp basis = re.form.topRows(d).transpose();
      const MatrixFp coords = left_inverse(basis, f);
      for (std::size_t e = 0; e < n; ++e) {
        MatrixFp moved(basis.rows(), basis.cols());
        const std::size_t einv = g->inverse(e);
        for (std::size_t y = 0; y < n; ++y) {
          moved.row(static_cast<Index>(y)) = basis.row(static_cast<Index>(g->multiply(einv, y)));
        }
        out[e] = f.mul(coords, moved);
        if (f.reduce(out[e].trace()) != chi[g->class_of(e)]) {
          fail(ErrorKind::Invariant, "realization trace differs from the character");
        }
      }
      return out;
    }
  }
  fail(ErrorKind::Invariant, "no irreducible realization found for X" + std::to_string(index));
}

MoritaContext::MoritaContext(const EICategory& cat, CharTableCache& tables)
    : cat_(cat), tables_(tables), f_(tables.field()) {
  for (std::size_t x = 0; x < cat.object_count(); ++x) {
    require(cat.group(x)->order() % static_cast<std::size_t>(f_.p()) != 0, ErrorKind::Precondition,
            "order of Aut(" + cat.id(x) + ") is not invertible mod " + std::to_string(f_.p()));
  }
  require(is_free(cat).is_free, ErrorKind::Precondition, "the functor is only defined for free categories");

  quiver_ = build_quiver(cat, tables);
  reps_ = orbit_representatives(cat);

  for (std::size_t x = 0; x < cat.object_count(); ++x) {
    ObjectReps o;
    const CharTable& t = tables.get(cat.group(x));
    for (std::size_t v = 0; v < t.size(); ++v) {
      o.irreducibles.push_back(irreducible_realization(cat.group(x), v, tables));
      o.dims.push_back(t.dim(v));
    }
    objects_.push_back(std::move(o));
  }

  for (const auto& orbit : reps_) {
    AlphaData ad{stabilizer_data(cat, orbit.alpha), {}, {}};
    const StabilizerData& sd = ad.sd;
    const GroupPtr& q = sd.quot_g->group();
    const CharTable& qt = tables.get(q);
    std::vector<Realization> urep;
    for (std::size_t u = 0; u < qt.size(); ++u) urep.push_back(irreducible_realization(q, u, tables));

    // One side: `sub` = G1 or H1, `kernel` = G0 or H0, `to_q` sends a sub member to Q.
    auto adapt = [&](std::size_t obj, const Subgroup& sub, const Subgroup& kernel, auto to_q) {
      std::vector<Adapted> side;
      const ObjectReps& o = objects_[obj];
      for (std::size_t v = 0; v < o.irreducibles.size(); ++v) {
        const auto dv = static_cast<Index>(o.dims[v]);
        Adapted a;
        std::vector<MatrixFp> cols;
        Index offset = 0;
        for (std::size_t u = 0; u < qt.size(); ++u) {
          std::vector<MatrixFp> lhs;
          std::vector<MatrixFp> rhs;
          for (std::size_t gp : sub.group()->generator_positions()) {
            const std::size_t parent = sub.to_parent(gp);
            lhs.push_back(o.irreducibles[v][parent]);
            rhs.push_back(urep[u][to_q(parent)]);
          }
          const auto du = static_cast<Index>(qt.dim(u));
          const auto maps = intertwiners(lhs, rhs, dv, du, f_);
          for (std::size_t s = 0; s < maps.size(); ++s) {
            a.blocks.push_back({u, s, offset, du});
            cols.push_back(maps[s]);
            offset += du;
          }
        }
        MatrixFp avg = MatrixFp::Zero(dv, dv);
        for (std::size_t k : kernel.members()) avg += o.irreducibles[v][k];
        avg = f_.reduce(f_.reduce(avg) * f_.inv(static_cast<Scalar>(kernel.order())));
        const MatrixFp rest = column_basis(f_.reduce(identity(dv) - avg), f_);
        if (rest.cols() > 0) {
          a.blocks.push_back({kRest, 0, offset, rest.cols()});
          cols.push_back(rest);
        }
        a.basis = hconcat(cols, dv);
        if (a.basis.cols() != dv || rank(a.basis, f_) != dv) {
          fail(ErrorKind::Invariant, "adapted basis of " + cat.id(obj) + ":X" + std::to_string(v) + " is not a basis");
        }
        side.push_back(std::move(a));
      }
      return side;
    };

    ad.source = adapt(orbit.alpha.source, sd.g1, sd.g0,
                      [&](std::size_t g) { return sd.quot_g->coset_to_element(sd.quot_g->project(g)); });
    ad.target = adapt(orbit.alpha.target, sd.h1, sd.h0, [&](std::size_t h) {
      return sd.quot_g->coset_to_element(sd.phi.apply_inverse(sd.quot_h->project(h)));
    });
    alphas_.push_back(std::move(ad));
  }

  std::map<MorphId, std::size_t> rep_index;
  for (std::size_t k = 0; k < reps_.size(); ++k) rep_index[reps_[k].alpha] = k;
  for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
    const auto& arrow = quiver_.arrows[a];
    for (std::size_t pi = 0; pi < arrow.provenance.size(); ++pi) {
      const auto& pv = arrow.provenance[pi];
      const std::size_t k = rep_index.at(pv.alpha);
      auto copies = [&](const Adapted& ad) {
        std::size_t n = 0;
        for (const auto& b : ad.blocks) n += b.u == pv.u ? 1 : 0;
        return n;
      };
      if (copies(alphas_[k].source[pv.v]) != pv.e || copies(alphas_[k].target[pv.w]) != pv.f) {
        fail(ErrorKind::Invariant, "decomposition of the restriction disagrees with the character multiplicities");
      }
      for (std::size_t s = 0; s < pv.e; ++s) {
        for (std::size_t l = 0; l < pv.f; ++l) units_.push_back({a, pi, k, s, l});
      }
    }
  }
}

std::vector<MatrixFp> MoritaContext::expand(std::size_t x, std::size_t dim,
                                            const std::vector<MatrixFp>& generators) const {
  const PermGroup& g = *cat_.group(x);
  require(generators.size() == g.generator_positions().size(), ErrorKind::Validation,
          "object " + cat_.id(x) + " needs " + std::to_string(g.generator_positions().size()) + " generator matrices");
  std::vector<MatrixFp> mats(g.order());
  std::vector<bool> set(g.order(), false);
  mats[PermGroup::identity()] = identity(static_cast<Index>(dim));
  set[PermGroup::identity()] = true;
  std::deque<std::size_t> queue{PermGroup::identity()};
  while (!queue.empty()) {
    const std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const std::size_t t = g.multiply(g.generator_positions()[i], e);
      MatrixFp cand = f_.mul(generators[i], mats[e]);
      if (!set[t]) {
        mats[t] = std::move(cand);
        set[t] = true;
        queue.push_back(t);
      } else if (mats[t] != cand) {
        throw Error(ErrorKind::Validation,
                    std::vector<Finding>{{"group-relation", "generator matrices of " + cat_.id(x) +
                                                                " do not define a representation of Aut(" +
                                                                cat_.id(x) + ")"}});
      }
    }
  }
  return mats;
}

std::vector<std::vector<MatrixFp>> MoritaContext::embeddings(std::size_t x, std::size_t dim,
                                                             const std::vector<MatrixFp>& generators) const {
  const ObjectReps& o = objects_[x];
  const auto& gens = cat_.group(x)->generator_positions();
  std::vector<std::vector<MatrixFp>> out;
  for (std::size_t v = 0; v < o.irreducibles.size(); ++v) {
    std::vector<MatrixFp> rhs;
    for (std::size_t gp : gens) rhs.push_back(o.irreducibles[v][gp]);
    out.push_back(intertwiners(generators, rhs, static_cast<Index>(dim), static_cast<Index>(o.dims[v]), f_));
  }
  return out;
}

MoritaContext::Frame MoritaContext::frame(std::size_t x, std::size_t dim, const std::vector<MatrixFp>& generators) const {
  const auto emb = embeddings(x, dim, generators);
  Frame fr;
  std::vector<MatrixFp> cols;
  Index offset = 0;
  for (std::size_t v = 0; v < emb.size(); ++v) {
    fr.counts.push_back(emb[v].size());
    fr.offsets.push_back(offset);
    for (const auto& t : emb[v]) {
      cols.push_back(t);
      offset += t.cols();
    }
  }
  fr.basis = hconcat(cols, static_cast<Index>(dim));
  if (fr.basis.rows() != fr.basis.cols() || rank(fr.basis, f_) != fr.basis.rows()) {
    fail(ErrorKind::Invariant, "module of " + cat_.id(x) + " is not the direct sum of its homogeneous components");
  }
  return fr;
}

MatrixFp MoritaContext::adapted_frame(const Frame& fr, const std::vector<Adapted>& side) const {
  std::vector<MatrixFp> blocks;
  for (std::size_t v = 0; v < fr.counts.size(); ++v) {
    for (std::size_t i = 0; i < fr.counts[v]; ++i) blocks.push_back(side[v].basis);
  }
  if (blocks.empty()) return MatrixFp(0, 0);
  return f_.mul(fr.basis, block_diagonal(blocks));
}

std::string MoritaContext::block_label(std::size_t u) const { return u == kRest ? "rest" : "X" + std::to_string(u); }

void MoritaContext::check_shapes(const CatRep& r) const {
  std::vector<Finding> findings;
  if (r.p != f_.p()) findings.push_back({"rep-prime", "representation is over F_" + std::to_string(r.p) +
                                                          " but the category uses F_" + std::to_string(f_.p())});
  if (r.dims.size() != cat_.object_count() || r.generators.size() != cat_.object_count()) {
    findings.push_back({"rep-shape", "representation must list every object"});
    throw Error(ErrorKind::Validation, findings);
  }
  for (std::size_t x = 0; x < cat_.object_count(); ++x) {
    const auto d = static_cast<Index>(r.dims[x]);
    if (r.generators[x].size() != cat_.group(x)->generator_positions().size()) {
      findings.push_back({"rep-shape", "object " + cat_.id(x) + " has the wrong number of generator matrices"});
    }
    for (const auto& m : r.generators[x]) {
      if (m.rows() != d || m.cols() != d) findings.push_back({"rep-shape", "generator matrix of " + cat_.id(x) + " is not " +
                                                                              std::to_string(d) + "x" + std::to_string(d)});
    }
  }
  if (r.alpha.size() != reps_.size()) {
    findings.push_back({"rep-shape", "expected " + std::to_string(reps_.size()) + " representative matrices"});
  } else {
    for (std::size_t k = 0; k < reps_.size(); ++k) {
      const auto& m = r.alpha[k];
      if (m.rows() != static_cast<Index>(r.dims[reps_[k].alpha.target]) ||
          m.cols() != static_cast<Index>(r.dims[reps_[k].alpha.source])) {
        findings.push_back({"rep-shape", "matrix of representative " + std::to_string(k) + " has the wrong shape"});
      }
    }
  }
  if (!findings.empty()) throw Error(ErrorKind::Validation, findings);
}

void MoritaContext::verify(const CatRep& r) const {
  check_shapes(r);
  for (std::size_t x = 0; x < cat_.object_count(); ++x) {
    expand(x, r.dims[x], r.generators[x]);
  }
  std::vector<Finding> findings;
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    const MorphId& alpha = reps_[k].alpha;
    const std::size_t x = alpha.source;
    const std::size_t y = alpha.target;
    if (r.dims[x] == 0 || r.dims[y] == 0) continue;
    const Frame fx = frame(x, r.dims[x], r.generators[x]);
    const Frame fy = frame(y, r.dims[y], r.generators[y]);
    const MatrixFp px = adapted_frame(fx, alphas_[k].source);
    const MatrixFp py = adapted_frame(fy, alphas_[k].target);
    const MatrixFp c = f_.mul(f_.mul(eiq::inverse(py, f_), r.alpha[k]), px);
    for (std::size_t v = 0; v < fx.counts.size(); ++v) {
      const auto dv = static_cast<Index>(objects_[x].dims[v]);
      for (std::size_t i = 0; i < fx.counts[v]; ++i) {
        for (const auto& cb : alphas_[k].source[v].blocks) {
          const Index col = fx.offsets[v] + static_cast<Index>(i) * dv + cb.offset;
          for (std::size_t w = 0; w < fy.counts.size(); ++w) {
            const auto dw = static_cast<Index>(objects_[y].dims[w]);
            for (std::size_t j = 0; j < fy.counts[w]; ++j) {
              for (const auto& rb : alphas_[k].target[w].blocks) {
                const Index row = fy.offsets[w] + static_cast<Index>(j) * dw + rb.offset;
                const MatrixFp blk = c.block(row, col, rb.size, cb.size);
                Scalar lambda = 0;
                std::string problem;
                if (cb.u == rb.u && cb.u != kRest) {
                  if (!is_scalar_block(blk, lambda)) problem = "is not a scalar multiple of the identity";
                } else if (!blk.isZero()) {
                  problem = "is not zero";
                }
                if (!problem.empty() && findings.size() < kMaxFindings) {
                  findings.push_back({"block-condition", "alpha " + std::to_string(k) + " (" + cat_.id(x) + "->" +
                                                             cat_.id(y) + "): block U=" + block_label(cb.u) +
                                                             " -> T=" + block_label(rb.u) + " between " + cat_.id(x) +
                                                             ":X" + std::to_string(v) + " and " + cat_.id(y) + ":X" +
                                                             std::to_string(w) + " " + problem});
                }
              }
            }
          }
        }
      }
    }
  }
  if (!findings.empty()) throw Error(ErrorKind::Validation, findings);

  // Independent check: alpha g = h alpha forces R(alpha) R(g) = R(h) R(alpha).
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    const MorphId& alpha = reps_[k].alpha;
    const std::size_t x = alpha.source;
    const std::size_t y = alpha.target;
    if (r.dims[x] == 0 || r.dims[y] == 0) continue;
    const auto gx = expand(x, r.dims[x], r.generators[x]);
    const auto gy = expand(y, r.dims[y], r.generators[y]);
    const Biset& b = cat_.hom(x, y);
    const auto& sd = alphas_[k].sd;
    for (std::size_t gp : sd.g1.group()->generator_positions()) {
      const std::size_t g = sd.g1.to_parent(gp);
      const std::uint32_t target = b.right[g][alpha.index];
      std::size_t hh = 0;
      while (b.left[hh][alpha.index] != target) ++hh;
      if (f_.mul(r.alpha[k], gx[g]) != f_.mul(gy[hh], r.alpha[k])) {
        fail(ErrorKind::Invariant, "block conditions hold but R(alpha) is not equivariant");
      }
    }
    for (std::size_t hp : sd.h0.members()) {
      if (f_.mul(gy[hp], r.alpha[k]) != r.alpha[k]) {
        fail(ErrorKind::Invariant, "block conditions hold but H0 does not fix R(alpha)");
      }
    }
  }
}

std::vector<std::size_t> MoritaContext::on_objects(const CatRep& r) const {
  check_shapes(r);
  std::vector<std::size_t> dims;
  for (std::size_t x = 0; x < cat_.object_count(); ++x) {
    if (r.dims[x] == 0) {
      dims.insert(dims.end(), objects_[x].dims.size(), 0);
      continue;
    }
    const Frame fr = frame(x, r.dims[x], r.generators[x]);
    dims.insert(dims.end(), fr.counts.begin(), fr.counts.end());
  }
  return dims;
}

QuiverRep MoritaContext::on_morphisms(const CatRep& r) const {
  QuiverRep out;
  out.dims = on_objects(r);
  std::vector<std::optional<Frame>> frames(cat_.object_count());
  for (std::size_t x = 0; x < cat_.object_count(); ++x) {
    if (r.dims[x] > 0) frames[x] = frame(x, r.dims[x], r.generators[x]);
  }
  std::vector<MatrixFp> coords(reps_.size());
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    const std::size_t x = reps_[k].alpha.source;
    const std::size_t y = reps_[k].alpha.target;
    if (!frames[x] || !frames[y]) continue;
    const MatrixFp px = adapted_frame(*frames[x], alphas_[k].source);
    const MatrixFp py = adapted_frame(*frames[y], alphas_[k].target);
    coords[k] = f_.mul(f_.mul(eiq::inverse(py, f_), r.alpha[k]), px);
  }
  for (const auto& unit : units_) {
    const auto& arrow = quiver_.arrows[unit.arrow];
    const auto& pv = arrow.provenance[unit.provenance];
    const std::size_t a = out.dims[arrow.from];
    const std::size_t b = out.dims[arrow.to];
    MatrixFp m = MatrixFp::Zero(static_cast<Index>(b), static_cast<Index>(a));
    if (a > 0 && b > 0) {
      const std::size_t x = pv.alpha.source;
      const std::size_t y = pv.alpha.target;
      const auto& src = alphas_[unit.rep].source[pv.v];
      const auto& tgt = alphas_[unit.rep].target[pv.w];
      const Block* cb = nullptr;
      const Block* rb = nullptr;
      for (const auto& bl : src.blocks) cb = (bl.u == pv.u && bl.s == unit.s) ? &bl : cb;
      for (const auto& bl : tgt.blocks) rb = (bl.u == pv.u && bl.s == unit.l) ? &bl : rb;
      const auto dv = static_cast<Index>(objects_[x].dims[pv.v]);
      const auto dw = static_cast<Index>(objects_[y].dims[pv.w]);
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          const Index col = frames[x]->offsets[pv.v] + static_cast<Index>(i) * dv + cb->offset;
          const Index row = frames[y]->offsets[pv.w] + static_cast<Index>(j) * dw + rb->offset;
          Scalar lambda = 0;
          if (!is_scalar_block(coords[unit.rep].block(row, col, rb->size, cb->size), lambda)) {
            throw Error(ErrorKind::Validation,
                        std::vector<Finding>{{"block-condition", "arrow " + quiver_.vertex_name(arrow.from) + " -> " +
                                                                     quiver_.vertex_name(arrow.to) +
                                                                     ": block is not a scalar multiple of the identity"}});
          }
          m(static_cast<Index>(j), static_cast<Index>(i)) = lambda;
        }
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

CatRep MoritaContext::inverse(const QuiverRep& q) const {
  require(q.dims.size() == quiver_.vertices.size(), ErrorKind::Validation, "quiver representation has the wrong number of vertices");
  require(q.maps.size() == units_.size(), ErrorKind::Validation,
          "quiver representation needs " + std::to_string(units_.size()) + " arrow matrices");
  for (std::size_t u = 0; u < units_.size(); ++u) {
    const auto& arrow = quiver_.arrows[units_[u].arrow];
    require(q.maps[u].rows() == static_cast<Index>(q.dims[arrow.to]) &&
                q.maps[u].cols() == static_cast<Index>(q.dims[arrow.from]),
            ErrorKind::Validation, "arrow matrix " + std::to_string(u) + " has the wrong shape");
  }
  CatRep r;
  r.p = f_.p();
  const std::size_t n = cat_.object_count();
  r.generators.resize(n);
  r.dims.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& gens = cat_.group(x)->generator_positions();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::vector<MatrixFp> blocks;
      for (std::size_t v = 0; v < objects_[x].irreducibles.size(); ++v) {
        for (std::size_t i = 0; i < q.dims[quiver_.vertex(x, v)]; ++i) blocks.push_back(objects_[x].irreducibles[v][gens[gi]]);
      }
      r.generators[x].push_back(blocks.empty() ? MatrixFp(0, 0) : block_diagonal(blocks));
    }
    for (std::size_t v = 0; v < objects_[x].irreducibles.size(); ++v) {
      r.dims[x] += q.dims[quiver_.vertex(x, v)] * objects_[x].dims[v];
    }
  }
  // The module just built is block diagonal, so its frame is the identity.
  std::vector<std::optional<Frame>> frames(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (r.dims[x] > 0) frames[x] = frame(x, r.dims[x], r.generators[x]);
  }
  std::vector<MatrixFp> coords;
  for (const auto& rep : reps_) {
    coords.push_back(MatrixFp::Zero(static_cast<Index>(r.dims[rep.alpha.target]), static_cast<Index>(r.dims[rep.alpha.source])));
  }
  for (std::size_t ui = 0; ui < units_.size(); ++ui) {
    const auto& unit = units_[ui];
    const auto& arrow = quiver_.arrows[unit.arrow];
    const auto& pv = arrow.provenance[unit.provenance];
    const std::size_t x = pv.alpha.source;
    const std::size_t y = pv.alpha.target;
    const std::size_t a = q.dims[arrow.from];
    const std::size_t b = q.dims[arrow.to];
    if (a == 0 || b == 0) continue;
    const auto& src = alphas_[unit.rep].source[pv.v];
    const auto& tgt = alphas_[unit.rep].target[pv.w];
    const Block* cb = nullptr;
    const Block* rb = nullptr;
    for (const auto& bl : src.blocks) cb = (bl.u == pv.u && bl.s == unit.s) ? &bl : cb;
    for (const auto& bl : tgt.blocks) rb = (bl.u == pv.u && bl.s == unit.l) ? &bl : rb;
    const auto dv = static_cast<Index>(objects_[x].dims[pv.v]);
    const auto dw = static_cast<Index>(objects_[y].dims[pv.w]);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        const Index col = frames[x]->offsets[pv.v] + static_cast<Index>(i) * dv + cb->offset;
        const Index row = frames[y]->offsets[pv.w] + static_cast<Index>(j) * dw + rb->offset;
        coords[unit.rep].block(row, col, rb->size, cb->size) =
            f_.reduce(q.maps[ui](static_cast<Index>(j), static_cast<Index>(i)) * identity(cb->size));
      }
    }
  }
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    const std::size_t x = reps_[k].alpha.source;
    const std::size_t y = reps_[k].alpha.target;
    if (!frames[x] || !frames[y]) {
      r.alpha.push_back(coords[k]);
      continue;
    }
    const MatrixFp px = adapted_frame(*frames[x], alphas_[k].source);
    const MatrixFp py = adapted_frame(*frames[y], alphas_[k].target);
    r.alpha.push_back(f_.mul(f_.mul(py, coords[k]), eiq::inverse(px, f_)));
  }
  return r;
}

CatRep MoritaContext::canonical_form(const CatRep& r) const {
  check_shapes(r);
  CatRep out = r;
  std::vector<MatrixFp> basis(cat_.object_count());
  for (std::size_t x = 0; x < cat_.object_count(); ++x) {
    if (r.dims[x] == 0) continue;
    basis[x] = frame(x, r.dims[x], r.generators[x]).basis;
    const MatrixFp inv = eiq::inverse(basis[x], f_);
    for (auto& g : out.generators[x]) g = f_.mul(f_.mul(inv, g), basis[x]);
  }
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    const std::size_t x = reps_[k].alpha.source;
    const std::size_t y = reps_[k].alpha.target;
    if (r.dims[x] == 0 || r.dims[y] == 0) continue;
    out.alpha[k] = f_.mul(f_.mul(eiq::inverse(basis[y], f_), r.alpha[k]), basis[x]);
  }
  return out;
}

bool MoritaContext::is_hom(const CatRep& r1, const CatRep& r2, const std::vector<MatrixFp>& pi, std::string* why) const {
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (pi.size() != cat_.object_count()) return bad("one matrix per object is required");
  for (std::size_t x = 0; x < cat_.object_count(); ++x) {
    if (pi[x].rows() != static_cast<Index>(r2.dims[x]) || pi[x].cols() != static_cast<Index>(r1.dims[x])) {
      return bad("matrix at " + cat_.id(x) + " has the wrong shape");
    }
    for (std::size_t i = 0; i < r1.generators[x].size(); ++i) {
      if (f_.mul(pi[x], r1.generators[x][i]) != f_.mul(r2.generators[x][i], pi[x])) {
        return bad("matrix at " + cat_.id(x) + " does not commute with generator " + std::to_string(i));
      }
    }
  }
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    const std::size_t x = reps_[k].alpha.source;
    const std::size_t y = reps_[k].alpha.target;
    if (f_.mul(pi[y], r1.alpha[k]) != f_.mul(r2.alpha[k], pi[x])) {
      return bad("square for representative " + std::to_string(k) + " (" + cat_.id(x) + "->" + cat_.id(y) +
                 ") does not commute");
    }
  }
  return true;
}

bool MoritaContext::is_hom(const QuiverRep& a, const QuiverRep& b, const std::vector<MatrixFp>& pi) const {
  if (pi.size() != quiver_.vertices.size()) return false;
  for (std::size_t v = 0; v < pi.size(); ++v) {
    if (pi[v].rows() != static_cast<Index>(b.dims[v]) || pi[v].cols() != static_cast<Index>(a.dims[v])) return false;
  }
  for (std::size_t u = 0; u < units_.size(); ++u) {
    const auto& arrow = quiver_.arrows[units_[u].arrow];
    if (f_.mul(pi[arrow.to], a.maps[u]) != f_.mul(b.maps[u], pi[arrow.from])) return false;
  }
  return true;
}

std::vector<MatrixFp> MoritaContext::transport_hom(const CatRep& r1, const CatRep& r2,
                                                   const std::vector<MatrixFp>& pi) const {
  std::string why;
  if (!is_hom(r1, r2, pi, &why)) fail(ErrorKind::Precondition, "not a homomorphism: " + why);
  std::vector<MatrixFp> out;
  for (std::size_t x = 0; x < cat_.object_count(); ++x) {
    const std::size_t nv = objects_[x].irreducibles.size();
    std::optional<Frame> f1;
    std::optional<Frame> f2;
    if (r1.dims[x] > 0) f1 = frame(x, r1.dims[x], r1.generators[x]);
    if (r2.dims[x] > 0) f2 = frame(x, r2.dims[x], r2.generators[x]);
    MatrixFp c;
    if (f1 && f2) c = f_.mul(f_.mul(eiq::inverse(f2->basis, f_), pi[x]), f1->basis);
    for (std::size_t v = 0; v < nv; ++v) {
      const std::size_t a = f1 ? f1->counts[v] : 0;
      const std::size_t cc = f2 ? f2->counts[v] : 0;
      MatrixFp m = MatrixFp::Zero(static_cast<Index>(cc), static_cast<Index>(a));
      const auto dv = static_cast<Index>(objects_[x].dims[v]);
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < cc; ++j) {
          Scalar eps = 0;
          if (!is_scalar_block(c.block(f2->offsets[v] + static_cast<Index>(j) * dv,
                                       f1->offsets[v] + static_cast<Index>(i) * dv, dv, dv),
                               eps)) {
            fail(ErrorKind::Invariant, "homogeneous block of a homomorphism is not scalar");
          }
          m(static_cast<Index>(j), static_cast<Index>(i)) = eps;
        }
      }
      out.push_back(std::move(m));
    }
    if (f1 && f2) {
      // Lemma-4.1 style: blocks between different homogeneous components vanish.
      for (std::size_t v = 0; v < nv; ++v) {
        for (std::size_t w = 0; w < nv; ++w) {
          if (v == w) continue;
          const auto rows = static_cast<Index>(f2->counts[w] * objects_[x].dims[w]);
          const auto cols = static_cast<Index>(f1->counts[v] * objects_[x].dims[v]);
          if (!c.block(f2->offsets[w], f1->offsets[v], rows, cols).isZero()) {
            fail(ErrorKind::Invariant, "homomorphism mixes homogeneous components");
          }
        }
      }
    }
  }
  return out;
}

std::vector<MatrixFp> MoritaContext::lift_hom(const CatRep& r1, const CatRep& r2,
                                              const std::vector<MatrixFp>& pi_prime) const {
  std::vector<MatrixFp> out;
  for (std::size_t x = 0; x < cat_.object_count(); ++x) {
    const auto d1 = static_cast<Index>(r1.dims[x]);
    const auto d2 = static_cast<Index>(r2.dims[x]);
    if (d1 == 0 || d2 == 0) {
      out.push_back(MatrixFp::Zero(d2, d1));
      continue;
    }
    const Frame f1 = frame(x, r1.dims[x], r1.generators[x]);
    const Frame f2 = frame(x, r2.dims[x], r2.generators[x]);
    MatrixFp c = MatrixFp::Zero(d2, d1);
    for (std::size_t v = 0; v < objects_[x].irreducibles.size(); ++v) {
      const MatrixFp& m = pi_prime[quiver_.vertex(x, v)];
      if (m.size() == 0) continue;
      c.block(f2.offsets[v], f1.offsets[v], m.rows() * static_cast<Index>(objects_[x].dims[v]),
              m.cols() * static_cast<Index>(objects_[x].dims[v])) = kron_identity(m, static_cast<Index>(objects_[x].dims[v]));
    }
    out.push_back(f_.mul(f_.mul(f2.basis, c), eiq::inverse(f1.basis, f_)));
  }
  return out;
}

std::size_t MoritaContext::hom_dim(const CatRep& r1, const CatRep& r2) const {
  const std::size_t n = cat_.object_count();
  std::vector<Index> off(n);
  Index unknowns = 0;
  for (std::size_t x = 0; x < n; ++x) {
    off[x] = unknowns;
    unknowns += static_cast<Index>(r1.dims[x] * r2.dims[x]);
  }
  std::vector<MatrixFp> eqs;
  for (std::size_t x = 0; x < n; ++x) {
    const auto d1 = static_cast<Index>(r1.dims[x]);
    const auto d2 = static_cast<Index>(r2.dims[x]);
    if (d1 == 0 || d2 == 0) continue;
    for (std::size_t i = 0; i < r1.generators[x].size(); ++i) {
      // X R1(s) - R2(s) X = 0, X is d2 x d1.
      MatrixFp eq = MatrixFp::Zero(d2 * d1, unknowns);
      add_right(eq, off[x], r1.generators[x][i], d2, 1, f_);
      add_left(eq, off[x], r2.generators[x][i], d1, -1, f_);
      eqs.push_back(std::move(eq));
    }
  }
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    const std::size_t x = reps_[k].alpha.source;
    const std::size_t y = reps_[k].alpha.target;
    const auto rows = static_cast<Index>(r2.dims[y]);
    const auto cols = static_cast<Index>(r1.dims[x]);
    if (rows == 0 || cols == 0) continue;
    // X_y R1(alpha) - R2(alpha) X_x = 0.
    MatrixFp eq = MatrixFp::Zero(rows * cols, unknowns);
    if (r1.dims[y] > 0) add_right(eq, off[y], r1.alpha[k], rows, 1, f_);
    if (r2.dims[x] > 0) add_left(eq, off[x], r2.alpha[k], cols, -1, f_);
    eqs.push_back(std::move(eq));
  }
  return solution_dim(eqs, unknowns, f_);
}

std::size_t MoritaContext::hom_dim(const QuiverRep& a, const QuiverRep& b) const {
  const std::size_t n = quiver_.vertices.size();
  std::vector<Index> off(n);
  Index unknowns = 0;
  for (std::size_t v = 0; v < n; ++v) {
    off[v] = unknowns;
    unknowns += static_cast<Index>(a.dims[v] * b.dims[v]);
  }
  std::vector<MatrixFp> eqs;
  for (std::size_t u = 0; u < units_.size(); ++u) {
    const auto& arrow = quiver_.arrows[units_[u].arrow];
    const auto rows = static_cast<Index>(b.dims[arrow.to]);
    const auto cols = static_cast<Index>(a.dims[arrow.from]);
    if (rows == 0 || cols == 0) continue;
    // C_to A_u - B_u C_from = 0.
    MatrixFp eq = MatrixFp::Zero(rows * cols, unknowns);
    if (a.dims[arrow.to] > 0) add_right(eq, off[arrow.to], a.maps[u], rows, 1, f_);
    if (b.dims[arrow.from] > 0) add_left(eq, off[arrow.from], b.maps[u], cols, -1, f_);
    eqs.push_back(std::move(eq));
  }
  return solution_dim(eqs, unknowns, f_);
}

}  // namespace eiq
