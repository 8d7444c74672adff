#include "eiq/field.hpp"

#include <string>
#include <utility>

namespace eiq {

bool is_prime(Scalar n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Scalar d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Scalar p) : p_(p) {
  require(is_prime(p), ErrorKind::Precondition, std::to_string(p) + " is not prime");
  require(p < (Scalar{1} << 21), ErrorKind::Precondition, "prime too large for exact int64 kernels");
}

Scalar PrimeField::pow(Scalar base, std::uint64_t exp) const noexcept {
  Scalar result = 1;
  Scalar b = reduce(base);
  while (exp > 0) {
    if (exp & 1U) result = mul(result, b);
    b = mul(b, b);
    exp >>= 1U;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  const Scalar r = reduce(a);
  require(r != 0, ErrorKind::Precondition, "division by zero in F_" + std::to_string(p_));
  return pow(r, static_cast<std::uint64_t>(p_ - 2));
}

RowEchelon row_echelon(const MatrixFp& m, const PrimeField& f) {
  MatrixFp a = f.reduce(m);
  const Index rows = a.rows();
  const Index cols = a.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    const Scalar scale = f.inv(a(r, c));
    for (Index j = c; j < cols; ++j) a(r, j) = f.mul(a(r, j), scale);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar factor = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

MatrixFp nullspace(const MatrixFp& m, const PrimeField& f) {
  const RowEchelon ech = row_echelon(m, f);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  MatrixFp basis = MatrixFp::Zero(cols, static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index fc = free_cols[k];
    basis(fc, static_cast<Index>(k)) = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      basis(ech.pivots[r], static_cast<Index>(k)) = f.neg(ech.form(static_cast<Index>(r), fc));
    }
  }
  return basis;
}

MatrixFp column_basis(const MatrixFp& m, const PrimeField& f) {
  const RowEchelon ech = row_echelon(m, f);
  MatrixFp out(m.rows(), ech.rank());
  for (Index k = 0; k < ech.rank(); ++k) out.col(k) = f.reduce(m.col(ech.pivots[static_cast<std::size_t>(k)]));
  return out;
}

MatrixFp inverse(const MatrixFp& m, const PrimeField& f) {
  require(m.rows() == m.cols(), ErrorKind::Precondition, "inverse of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return MatrixFp(0, 0);
  MatrixFp aug(n, 2 * n);
  aug << f.reduce(m), MatrixFp::Identity(n, n);
  const RowEchelon ech = row_echelon(aug, f);
  require(ech.rank() >= n && ech.pivots[static_cast<std::size_t>(n - 1)] == n - 1, ErrorKind::Precondition,
          "matrix is singular");
  return ech.form.rightCols(n);
}

MatrixFp left_inverse(const MatrixFp& b, const PrimeField& f) {
  // Rows of b indexed by the pivots of b^T form an invertible square block.
  const RowEchelon ech = row_echelon(b.transpose(), f);
  require(ech.rank() == b.cols(), ErrorKind::Precondition, "left inverse needs full column rank");
  const Index d = b.cols();
  MatrixFp square(d, d);
  for (Index k = 0; k < d; ++k) square.row(k) = b.row(ech.pivots[static_cast<std::size_t>(k)]);
  const MatrixFp sq_inv = inverse(square, f);
  MatrixFp out = MatrixFp::Zero(d, b.rows());
  for (Index k = 0; k < d; ++k) out.col(ech.pivots[static_cast<std::size_t>(k)]) = sq_inv.col(k);
  return out;
}

MatrixFp solve(const MatrixFp& a, const MatrixFp& b, const PrimeField& f) {
  require(a.rows() == b.rows(), ErrorKind::Precondition, "solve: row mismatch");
  const Index n = a.cols();
  MatrixFp aug(a.rows(), n + b.cols());
  aug << f.reduce(a), f.reduce(b);
  const RowEchelon ech = row_echelon(aug, f);
  MatrixFp x = MatrixFp::Zero(n, b.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const Index c = ech.pivots[r];
    require(c < n, ErrorKind::Precondition, "solve: inconsistent system");
    x.row(c) = ech.form.row(static_cast<Index>(r)).tail(b.cols());
  }
  return x;
}

std::vector<Scalar> characteristic_polynomial(const MatrixFp& m, const PrimeField& f) {
  // Faddeev-LeVerrier; valid because every caller keeps n < p.
  const Index n = m.rows();
  require(n < f.p(), ErrorKind::Precondition, "characteristic polynomial needs dimension below p");
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1), 0);
  c[static_cast<std::size_t>(n)] = 1;
  MatrixFp mk = MatrixFp::Zero(n, n);
  const MatrixFp a = f.reduce(m);
  for (Index k = 1; k <= n; ++k) {
    mk = f.mul(a, mk);
    for (Index i = 0; i < n; ++i) mk(i, i) = f.add(mk(i, i), c[static_cast<std::size_t>(n - k + 1)]);
    const Scalar tr = f.reduce(f.mul(a, mk).trace());
    c[static_cast<std::size_t>(n - k)] = f.neg(f.div(tr, k));
  }
  return c;
}

std::vector<Scalar> roots_in_field(const std::vector<Scalar>& coeffs, const PrimeField& f) {
  std::vector<Scalar> roots;
  for (Scalar t = 0; t < f.p(); ++t) {
    Scalar acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = f.add(f.mul(acc, t), *it);
    if (acc == 0) roots.push_back(t);
  }
  return roots;
}

MatrixFp hconcat(const std::vector<MatrixFp>& blocks, Index rows) {
  Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  MatrixFp out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    require(b.rows() == rows, ErrorKind::Precondition, "hconcat: row mismatch");
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

MatrixFp block_diagonal(const std::vector<MatrixFp>& blocks) {
  Index rows = 0;
  Index cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  MatrixFp out = MatrixFp::Zero(rows, cols);
  Index r = 0;
  Index c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace eiq
