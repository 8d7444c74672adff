#pragma once

// Exact linear algebra over a prime field F_p.
//
// Matrices are plain Eigen integer matrices whose entries are kept as least
// nonnegative residues. Products are formed with Eigen's integer kernels and
// reduced afterwards; with p < 2^21 and inner dimensions below 2^20 no
// intermediate sum can overflow 64 bits.

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "eiq/error.hpp"

namespace eiq {

using Scalar = std::int64_t;
using MatrixFp = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using VectorFp = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

bool is_prime(Scalar n);

class PrimeField {
 public:
  explicit PrimeField(Scalar p);

  Scalar p() const noexcept { return p_; }

  Scalar reduce(Scalar x) const noexcept {
    Scalar r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  Scalar add(Scalar a, Scalar b) const noexcept { return reduce(a + b); }
  Scalar sub(Scalar a, Scalar b) const noexcept { return reduce(a - b); }
  Scalar mul(Scalar a, Scalar b) const noexcept { return reduce(a * b); }
  Scalar neg(Scalar a) const noexcept { return reduce(-a); }
  Scalar pow(Scalar base, std::uint64_t exp) const noexcept;
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  /// Entrywise least nonnegative residues.
  template <typename Derived>
  MatrixFp reduce(const Eigen::MatrixBase<Derived>& m) const {
    return m.unaryExpr([this](Scalar x) { return reduce(x); });
  }

  /// Product reduced mod p.
  template <typename A, typename B>
  MatrixFp mul(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    MatrixFp prod = a.template cast<Scalar>() * b.template cast<Scalar>();
    return reduce(prod);
  }

  bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

 private:
  Scalar p_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  MatrixFp form;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

RowEchelon row_echelon(const MatrixFp& m, const PrimeField& f);

inline Index rank(const MatrixFp& m, const PrimeField& f) { return row_echelon(m, f).rank(); }

/// Columns form a basis of { x : m x = 0 }, one column per free variable,
/// with that free variable set to 1 and the other free variables 0.
MatrixFp nullspace(const MatrixFp& m, const PrimeField& f);

/// The pivot columns of m: a basis of its column space drawn from m itself.
MatrixFp column_basis(const MatrixFp& m, const PrimeField& f);

/// Throws Precondition when m is singular.
MatrixFp inverse(const MatrixFp& m, const PrimeField& f);

/// For b of full column rank, a matrix l with l * b = I.
MatrixFp left_inverse(const MatrixFp& b, const PrimeField& f);

/// Solves a * x = b; throws Precondition when inconsistent. Picks free variables 0.
MatrixFp solve(const MatrixFp& a, const MatrixFp& b, const PrimeField& f);

/// Coefficients c_0..c_n of det(tI - m), constant term first.
std::vector<Scalar> characteristic_polynomial(const MatrixFp& m, const PrimeField& f);

/// All roots in F_p, ascending, without multiplicity.
std::vector<Scalar> roots_in_field(const std::vector<Scalar>& coeffs, const PrimeField& f);

/// Concatenates column blocks left to right.
MatrixFp hconcat(const std::vector<MatrixFp>& blocks, Index rows);

/// Block-diagonal matrix from square or rectangular blocks.
MatrixFp block_diagonal(const std::vector<MatrixFp>& blocks);

}  // namespace eiq
