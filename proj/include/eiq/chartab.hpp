#pragma once

// Ordinary characters over a splitting prime field.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "eiq/field.hpp"
#include "eiq/permgrp.hpp"

namespace eiq {

struct SplittingPrime {
  PrimeField field;
  std::size_t exponent_lcm = 1;
  std::size_t max_order = 1;

  Scalar p() const noexcept { return field.p(); }
  bool certifies(const PermGroup& g) const;
};

/// Least prime p with p = 1 mod lcm(exponents) and p > 2 max|G|.
SplittingPrime choose_splitting_prime(std::span<const GroupPtr> groups);
/// Checks a user-supplied prime; throws Precondition naming the failed condition.
SplittingPrime certify_prime(Scalar p, std::span<const GroupPtr> groups);

/// Values in F_p, one per conjugacy class of `group`.
struct ClassFunction {
  GroupPtr group;
  std::vector<Scalar> values;

  Scalar degree() const { return values.front(); }
  bool operator==(const ClassFunction& other) const { return group == other.group && values == other.values; }
};

class CharTable {
 public:
  CharTable(GroupPtr group, PrimeField field, std::vector<ClassFunction> irreducibles, std::vector<std::size_t> dims);

  const GroupPtr& group() const noexcept { return group_; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return irreducibles_.size(); }
  const std::vector<ClassFunction>& irreducibles() const noexcept { return irreducibles_; }
  const ClassFunction& irreducible(std::size_t i) const { return irreducibles_[i]; }
  std::size_t dim(std::size_t i) const { return dims_[i]; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::string label(std::size_t i) const { return "X" + std::to_string(i); }

  /// Multiplicity of every irreducible in chi.
  std::vector<std::size_t> decompose(const ClassFunction& chi) const;

 private:
  GroupPtr group_;
  PrimeField field_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<std::size_t> dims_;
};

/// Dixon's method: common eigenvectors of the class multiplication matrices.
CharTable character_table(const GroupPtr& g, const SplittingPrime& p);

/// Memoizes tables by group identity.
class CharTableCache {
 public:
  explicit CharTableCache(SplittingPrime p) : prime_(std::move(p)) {}
  const SplittingPrime& prime() const noexcept { return prime_; }
  const PrimeField& field() const noexcept { return prime_.field; }
  const CharTable& get(const GroupPtr& g);

 private:
  SplittingPrime prime_;
  std::unordered_map<const PermGroup*, std::unique_ptr<CharTable>> tables_;
};

ClassFunction trivial_character(const GroupPtr& g);

/// (1/|G|) sum_g a(g) b(g^-1).
Scalar inner_product(const ClassFunction& a, const ClassFunction& b, const PrimeField& f);
/// inner_product lifted to its least nonnegative residue.
std::size_t multiplicity(const ClassFunction& a, const ClassFunction& b, const PrimeField& f);

/// Class of the parent containing each class of the subgroup.
std::vector<std::size_t> class_fusion(const Subgroup& sub);
ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& sub);
std::size_t restriction_multiplicity(const ClassFunction& chi, const Subgroup& sub, const ClassFunction& mu,
                                     const PrimeField& f);

/// From q.group() to q.base().group().
ClassFunction inflate(const ClassFunction& chi, const QuotientGroup& q);
/// From iso.source->group() to iso.target->group().
ClassFunction transport(const ClassFunction& chi, const GroupIso& iso);

/// Fixed-point counts of act(element, point) over `points` points.
ClassFunction permutation_character(const GroupPtr& g, std::size_t points,
                                    const std::function<std::size_t(std::size_t, std::size_t)>& act,
                                    const PrimeField& f);

}  // namespace eiq
