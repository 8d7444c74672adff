#pragma once

// Finite permutation groups held as full element enumerations.
//
// Every group fixes a deterministic element order (breadth-first from the
// identity, each level sorted lexicographically by image sequence), so class
// order, character rows and quiver vertex labels are reproducible.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace eiq {

inline constexpr std::size_t kDefaultGroupBound = 10000;

/// A bijection of {0..degree-1}. Product is right-to-left: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws Validation unless images is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::size_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

struct ConjugacyClass {
  std::size_t representative;         // lexicographically least member
  std::vector<std::size_t> members;   // ascending element positions
};

class PermGroup {
 public:
  /// Enumerates the group generated by `generators`. Throws SizeLimit when the
  /// closure exceeds `bound` elements and Validation on a degree mismatch.
  static std::shared_ptr<const PermGroup> generate(std::size_t degree, std::vector<Permutation> generators,
                                                   std::size_t bound = kDefaultGroupBound);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Element positions of the generators, in generator order.
  const std::vector<std::size_t>& generator_positions() const noexcept { return generator_positions_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> find(const Permutation& p) const;
  /// Position of p; throws Precondition if p is not a member.
  std::size_t position(const Permutation& p) const;

  static constexpr std::size_t identity() noexcept { return 0; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  std::size_t conjugate(std::size_t g, std::size_t x) const { return multiply(multiply(g, x), inverse(g)); }

  /// Classes ordered by representative (lexicographic on image sequences).
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  /// Class containing the inverses of the given class's members.
  std::size_t inverse_class(std::size_t cls) const { return inverse_class_[cls]; }
  std::size_t exponent() const noexcept { return exponent_; }

 private:
  PermGroup() = default;
  void build_tables();
  void build_classes();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> generator_positions_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::uint32_t> table_;  // order^2 products when small enough
  std::vector<std::size_t> inverses_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> inverse_class_;
  std::size_t exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);

/// A subgroup recorded by positions into its parent, together with its own
/// standalone enumeration (for class and character computations).
class Subgroup {
 public:
  Subgroup() = default;

  const GroupPtr& parent() const noexcept { return parent_; }
  /// Ascending parent positions.
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(std::size_t parent_pos) const { return local_[parent_pos] != kAbsent; }

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t to_parent(std::size_t local_pos) const { return to_parent_[local_pos]; }
  /// Standalone position of a parent member; throws Precondition when absent.
  std::size_t to_local(std::size_t parent_pos) const;

  bool is_whole() const noexcept { return parent_ && members_.size() == parent_->order(); }
  bool is_normal_in(const Subgroup& over) const;
  bool operator==(const Subgroup& other) const { return parent_ == other.parent_ && members_ == other.members_; }

  friend Subgroup stabilizer_closure(const GroupPtr& parent, std::span<const std::size_t> members);

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  GroupPtr parent_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> local_;  // parent position -> local position or kAbsent
  GroupPtr group_;
  std::vector<std::size_t> to_parent_;
};

/// Smallest subgroup of `parent` containing the given parent positions.
Subgroup stabilizer_closure(const GroupPtr& parent, std::span<const std::size_t> members);
Subgroup whole_group(const GroupPtr& parent);
Subgroup trivial_subgroup(const GroupPtr& parent);

/// base / kernel, with kernel normal in base. The quotient is also realized as
/// a permutation group (its regular action on cosets) for character work.
class QuotientGroup {
 public:
  const Subgroup& base() const noexcept { return base_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  std::size_t order() const noexcept { return cosets_.size(); }
  /// Cosets ordered by their least parent position.
  const std::vector<std::vector<std::size_t>>& cosets() const noexcept { return cosets_; }

  /// Coset index of a base member given by parent position.
  std::size_t project(std::size_t parent_pos) const;
  std::size_t coset_product(std::size_t a, std::size_t b) const;

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t coset_to_element(std::size_t coset) const { return coset_to_element_[coset]; }
  std::size_t element_to_coset(std::size_t element) const { return element_to_coset_[element]; }

  friend QuotientGroup quotient(const Subgroup& base, const Subgroup& kernel);

 private:
  Subgroup base_;
  Subgroup kernel_;
  std::vector<std::vector<std::size_t>> cosets_;
  std::vector<std::size_t> coset_of_;  // parent position -> coset, or -1
  std::vector<std::size_t> product_;   // coset multiplication table
  GroupPtr group_;
  std::vector<std::size_t> coset_to_element_;
  std::vector<std::size_t> element_to_coset_;
};

/// Throws Validation ("normality") when kernel is not normal in base.
QuotientGroup quotient(const Subgroup& base, const Subgroup& kernel);

/// A bijection between quotient groups, stored on coset indices.
struct GroupIso {
  std::shared_ptr<const QuotientGroup> source;
  std::shared_ptr<const QuotientGroup> target;
  std::vector<std::size_t> map;

  std::size_t apply(std::size_t coset) const { return map[coset]; }
  std::size_t apply_inverse(std::size_t coset) const;
  /// Bijective and multiplicative over all coset pairs.
  bool is_valid() const;
};

}  // namespace eiq
