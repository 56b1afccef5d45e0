#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cgrad/error.hpp"

namespace cgrad {

enum class GroupKind {
  finite_abelian,       // invariant factor list
  finite_table,         // multiplication table over indexed elements
  free,                 // free group on s1..sr
  free_product_cyclic,  // C_n1 * C_n2 * ... (order 0 means infinite cyclic)
  direct_product,       // tuples, componentwise product
  limit,                // compatible tuples of a finite diagram of groups
};

const char* to_string(GroupKind kind);

class Group;
class Homomorphism;

namespace detail {
class GroupImpl;
}

/// Sequence of (generator index, exponent) pairs.
using FormalWord = std::vector<std::pair<std::size_t, long>>;

/// An element in canonical normal form. The payload depends on the kind:
///   finite_abelian        residues, one per invariant factor
///   finite_table          {index}
///   free                  reduced letters, +k for s_k and -k for s_k^-1
///   free_product_cyclic   flat syllable pairs (factor, exponent)
///   direct_product, limit one part per factor / node
class GroupElement {
 public:
  GroupElement() = default;

  Group group() const;
  const std::vector<long>& code() const { return code_; }
  const std::vector<GroupElement>& parts() const { return parts_; }

  bool is_identity() const;
  std::size_t length() const;
  std::string to_string() const;

  GroupElement operator*(const GroupElement& b) const;
  GroupElement inverse() const;
  GroupElement pow(long exponent) const;

  /// Payload equality within one group; elements of structurally different
  /// groups never compare equal.
  bool operator==(const GroupElement& b) const;
  bool operator!=(const GroupElement& b) const { return !(*this == b); }
  /// Payload order, only meaningful within a single group.
  bool operator<(const GroupElement& b) const;

 private:
  friend class Group;
  friend class detail::GroupImpl;
  std::shared_ptr<const detail::GroupImpl> group_;
  std::vector<long> code_;
  std::vector<GroupElement> parts_;
};

struct LimitArrow;

/// Immutable group descriptor with normal forms for its elements.
class Group {
 public:
  Group();  // trivial group

  static Group trivial();
  static Group cyclic(long n);
  static Group finite_abelian(std::vector<long> invariant_factors);
  static Group finite_table(std::vector<std::vector<std::size_t>> table);
  /// Closure of a set of permutations of {0..n-1} as a table group.
  static Group from_permutations(const std::vector<std::vector<std::size_t>>& generators);
  static Group free(std::size_t rank);
  static Group free_product_cyclic(std::vector<long> orders);
  static Group direct_product(std::vector<Group> factors);
  /// Compatible tuples of `nodes` with respect to `arrows`. Generators are
  /// computed for finite diagrams and must be supplied otherwise.
  static Group limit(std::vector<Group> nodes, std::vector<LimitArrow> arrows,
                     std::optional<std::vector<GroupElement>> generators = std::nullopt);

  GroupKind kind() const;
  /// Display name ("C2 x C3", "Z", "F2", "(C2 * C2) x C4").
  std::string name() const;
  /// Structural identity string; equal keys mean equal descriptors.
  const std::string& key() const;

  bool is_finite() const;
  std::size_t order() const;
  bool is_trivial() const;

  GroupElement identity() const;
  const std::vector<GroupElement>& generators() const;
  GroupElement generator(std::size_t i) const;
  std::vector<std::string> generator_names() const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement invert(const GroupElement& a) const;
  GroupElement normalize(const FormalWord& word) const;
  /// Expression of an element as a word in the generators.
  FormalWord letters(const GroupElement& a) const;
  std::size_t word_length(const GroupElement& a) const;

  std::vector<GroupElement> elements() const;
  /// Elements whose normal form has length <= radius in every factor,
  /// ordered by length then payload.
  std::vector<GroupElement> ball(std::size_t radius) const;

  std::string format(const GroupElement& a) const;
  GroupElement parse(const std::string& text) const;

  // Kind-specific views.
  const std::vector<long>& cyclic_orders() const;
  std::size_t rank() const;
  const std::vector<Group>& factors() const;
  const std::vector<LimitArrow>& limit_arrows() const;
  const std::vector<std::vector<std::size_t>>& table() const;

  GroupElement abelian(std::vector<long> residues) const;
  GroupElement table_element(std::size_t index) const;
  /// Direct-product or limit element from its parts (validated).
  GroupElement tuple(std::vector<GroupElement> parts) const;
  /// Embedding of a factor element into a direct product.
  GroupElement embed(std::size_t factor, const GroupElement& a) const;

  bool operator==(const Group& other) const;
  bool operator!=(const Group& other) const { return !(*this == other); }

  const std::shared_ptr<const detail::GroupImpl>& impl() const { return impl_; }

 private:
  friend class GroupElement;
  friend class detail::GroupImpl;
  explicit Group(std::shared_ptr<const detail::GroupImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::GroupImpl> impl_;
};

/// Group homomorphism, given by generator images, a component projection,
/// or a composite of those.
class Homomorphism {
 public:
  Homomorphism() = default;

  /// Validates that the defining relations of `source` map to the identity.
  static Homomorphism from_images(Group source, Group target, std::vector<GroupElement> images);
  static Homomorphism from_images(const Group& source, const Group& target,
                                  const std::vector<std::string>& images);
  static Homomorphism identity(const Group& group);
  static Homomorphism trivial(const Group& source, const Group& target);
  /// Projection of a direct product or limit onto one component.
  static Homomorphism projection(const Group& source, std::size_t index);
  /// second o first
  static Homomorphism compose(const Homomorphism& second, const Homomorphism& first);

  const Group& source() const;
  const Group& target() const;

  GroupElement apply(const GroupElement& a) const;
  GroupElement operator()(const GroupElement& a) const { return apply(a); }
  std::vector<GroupElement> generator_images() const;

  /// True when the homomorphism is stored as generator images.
  bool has_images() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

struct LimitArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  Homomorphism map;
};

// ---------------------------------------------------------------------------
// Algorithms

/// Whether `subset` generates `group`. Finite kinds use closure, free groups
/// use Stallings folding, free products of cyclics return `unknown` when the
/// sufficient test and finite-quotient falsification are both inconclusive.
Tri generates(const Group& group, const std::vector<GroupElement>& subset);

Tri is_surjective(const Homomorphism& h);

/// Subgroup generated by `subset` in a finite group.
std::vector<GroupElement> closure(const Group& group, const std::vector<GroupElement>& subset);

long element_order(const GroupElement& a);
bool is_abelian(const Group& group);
/// Invariant factors of a finite abelian group (empty for the trivial group).
std::vector<long> abelian_invariants(const Group& group);
/// Comparable isomorphism-class label: invariant factors for finite abelian
/// groups, order and element-order profile for other finite groups, the
/// display name otherwise.
std::string isomorphism_class(const Group& group);

/// Folded subgroup graph of a finitely generated subgroup of a free group.
struct StallingsGraph {
  std::size_t vertices = 0;
  std::size_t base = 0;
  /// (from, generator index, to) for each positively oriented edge.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges;

  /// The folded graph is a single vertex carrying one loop per generator.
  bool is_full_rose(std::size_t rank) const;
};

StallingsGraph stallings_fold(std::size_t rank, const std::vector<GroupElement>& words);

}  // namespace cgrad
