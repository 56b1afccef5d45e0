#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cgrad/groups.hpp"

namespace cgrad {

/// Finite diagram of groups and surjections between them.
struct GroupDiagram {
  std::vector<Group> nodes;
  std::vector<LimitArrow> arrows;
  /// Optional display labels, one per node.
  std::vector<std::string> labels;

  /// Checks endpoints and that every arrow is not provably non-surjective.
  void validate() const;
};

enum class LimitMethod { trivial, all_finite, fibre_product, initial_node };

const char* to_string(LimitMethod m);

struct LimitComponent {
  std::vector<std::size_t> nodes;  // diagram indices
  LimitMethod method = LimitMethod::trivial;
  Group group;
};

struct LimitResult {
  Group group;
  /// One projection per diagram node, including pruned trivial nodes.
  std::vector<Homomorphism> projections;
  std::vector<LimitComponent> components;
  /// Node indices removed because their group is trivial.
  std::vector<std::size_t> pruned;

  bool exact() const { return group.is_finite(); }
};

/// Limit of the diagram after deleting trivial nodes. Each connected
/// component must be all-finite, a cospan G1 -> K <- G2 with K finite, or
/// have a node with a direct arrow to every other node of the component;
/// otherwise throws unsupported_shape. Components are combined by direct
/// product.
LimitResult diagram_limit(const GroupDiagram& d, bool prune_trivial = true);

/// Compatible tuples whose components all have normal-form length <= radius.
std::vector<std::vector<GroupElement>> compatible_tuples(const GroupDiagram& d, std::size_t radius);

struct LimitCertificate {
  std::string candidate;
  std::size_t radius = 0;
  std::size_t candidate_elements = 0;
  std::size_t compatible_tuples = 0;
};

/// Bounded check that the cone candidate -> nodes induces a bijection onto
/// the compatible tuples: injective on the candidate ball of the radius, and
/// every compatible tuple of the radius is hit. Throws cone_does_not_commute
/// or certificate_failure with a witness in the message.
LimitCertificate certify_limit_iso(const GroupDiagram& d, const Group& candidate,
                                   const std::vector<Homomorphism>& cone, std::size_t radius);

}  // namespace cgrad
