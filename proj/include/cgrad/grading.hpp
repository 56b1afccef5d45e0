#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgrad/algebra.hpp"
#include "cgrad/groups.hpp"
#include "cgrad/limits.hpp"

namespace cgrad {

/// A grading given by a homogeneous basis. `category` is the graded
/// category written in that basis; `ambient` is the category being graded
/// and `coordinates` expresses each homogeneous vector in its basis. For
/// gradings of the standard basis the two coincide.
struct Grading {
  std::string name;
  LinearCategory category;
  Group group;
  std::vector<GroupElement> degrees;  // one per basis vector of `category`
  LinearCategory ambient;
  std::vector<Coeffs> coordinates;

  /// Grading of the standard basis of `c`.
  static Grading on_basis(std::string name, LinearCategory c, Group g, std::vector<GroupElement> degrees);
  static Grading on_basis(std::string name, LinearCategory c, Group g, const std::vector<std::string>& degrees);
  /// Grading of `ambient` whose homogeneous basis is the image of the basis
  /// of `homogeneous` under the algebra isomorphism given by `coordinates`.
  static Grading transported(std::string name, LinearCategory homogeneous, Group g, std::vector<GroupElement> degrees,
                             LinearCategory ambient, std::vector<Coeffs> coordinates);

  const GroupElement& degree(const std::string& basis_name) const;
};

struct GradingViolation {
  std::string outer;      // h
  std::string inner;      // f
  std::string offending;  // basis vector of h o f outside degree deg h * deg f
  std::string message;
};

/// Checks the grading axiom on every composable basis pair and that
/// identities are homogeneous of trivial degree.
std::optional<GradingViolation> verify_grading(const Grading& g);

/// Degrees carrying a nonzero component, in basis order of first appearance.
std::vector<GroupElement> support(const Grading& g);

/// (degree, dimension) per nonzero component, in order of first appearance.
std::vector<std::pair<GroupElement, std::size_t>> component_dimensions(const Grading& g);
std::size_t trivial_component_dimension(const Grading& g);

/// Whether the underlying category is connected by nonzero walks.
bool is_walk_connected(const LinearCategory& c);

/// One object: generation of the group by the support. Several objects:
/// walk-connectivity, then generation by the degrees of the closed walks
/// obtained from a spanning tree at object 0.
Tri is_connected(const Grading& g);

/// Degrees composed with phi; throws not_surjective when phi provably is not.
Grading quotient_grading(const Grading& g, const Homomorphism& phi);

struct WalkStep {
  std::string morphism;
  int sign = 1;
};
using Walk = std::vector<WalkStep>;

/// (deg f_n)^e_n ... (deg f_1)^e_1; throws broken_chain for non-chaining steps.
GroupElement walk_degree(const Grading& g, const Walk& w);

/// Whether some homogeneous element of nontrivial degree is invertible.
/// Tests basis vectors, then per degree the all-ones combination and a few
/// seeded random combinations of the component.
bool has_invertible_nontrivial_homogeneous(const Grading& g, std::uint64_t seed = 0);

struct DistinguishReport {
  bool distinguished = false;
  std::string invariant;  // empty when indistinguishable
  std::string first;
  std::string second;

  std::string to_string() const;
};

/// Compares trivial-component dimension, component-dimension multiset,
/// the invertibility discriminator and the group isomorphism class, and
/// reports the first that differs.
DistinguishReport distinguish(const Grading& a, const Grading& b);

/// Whether quotient_grading(source, phi) has the same homogeneous
/// components as `target`, compared as subspaces of the shared ambient.
bool check_quotient_arrow(const Grading& source, const Grading& target, const Homomorphism& phi);

struct GradingArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  Homomorphism map;
};

struct GradingDiagram {
  std::string tag;
  std::vector<Grading> nodes;
  std::vector<GradingArrow> arrows;

  /// Checks every arrow with check_quotient_arrow; throws check_failure.
  void validate() const;
  GroupDiagram groups() const;
};

}  // namespace cgrad
