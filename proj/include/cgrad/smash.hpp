#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgrad/grading.hpp"

namespace cgrad {

struct SmashObject {
  std::size_t base = 0;  // object of the graded category
  GroupElement element;
};

/// The smash product B#G: objects B_0 x G, and hom((b,g),(c,h)) is the
/// component of degree h^-1 g of hom(b,c), spanned by copies of the
/// homogeneous basis vectors. Infinite groups are truncated to the ball of
/// the given word radius.
struct SmashCategory {
  Grading base;
  std::optional<std::size_t> radius;  // empty: the whole (finite) group
  std::vector<SmashObject> objects;   // breadth-first over normal forms
  LinearCategory realization;
  /// Homogeneous basis vector of `base.category` behind each morphism.
  std::vector<std::size_t> covering;
  /// Objects whose star is entirely materialized.
  std::vector<bool> interior;

  bool full() const { return !radius.has_value(); }
  std::string label(std::size_t object) const;  // "(b, word)"
  std::optional<std::size_t> find(std::size_t base_object, const GroupElement& g) const;

  std::map<std::pair<std::size_t, GroupElement>, std::size_t> index;
};

/// Throws infinite_without_radius for infinite groups without a radius.
SmashCategory smash_product(const Grading& g, std::optional<std::size_t> radius = std::nullopt);

struct StarRow {
  std::string object;
  std::size_t out_dimension = 0;
  std::size_t in_dimension = 0;
  std::size_t base_out_dimension = 0;
  std::size_t base_in_dimension = 0;
};

struct CoveringReport {
  std::size_t checked = 0;
  std::vector<StarRow> stars;
  std::vector<std::string> boundary;
  std::string scope;  // "full" or "interior-certified at radius R"
  bool galois = false;
};

/// Checks that the covering functor maps the star of every interior object
/// bijectively onto the star of its image. Throws star_mismatch.
CoveringReport verify_covering(const SmashCategory& s);

/// For a full smash: the left translation action is free, transitive on
/// fibres, preserves morphisms and composition and commutes with the
/// covering; and the smash is connected. Throws not_connected or
/// action_failure.
bool verify_galois(const SmashCategory& s);

bool is_connected_category(const LinearCategory& c);
bool is_connected_category(const SmashCategory& s);

/// is_connected(g) against connectedness of the full smash; throws
/// mismatch_bug when they disagree.
bool check_smash_connectedness_equivalence(const Grading& g);

struct SchurianCertificate {
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::size_t compositions = 0;
};

/// Every hom space one-dimensional and every composition of basis
/// morphisms nonzero. Throws shape_mismatch with a witness.
SchurianCertificate certify_schurian_simply_connected(const LinearCategory& c);

struct RigidityCertificate {
  std::size_t n = 0;
  std::size_t radius = 0;
  std::size_t objects = 0;
  std::size_t interior_objects = 0;
  std::size_t idempotents = 0;  // vertices: primitive idempotents at interior objects
  std::size_t edges = 0;        // morphisms between distinct objects
  std::size_t triangles = 0;    // relations g o f = c h among edges
  std::size_t components = 0;
  bool vacuous = false;  // no morphism between distinct objects
  std::string scope;
};

/// Bounded idempotent-rigidity check, over the objects off the boundary
/// word-length layer: endomorphism algebras are spanned by orthogonal
/// idempotents, homs between distinct objects have dimension at most one,
/// and starting from a spanning forest of the idempotent graph every edge
/// degree is forced by nonzero composites (g o f a multiple of an edge, or
/// of an idempotent, which has degree 1). Then every closed walk has degree
/// 1. Throws check_failure with the first unforced edge.
RigidityCertificate certify_smash_rigidity(const SmashCategory& s);

/// certify_smash_rigidity on the radius truncation of M_n # F_{n-1}.
RigidityCertificate certify_free_smash_rigidity(std::size_t n, std::size_t radius);

}  // namespace cgrad
