#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cgrad/catalog.hpp"
#include "cgrad/limits.hpp"
#include "cgrad/smash.hpp"

namespace cgrad {

enum class Certification { exact, bounded };

const char* to_string(Certification c);

struct Pi1Result {
  std::string tag;
  std::string field;
  GroupDiagram diagram;
  LimitResult limit;
  Group reference;
  Certification certification = Certification::exact;
  std::optional<LimitCertificate> certificate;  // bounded results only
  /// Images of the limit generators generate every nontrivial node.
  bool projections_surjective = false;
};

/// Limit of the grading diagram of the tag with trivial nodes removed. A
/// finite limit is compared with the reference group by isomorphism class;
/// an infinite one is certified against it by a cone checked on the ball of
/// the radius; a limit that is a direct product must also have the finite
/// part of the reference, compared by abelian invariants.
/// Throws certificate_failure.
Pi1Result fundamental_group(const std::string& tag, const Field& field, std::size_t radius);
Pi1Result fundamental_group(const std::string& tag, std::size_t radius = 6);

/// The expected fundamental group: C2, C2 x C3, (C2 * C2) x C6 x C4 x C2,
/// Z x C2, F_{p-1} x C_p, F_{n-1}, Z x C_p.
Group pi1_reference(const std::string& tag);

/// Abelian invariants of the product of the finite factors of a direct
/// product (or of the group itself when finite); empty when there are none.
std::vector<long> finite_part_invariants(const Group& g);

/// Maps from pi1_reference(tag) to the nodes of the grading diagram.
std::vector<Homomorphism> reference_cone(const std::string& tag, const GroupDiagram& d, const Group& reference);

struct SimplyConnectedWitness {
  std::string grading;
  std::string group;
  std::string mechanism;  // "schurian smash" or "idempotent rigidity"
  std::string detail;
};

struct NoUniversalReport {
  std::string tag;
  SimplyConnectedWitness first;
  SimplyConnectedWitness second;
  DistinguishReport distinction;
  bool bounded = false;  // one of the certificates is radius-limited
  std::string conclusion;
};

/// Two simply connected gradings of the algebra that are not isomorphic, so
/// no universal covering exists. Tags: matrix tags, trunc:p and k4.
NoUniversalReport check_no_universal(const std::string& tag);

}  // namespace cgrad
