#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cgrad/grading.hpp"

namespace cgrad {

/// C_n x C_n grading of M_n with deg x^i y^j = (t^i, t^j), written on the
/// x^i y^j basis inside the matrix units.
Grading fine_matrix_grading(std::size_t n, const Field& field);

enum class GoodKind { matrix, triangular };

/// deg E_{i+1,i} = m(i), deg E_{i,i+1} = m(i)^-1, deg E_ii = 1 and the rest
/// forced by products. `m` holds n-1 elements of `group`.
Grading good_grading_from_map(GoodKind kind, std::size_t n, const Group& group, const std::vector<GroupElement>& m,
                              const Field& field);
/// The good grading by F_{n-1} with m(i) = s_i.
Grading free_good_grading(GoodKind kind, std::size_t n, const Field& field);
/// The good grading by C_n with m(i) = t.
Grading cyclic_good_grading(std::size_t n, const Field& field);

Grading group_algebra_grading(const Group& group, const Field& field);
/// deg x^i = s^i over Z = F_1; needs characteristic p.
Grading truncated_Z_grading(std::size_t p, const Field& field);
/// The natural C_p grading moved to k[x]/(x^p) along t -> 1 + x; needs
/// characteristic p.
Grading truncated_group_grading(std::size_t p, const Field& field);
/// Grading of k^|G| transported from kG along the character isomorphism.
Grading ergodic_diagonal_grading(const Group& group, const Field& field);
/// Every basis vector of trivial degree.
Grading trivial_grading(const LinearCategory& c, const Group& group = Group::trivial());

/// Grading of the product algebra by the free product of the groups. The
/// groups must be trivial, cyclic or free products of cyclics; trivial
/// factors are dropped, and a single nontrivial factor keeps its group.
Grading free_product_grading(const std::vector<Grading>& parts);
Grading free_product_grading(const Grading& a, const Grading& b);

/// Free product of ergodic gradings over the blocks of a partition of
/// {1..n}; block i carries an abelian group of its size.
Grading specific_diagonal_grading(const std::vector<std::vector<std::size_t>>& partition,
                                  const std::vector<Group>& groups, const Field& field);

/// Parsed algebra tag: k2, k3, k4, M2, M3, Mp:<p>, Tn:<n>, trunc:<p>.
struct AlgebraTag {
  enum class Kind { diagonal, matrix, triangular, truncated };
  Kind kind = Kind::diagonal;
  std::size_t n = 0;
  std::string text;  // canonical spelling
};

AlgebraTag parse_tag(const std::string& tag);
/// Q(z12) for diagonal tags, Q for M2 and T_n, Q(z_n) for M_n, F_p for trunc.
Field default_field(const AlgebraTag& tag);

/// The cofinal diagram of maximal connected gradings with their quotient
/// arrows; every arrow is validated.
GradingDiagram grading_diagram_for(const std::string& tag, const Field& field);
GradingDiagram grading_diagram_for(const std::string& tag);

struct TableRow {
  std::string group;
  std::size_t trivial_dimension = 0;
  std::vector<std::size_t> other_dimensions;
};

/// The specific gradings of k^4, one row per partition type.
std::vector<TableRow> k4_table_report(const Field& field);

/// Whether every matrix unit lies in one coset component of the fine
/// grading modulo the subgroup generated by `subgroup`.
bool fine_quotient_is_good(const Grading& fine, const std::vector<GroupElement>& subgroup);

struct CommonQuotientCertificate {
  std::size_t n = 0;
  std::size_t subgroups_checked = 0;
  std::size_t good_subgroups = 0;
  std::string minimal_subgroup;
};

/// Checks that the fine grading modulo 1 x C_n is the good C_n grading, that
/// the free good grading has the same quotient, and that 1 x C_n lies in
/// every subgroup with a good quotient. Throws certificate_failure.
CommonQuotientCertificate verify_common_quotient(std::size_t n, const Field& field);

struct CatalogEntry {
  std::string name;
  std::string description;
  Grading grading;
};

/// Names of all catalog entries, in a fixed order.
std::vector<std::string> catalog_names();
CatalogEntry catalog_entry(const std::string& name);
CatalogEntry catalog_entry(const std::string& name, const Field& field);
std::vector<CatalogEntry> catalog_entries();

}  // namespace cgrad
