#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cgrad/catalog.hpp"
#include "cgrad/pi1.hpp"
#include "cgrad/smash.hpp"

namespace cgrad {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

/// Groups: {"kind": "finite_abelian", "orders": [2, 2]}, {"kind": "free",
/// "rank": 2}, {"kind": "free_product_cyclic", "orders": [2, 3]},
/// {"kind": "direct_product", "factors": [...]}, {"kind": "finite_table",
/// "table": [[...]]}. Every form also carries "name". Limit groups are
/// written but cannot be read back.
Json group_to_json(const Group& g);
Group group_from_json(const Json& j);

Json coeffs_to_json(const Coeffs& c);
Coeffs coeffs_from_json(const Json& j, const Field& field);

/// Full structure constants.
Json category_to_json(const LinearCategory& c);
LinearCategory category_from_json(const Json& j);

/// {"construction": "matrix" | "matrix_xy" | "triangular" | "diagonal" |
///  "truncated" | "group_algebra", "n": ..., "group": {...}}
LinearCategory algebra_from_construction(const Json& j, const Field& field);

/// {"schema": 1, "kind": "grading", "name", "field", "group", "category",
/// "degrees", and "ambient" + "coordinates" for transported gradings}. The
/// loader also takes "algebra" (a construction) in place of "category".
Json grading_to_json(const Grading& g);
Grading grading_from_json(const Json& j);

Json violation_to_json(const GradingViolation& v);

Json covering_to_json(const CoveringReport& r);
CoveringReport covering_from_json(const Json& j);

Json table_to_json(const std::vector<TableRow>& rows);
std::vector<TableRow> table_from_json(const Json& j);

/// Flat record of a fundamental group computation.
struct Pi1Summary {
  std::string tag;
  std::string field;
  std::string group;      // the reference group, as certified
  std::string limit;      // the computed limit group
  std::string certification;
  std::vector<std::string> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<std::string> methods;  // one per limit component
  std::vector<std::size_t> pruned;
  bool projections_surjective = false;
  std::size_t radius = 0;  // bounded results
  std::size_t candidate_elements = 0;
  std::size_t compatible_tuples = 0;
};

Pi1Summary summarize(const Pi1Result& r);
Json pi1_to_json(const Pi1Summary& s);
Pi1Summary pi1_from_json(const Json& j);

Json no_universal_to_json(const NoUniversalReport& r);
NoUniversalReport no_universal_from_json(const Json& j);

/// Throws parse_error unless j is an object with "schema": 1 and the kind.
void check_document(const Json& j, const std::string& kind);

}  // namespace cgrad
