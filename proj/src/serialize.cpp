#include "cgrad/serialize.hpp"

#include <algorithm>

#include "cgrad/error.hpp"

namespace cgrad {

namespace {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::parse_error, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

void check_document(const Json& j, const std::string& kind) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "document is not a JSON object");
  if (get<int>(j, "schema") != kSchema)
    throw Error(ErrorCode::parse_error, "unsupported schema " + j.at("schema").dump());
  if (get<std::string>(j, "kind") != kind)
    throw Error(ErrorCode::parse_error, "expected a " + kind + " document, got " + j.at("kind").dump());
}

// ---------------------------------------------------------------------------
// Groups

Json group_to_json(const Group& g) {
  Json j;
  if (g.is_trivial() && g.kind() != GroupKind::direct_product) {
    j["kind"] = "trivial";
  } else {
    switch (g.kind()) {
      case GroupKind::finite_abelian:
        j["kind"] = "finite_abelian";
        j["orders"] = g.cyclic_orders();
        break;
      case GroupKind::free:
        j["kind"] = "free";
        j["rank"] = g.rank();
        break;
      case GroupKind::free_product_cyclic:
        j["kind"] = "free_product_cyclic";
        j["orders"] = g.cyclic_orders();
        break;
      case GroupKind::direct_product: {
        j["kind"] = "direct_product";
        Json factors = Json::array();
        for (const auto& f : g.factors()) factors.push_back(group_to_json(f));
        j["factors"] = factors;
        break;
      }
      case GroupKind::finite_table:
        j["kind"] = "finite_table";
        j["table"] = g.table();
        break;
      case GroupKind::limit:
        j["kind"] = "limit";
        break;
    }
  }
  j["name"] = g.name();
  return j;
}

Group group_from_json(const Json& j) {
  auto kind = get<std::string>(j, "kind");
  if (kind == "trivial") return Group::trivial();
  if (kind == "finite_abelian") return Group::finite_abelian(get<std::vector<long>>(j, "orders"));
  if (kind == "cyclic") return Group::cyclic(get<long>(j, "order"));
  if (kind == "free") return Group::free(get<std::size_t>(j, "rank"));
  if (kind == "free_product_cyclic") return Group::free_product_cyclic(get<std::vector<long>>(j, "orders"));
  if (kind == "finite_table") return Group::finite_table(get<std::vector<std::vector<std::size_t>>>(j, "table"));
  if (kind == "direct_product") {
    std::vector<Group> factors;
    for (const auto& f : get<Json>(j, "factors")) factors.push_back(group_from_json(f));
    return Group::direct_product(factors);
  }
  throw Error(ErrorCode::parse_error, "cannot read a group of kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Categories

Json coeffs_to_json(const Coeffs& c) {
  Json j = Json::array();
  for (const auto& [i, x] : c) j.push_back(Json::array({i, x.to_string()}));
  return j;
}

Coeffs coeffs_from_json(const Json& j, const Field& field) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "coefficients must be an array");
  Coeffs c;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_string())
      throw Error(ErrorCode::parse_error, "coefficient entries are [index, \"scalar\"]");
    Scalar x = Scalar::parse(field, e[1].get<std::string>());
    if (!x.is_zero()) c.emplace_back(e[0].get<std::size_t>(), x);
  }
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return c;
}

Json category_to_json(const LinearCategory& c) {
  Json j;
  j["field"] = c.field().to_string();
  j["tag"] = c.tag();
  j["objects"] = c.object_names();
  Json basis = Json::array();
  for (const auto& b : c.basis()) basis.push_back(Json::array({b.name, b.source, b.target}));
  j["basis"] = basis;
  Json ids = Json::array();
  for (std::size_t o = 0; o < c.object_count(); ++o) ids.push_back(coeffs_to_json(c.identity(o)));
  j["identity"] = ids;
  Json compose = Json::array();
  for (std::size_t f = 0; f < c.dimension(); ++f)
    for (std::size_t g : c.out_of(c.basis(f).target)) {
      const Coeffs& v = c.compose(g, f);
      if (!v.empty()) compose.push_back(Json::array({g, f, coeffs_to_json(v)}));
    }
  j["compose"] = compose;
  if (!c.block_origin().empty()) j["block_origin"] = c.block_origin();
  return j;
}

LinearCategory category_from_json(const Json& j) {
  Field field = Field::parse(get<std::string>(j, "field"));
  LinearCategory::Builder b(field, get<std::vector<std::string>>(j, "objects"));
  std::size_t objects = get<std::vector<std::string>>(j, "objects").size();
  for (const auto& m : get<Json>(j, "basis")) {
    if (!m.is_array() || m.size() != 3) throw Error(ErrorCode::parse_error, "basis entries are [name, source, target]");
    auto s = m[1].get<std::size_t>(), t = m[2].get<std::size_t>();
    if (s >= objects || t >= objects) throw Error(ErrorCode::parse_error, "basis morphism with unknown object");
    b.add(m[0].get<std::string>(), s, t);
  }
  auto ids = get<Json>(j, "identity");
  if (ids.size() != objects) throw Error(ErrorCode::parse_error, "one identity per object expected");
  for (std::size_t o = 0; o < objects; ++o) b.set_identity(o, coeffs_from_json(ids[o], field));
  for (const auto& e : get<Json>(j, "compose")) {
    if (!e.is_array() || e.size() != 3) throw Error(ErrorCode::parse_error, "compose entries are [g, f, coefficients]");
    b.set_compose(e[0].get<std::size_t>(), e[1].get<std::size_t>(), coeffs_from_json(e[2], field));
  }
  if (j.contains("tag")) b.set_tag(get<std::string>(j, "tag"));
  if (j.contains("block_origin"))
    b.set_block_origin(get<std::vector<std::pair<std::size_t, std::size_t>>>(j, "block_origin"));
  return b.build();
}

LinearCategory algebra_from_construction(const Json& j, const Field& field) {
  auto kind = get<std::string>(j, "construction");
  if (kind == "group_algebra") return make_group_algebra(group_from_json(get<Json>(j, "group")), field);
  auto n = get<std::size_t>(j, "n");
  if (kind == "matrix") return make_matrix_algebra(n, field);
  if (kind == "matrix_xy") return make_matrix_xy(n, field);
  if (kind == "triangular") return make_triangular(n, field);
  if (kind == "diagonal") return make_diagonal(n, field);
  if (kind == "truncated") return make_truncated_poly(n, field);
  throw Error(ErrorCode::parse_error, "unknown construction '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Gradings

Json grading_to_json(const Grading& g) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "grading";
  j["name"] = g.name;
  j["field"] = g.category.field().to_string();
  j["group"] = group_to_json(g.group);
  j["category"] = category_to_json(g.category);
  Json degrees = Json::array();
  for (const auto& d : g.degrees) degrees.push_back(d.to_string());
  j["degrees"] = degrees;
  if (!(g.ambient == g.category)) {
    j["ambient"] = category_to_json(g.ambient);
    Json coords = Json::array();
    for (const auto& c : g.coordinates) coords.push_back(coeffs_to_json(c));
    j["coordinates"] = coords;
  }
  return j;
}

Grading grading_from_json(const Json& j) {
  check_document(j, "grading");
  Field field = Field::parse(j.value("field", std::string("Q")));
  Group group = group_from_json(get<Json>(j, "group"));
  LinearCategory c;
  if (j.contains("category"))
    c = category_from_json(j.at("category"));
  else if (j.contains("algebra"))
    c = algebra_from_construction(j.at("algebra"), field);
  else
    throw Error(ErrorCode::parse_error, "a grading needs \"category\" or \"algebra\"");
  auto names = get<std::vector<std::string>>(j, "degrees");
  if (names.size() != c.dimension())
    throw Error(ErrorCode::parse_error, "expected " + std::to_string(c.dimension()) + " degrees, got " +
                                            std::to_string(names.size()));
  std::vector<GroupElement> degrees;
  for (const auto& n : names) degrees.push_back(group.parse(n));
  std::string name = j.value("name", std::string("grading"));
  if (!j.contains("ambient")) return Grading::on_basis(name, c, group, degrees);
  LinearCategory ambient = category_from_json(j.at("ambient"));
  std::vector<Coeffs> coords;
  for (const auto& e : get<Json>(j, "coordinates")) coords.push_back(coeffs_from_json(e, ambient.field()));
  return Grading::transported(name, c, group, degrees, ambient, coords);
}

Json violation_to_json(const GradingViolation& v) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "violation";
  j["outer"] = v.outer;
  j["inner"] = v.inner;
  j["offending"] = v.offending;
  j["message"] = v.message;
  return j;
}

// ---------------------------------------------------------------------------
// Reports

Json covering_to_json(const CoveringReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "covering";
  j["scope"] = r.scope;
  j["checked"] = r.checked;
  j["galois"] = r.galois;
  Json stars = Json::array();
  for (const auto& s : r.stars)
    stars.push_back({{"object", s.object},
                     {"out", s.out_dimension},
                     {"in", s.in_dimension},
                     {"base_out", s.base_out_dimension},
                     {"base_in", s.base_in_dimension}});
  j["stars"] = stars;
  j["boundary"] = r.boundary;
  return j;
}

CoveringReport covering_from_json(const Json& j) {
  check_document(j, "covering");
  CoveringReport r;
  r.scope = get<std::string>(j, "scope");
  r.checked = get<std::size_t>(j, "checked");
  r.galois = get<bool>(j, "galois");
  for (const auto& s : get<Json>(j, "stars"))
    r.stars.push_back({get<std::string>(s, "object"), get<std::size_t>(s, "out"), get<std::size_t>(s, "in"),
                       get<std::size_t>(s, "base_out"), get<std::size_t>(s, "base_in")});
  r.boundary = get<std::vector<std::string>>(j, "boundary");
  return r;
}

Json table_to_json(const std::vector<TableRow>& rows) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "k4-table";
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"group", r.group}, {"trivial", r.trivial_dimension}, {"other", r.other_dimensions}});
  j["rows"] = out;
  return j;
}

std::vector<TableRow> table_from_json(const Json& j) {
  check_document(j, "k4-table");
  std::vector<TableRow> rows;
  for (const auto& r : get<Json>(j, "rows"))
    rows.push_back({get<std::string>(r, "group"), get<std::size_t>(r, "trivial"),
                    get<std::vector<std::size_t>>(r, "other")});
  return rows;
}

Pi1Summary summarize(const Pi1Result& r) {
  Pi1Summary s;
  s.tag = r.tag;
  s.field = r.field;
  s.group = r.reference.name();
  s.limit = r.limit.group.name();
  s.certification = to_string(r.certification);
  for (const auto& n : r.diagram.nodes) s.nodes.push_back(n.name());
  for (const auto& a : r.diagram.arrows) s.arrows.emplace_back(a.source, a.target);
  for (const auto& c : r.limit.components) s.methods.push_back(to_string(c.method));
  s.pruned = r.limit.pruned;
  s.projections_surjective = r.projections_surjective;
  if (r.certificate) {
    s.radius = r.certificate->radius;
    s.candidate_elements = r.certificate->candidate_elements;
    s.compatible_tuples = r.certificate->compatible_tuples;
  }
  return s;
}

Json pi1_to_json(const Pi1Summary& s) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "pi1";
  j["tag"] = s.tag;
  j["field"] = s.field;
  j["group"] = s.group;
  j["limit"] = s.limit;
  j["certification"] = s.certification;
  j["nodes"] = s.nodes;
  j["arrows"] = s.arrows;
  j["methods"] = s.methods;
  j["pruned"] = s.pruned;
  j["projections_surjective"] = s.projections_surjective;
  if (s.certification == "bounded")
    j["certificate"] = {{"radius", s.radius},
                        {"candidate_elements", s.candidate_elements},
                        {"compatible_tuples", s.compatible_tuples}};
  return j;
}

Pi1Summary pi1_from_json(const Json& j) {
  check_document(j, "pi1");
  Pi1Summary s;
  s.tag = get<std::string>(j, "tag");
  s.field = get<std::string>(j, "field");
  s.group = get<std::string>(j, "group");
  s.limit = get<std::string>(j, "limit");
  s.certification = get<std::string>(j, "certification");
  s.nodes = get<std::vector<std::string>>(j, "nodes");
  s.arrows = get<std::vector<std::pair<std::size_t, std::size_t>>>(j, "arrows");
  s.methods = get<std::vector<std::string>>(j, "methods");
  s.pruned = get<std::vector<std::size_t>>(j, "pruned");
  s.projections_surjective = get<bool>(j, "projections_surjective");
  if (j.contains("certificate")) {
    const Json& c = j.at("certificate");
    s.radius = get<std::size_t>(c, "radius");
    s.candidate_elements = get<std::size_t>(c, "candidate_elements");
    s.compatible_tuples = get<std::size_t>(c, "compatible_tuples");
  }
  return s;
}

namespace {

Json witness_to_json(const SimplyConnectedWitness& w) {
  return {{"grading", w.grading}, {"group", w.group}, {"mechanism", w.mechanism}, {"detail", w.detail}};
}

SimplyConnectedWitness witness_from_json(const Json& j) {
  return {get<std::string>(j, "grading"), get<std::string>(j, "group"), get<std::string>(j, "mechanism"),
          get<std::string>(j, "detail")};
}

}  // namespace

Json no_universal_to_json(const NoUniversalReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "no-universal";
  j["tag"] = r.tag;
  j["first"] = witness_to_json(r.first);
  j["second"] = witness_to_json(r.second);
  j["invariant"] = r.distinction.invariant;
  j["values"] = {r.distinction.first, r.distinction.second};
  j["bounded"] = r.bounded;
  j["conclusion"] = r.conclusion;
  return j;
}

NoUniversalReport no_universal_from_json(const Json& j) {
  check_document(j, "no-universal");
  NoUniversalReport r;
  r.tag = get<std::string>(j, "tag");
  r.first = witness_from_json(get<Json>(j, "first"));
  r.second = witness_from_json(get<Json>(j, "second"));
  r.distinction.invariant = get<std::string>(j, "invariant");
  r.distinction.distinguished = !r.distinction.invariant.empty();
  auto values = get<std::vector<std::string>>(j, "values");
  if (values.size() != 2) throw Error(ErrorCode::parse_error, "expected two invariant values");
  r.distinction.first = values[0];
  r.distinction.second = values[1];
  r.bounded = get<bool>(j, "bounded");
  r.conclusion = get<std::string>(j, "conclusion");
  return r;
}

}  // namespace cgrad
