#include "cgrad/pi1.hpp"

#include "cgrad/error.hpp"

namespace cgrad {

namespace {

using Images = std::vector<std::string>;

Homomorphism hom(const Group& s, const Group& t, const Images& images) {
  return Homomorphism::from_images(s, t, images);
}

void finite_factors(const Group& g, std::vector<Group>& out) {
  if (g.kind() == GroupKind::direct_product) {
    for (const auto& f : g.factors()) finite_factors(f, out);
  } else if (g.is_finite() && !g.is_trivial()) {
    out.push_back(g);
  }
}

}  // namespace

std::vector<long> finite_part_invariants(const Group& g) {
  std::vector<Group> parts;
  finite_factors(g, parts);
  if (parts.empty()) return {};
  Group product = Group::direct_product(parts);
  if (!is_abelian(product)) throw Error(ErrorCode::unsupported_shape, "finite part of " + g.name() + " is not abelian");
  return abelian_invariants(product);
}

const char* to_string(Certification c) { return c == Certification::exact ? "exact" : "bounded"; }

Group pi1_reference(const std::string& text) {
  AlgebraTag tag = parse_tag(text);
  long n = static_cast<long>(tag.n);
  switch (tag.kind) {
    case AlgebraTag::Kind::diagonal:
      if (n == 2) return Group::cyclic(2);
      if (n == 3) return Group::direct_product({Group::cyclic(2), Group::cyclic(3)});
      return Group::direct_product(
          {Group::free_product_cyclic({2, 2}), Group::cyclic(6), Group::cyclic(4), Group::cyclic(2)});
    case AlgebraTag::Kind::matrix:
      return Group::direct_product({Group::free(tag.n - 1), Group::cyclic(n)});
    case AlgebraTag::Kind::triangular:
      return Group::free(tag.n - 1);
    case AlgebraTag::Kind::truncated:
      return Group::direct_product({Group::free(1), Group::cyclic(n)});
  }
  throw Error(ErrorCode::unknown_tag, text);
}

std::vector<Homomorphism> reference_cone(const std::string& text, const GroupDiagram& d, const Group& ref) {
  AlgebraTag tag = parse_tag(text);
  std::vector<Images> images;
  switch (tag.kind) {
    case AlgebraTag::Kind::diagonal:
      if (tag.n == 2) {
        images = {{"t"}};
      } else if (tag.n == 3) {
        images = {{"t", "1"}, {"1", "t"}};
      } else {
        // generators a, b of C2 * C2, then C6, C4, C2
        images = {{"a", "b", "1", "1", "1"},
                  {"t", "1", "1", "1", "1"},
                  {"1", "1", "t", "1", "1"},
                  {"1", "1", "1", "t", "1"},
                  {"1", "1", "(t,1)", "1", "(1,t)"}};
      }
      break;
    case AlgebraTag::Kind::matrix: {
      Images fine, free, cyclic;
      for (std::size_t i = 1; i < tag.n; ++i) {
        fine.push_back("(t,1)");
        free.push_back(d.nodes[1].generator(i - 1).to_string());
        cyclic.push_back("t");
      }
      fine.push_back("(1,t)");
      free.push_back("1");
      cyclic.push_back("1");
      images = {fine, free, cyclic};
      break;
    }
    case AlgebraTag::Kind::triangular:
      return {Homomorphism::identity(d.nodes[0])};
    case AlgebraTag::Kind::truncated:
      images = {{"s", "1"}, {"1", "t"}};
      break;
  }
  if (images.size() != d.nodes.size())
    throw Error(ErrorCode::shape_mismatch, "cone for " + tag.text + " does not fit the diagram");
  std::vector<Homomorphism> cone;
  for (std::size_t i = 0; i < images.size(); ++i) cone.push_back(hom(ref, d.nodes[i], images[i]));
  return cone;
}

Pi1Result fundamental_group(const std::string& tag, const Field& field, std::size_t radius) {
  GradingDiagram gd = grading_diagram_for(tag, field);
  Pi1Result r;
  r.tag = gd.tag;
  r.field = field.to_string();
  r.diagram = gd.groups();
  r.limit = diagram_limit(r.diagram);
  r.reference = pi1_reference(tag);

  if (r.limit.exact()) {
    r.certification = Certification::exact;
    if (!r.reference.is_finite() || isomorphism_class(r.limit.group) != isomorphism_class(r.reference))
      throw Error(ErrorCode::certificate_failure, "limit " + r.limit.group.name() + " is not " + r.reference.name());
  } else {
    r.certification = Certification::bounded;
    r.certificate = certify_limit_iso(r.diagram, r.reference, reference_cone(tag, r.diagram, r.reference), radius);
    if (r.limit.group.kind() == GroupKind::direct_product &&
        finite_part_invariants(r.limit.group) != finite_part_invariants(r.reference))
      throw Error(ErrorCode::certificate_failure,
                  "finite parts of " + r.limit.group.name() + " and " + r.reference.name() + " differ");
  }

  r.projections_surjective = true;
  for (std::size_t i = 0; i < r.diagram.nodes.size(); ++i) {
    if (r.diagram.nodes[i].is_trivial()) continue;
    std::vector<GroupElement> images;
    for (const auto& g : r.limit.group.generators()) images.push_back(r.limit.projections[i](g));
    if (generates(r.diagram.nodes[i], images) != Tri::yes) r.projections_surjective = false;
  }
  return r;
}

Pi1Result fundamental_group(const std::string& tag, std::size_t radius) {
  return fundamental_group(tag, default_field(parse_tag(tag)), radius);
}

NoUniversalReport check_no_universal(const std::string& text) {
  AlgebraTag tag = parse_tag(text);
  Field field = default_field(tag);
  NoUniversalReport report;
  report.tag = tag.text;
  Grading a, b;

  auto schurian = [](const Grading& g) {
    SchurianCertificate c = certify_schurian_simply_connected(smash_product(g).realization);
    return SimplyConnectedWitness{g.name, g.group.name(), "schurian smash",
                                  std::to_string(c.objects) + " objects, one-dimensional homs, " +
                                      std::to_string(c.compositions) + " nonzero composites"};
  };
  auto rigid = [](const Grading& g, const RigidityCertificate& c) {
    return SimplyConnectedWitness{g.name, g.group.name(), "idempotent rigidity",
                                  c.scope + ", " + std::to_string(c.edges) + " edges, " +
                                      std::to_string(c.triangles) + " triangles"};
  };

  switch (tag.kind) {
    case AlgebraTag::Kind::matrix: {
      a = fine_matrix_grading(tag.n, field);
      b = free_good_grading(GoodKind::matrix, tag.n, field);
      report.first = schurian(a);
      std::size_t radius = tag.n <= 3 ? 3 : 2;
      report.second = rigid(b, certify_free_smash_rigidity(tag.n, radius));
      report.bounded = true;
      break;
    }
    case AlgebraTag::Kind::truncated: {
      a = truncated_group_grading(tag.n, field);
      b = truncated_Z_grading(tag.n, field);
      report.first = schurian(a);
      report.second = rigid(b, certify_smash_rigidity(smash_product(b, 2 * tag.n)));
      report.bounded = true;
      break;
    }
    case AlgebraTag::Kind::diagonal:
      if (tag.n != 4)
        throw Error(ErrorCode::invalid_argument, tag.text + " has square-free dimension and a universal covering");
      a = ergodic_diagonal_grading(Group::cyclic(4), field);
      b = ergodic_diagonal_grading(Group::finite_abelian({2, 2}), field);
      report.first = schurian(a);
      report.second = schurian(b);
      break;
    case AlgebraTag::Kind::triangular:
      throw Error(ErrorCode::invalid_argument, tag.text + " has a universal covering");
  }
  report.distinction = distinguish(a, b);
  if (!report.distinction.distinguished)
    throw Error(ErrorCode::check_failure, "could not tell " + a.name + " and " + b.name + " apart");
  report.conclusion = tag.text + " has two non-isomorphic simply connected gradings (" + report.first.group + " and " +
                      report.second.group + "), so it has no universal covering" +
                      (report.bounded ? " (one certificate is radius-limited)" : "");
  return report;
}

}  // namespace cgrad
