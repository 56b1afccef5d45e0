#include <gtest/gtest.h>

#include "cgrad/pi1.hpp"

using namespace cgrad;

namespace {

// Order of the limit of an all-finite diagram by filtering all tuples.
std::size_t brute_force_order(const GroupDiagram& d) {
  std::vector<std::vector<GroupElement>> pools;
  std::size_t total = 1;
  for (const auto& g : d.nodes) {
    pools.push_back(g.elements());
    total *= pools.back().size();
  }
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<GroupElement> t;
    std::size_t c = code;
    for (const auto& p : pools) {
      t.push_back(p[c % p.size()]);
      c /= p.size();
    }
    bool ok = true;
    for (const auto& a : d.arrows) ok = ok && a.map(t[a.source]) == t[a.target];
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Pi1, DiagonalAlgebrasOfSmallDimension) {
  Pi1Result two = fundamental_group("k2");
  EXPECT_EQ(two.certification, Certification::exact);
  EXPECT_EQ(two.limit.group.order(), 2u);
  EXPECT_EQ(isomorphism_class(two.limit.group), isomorphism_class(Group::cyclic(2)));

  Pi1Result three = fundamental_group("k3");
  EXPECT_EQ(three.certification, Certification::exact);
  EXPECT_EQ(three.limit.group.order(), 6u);
  EXPECT_EQ(three.reference.name(), "C2 x C3");
  EXPECT_TRUE(three.projections_surjective);
}

TEST(Pi1, DiagonalAlgebraOfDimensionFour) {
  Pi1Result r = fundamental_group("k4", 8);
  EXPECT_EQ(r.certification, Certification::bounded);
  ASSERT_TRUE(r.certificate.has_value());
  // (1 + 2 * 8) syllable words in C2 * C2 times 6 * 4 * 2
  EXPECT_EQ(r.certificate->candidate_elements, 17u * 48u);
  EXPECT_EQ(r.certificate->compatible_tuples, 17u * 48u);
  EXPECT_TRUE(r.projections_surjective);
  EXPECT_EQ(finite_part_invariants(r.limit.group), (std::vector<long>{2, 2, 12}));
  EXPECT_EQ(finite_part_invariants(r.reference), (std::vector<long>{2, 2, 12}));
}

TEST(Pi1, MatrixAlgebras) {
  Pi1Result m2 = fundamental_group("M2", Field::rational(), 8);
  EXPECT_EQ(m2.certification, Certification::bounded);
  EXPECT_EQ(m2.certificate->compatible_tuples, 17u * 2u);
  EXPECT_EQ(m2.limit.components[0].method, LimitMethod::fibre_product);
  EXPECT_TRUE(m2.projections_surjective);

  Pi1Result m3 = fundamental_group("M3", Field::cyclotomic(3), 4);
  // reduced words of length <= 4 in F2, times C3
  EXPECT_EQ(m3.certificate->compatible_tuples, (1u + 4u + 12u + 36u + 108u) * 3u);
}

TEST(Pi1, TriangularAlgebras) {
  for (std::size_t n = 2; n <= 4; ++n) {
    Pi1Result r = fundamental_group("Tn:" + std::to_string(n), 3);
    EXPECT_EQ(r.limit.group, Group::free(n - 1));
    EXPECT_EQ(r.limit.components[0].method, LimitMethod::initial_node);
    EXPECT_EQ(r.certification, Certification::bounded);
  }
}

TEST(Pi1, TruncatedPolynomials) {
  for (std::size_t p : {2u, 3u, 5u}) {
    std::string tag = "trunc:" + std::to_string(p);
    Pi1Result r = fundamental_group(tag, 6);
    EXPECT_EQ(r.reference.name(), "Z x C" + std::to_string(p));
    EXPECT_EQ(r.certificate->compatible_tuples, 13u * p);
    GradingDiagram d = grading_diagram_for(tag);
    auto report = distinguish(d.nodes[0], d.nodes[1]);
    EXPECT_EQ(report.invariant, "invertible homogeneous element of nontrivial degree");
  }
}

TEST(Pi1, ReferenceConesCommute) {
  for (const std::string tag : {"k2", "k3", "k4", "M2", "M3", "Mp:5", "Tn:3", "trunc:3"}) {
    GroupDiagram d = grading_diagram_for(tag).groups();
    Group ref = pi1_reference(tag);
    auto cone = reference_cone(tag, d, ref);
    for (const auto& x : ref.ball(2))
      for (const auto& a : d.arrows) EXPECT_EQ(a.map(cone[a.source](x)), cone[a.target](x)) << tag;
  }
  EXPECT_THROW(pi1_reference("k9"), Error);
}

TEST(Pi1, PruningKeepsFiniteLimits) {
  for (const std::string tag : {"k3", "k4"}) {
    GroupDiagram full = grading_diagram_for(tag).groups();
    GroupDiagram d;
    for (const auto& n : full.nodes)
      if (n.is_finite()) d.nodes.push_back(n);
    // hang a trivial node below every node
    std::size_t one = d.nodes.size();
    d.nodes.push_back(Group::trivial());
    for (std::size_t i = 0; i < one; ++i) d.arrows.push_back({i, one, Homomorphism::trivial(d.nodes[i], d.nodes[one])});
    std::size_t expected = brute_force_order(d);
    EXPECT_EQ(diagram_limit(d, true).group.order(), expected) << tag;
    EXPECT_EQ(diagram_limit(d, false).group.order(), expected) << tag;
  }
}

TEST(NoUniversal, MatrixAlgebra) {
  NoUniversalReport r = check_no_universal("M2");
  EXPECT_EQ(r.first.mechanism, "schurian smash");
  EXPECT_EQ(r.second.mechanism, "idempotent rigidity");
  EXPECT_EQ(r.distinction.invariant, "trivial component dimension");
  EXPECT_EQ(r.distinction.first, "1");
  EXPECT_EQ(r.distinction.second, "2");
  EXPECT_TRUE(r.bounded);
}

TEST(NoUniversal, TruncatedAndDiagonal) {
  NoUniversalReport t = check_no_universal("trunc:3");
  EXPECT_EQ(t.distinction.invariant, "invertible homogeneous element of nontrivial degree");
  EXPECT_EQ(t.first.group, "C3");
  EXPECT_EQ(t.second.group, "Z");

  NoUniversalReport k = check_no_universal("k4");
  EXPECT_EQ(k.distinction.invariant, "group isomorphism class");
  EXPECT_FALSE(k.bounded);
  EXPECT_THROW(check_no_universal("k3"), Error);
  EXPECT_THROW(check_no_universal("T3"), Error);
}
