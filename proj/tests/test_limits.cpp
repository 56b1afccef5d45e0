#include <gtest/gtest.h>

#include <random>

#include "cgrad/limits.hpp"

using namespace cgrad;

namespace {

Homomorphism hom(const Group& s, const Group& t, std::vector<std::string> images) {
  return Homomorphism::from_images(s, t, images);
}

// nodes: fine C_p x C_p, free F_{p-1}, good C_p
GroupDiagram matrix_diagram(long p) {
  Group fine = Group::finite_abelian({p, p});
  Group free = Group::free(static_cast<std::size_t>(p - 1));
  Group cp = Group::cyclic(p);
  std::vector<std::string> to_cp(static_cast<std::size_t>(p - 1), "t");
  GroupDiagram d;
  d.nodes = {fine, free, cp};
  d.arrows = {{0, 2, hom(fine, cp, {"t", "1"})}, {1, 2, hom(free, cp, to_cp)}};
  return d;
}

std::vector<Homomorphism> matrix_cone(const GroupDiagram& d, const Group& candidate, long p) {
  std::vector<std::string> fine, free, cp;
  for (long i = 1; i < p; ++i) {
    fine.push_back("(t,1)");
    free.push_back("s" + (p == 2 ? std::string() : std::to_string(i)));
    cp.push_back("t");
  }
  fine.push_back("(1,t)");
  free.push_back("1");
  cp.push_back("1");
  return {hom(candidate, d.nodes[0], fine), hom(candidate, d.nodes[1], free), hom(candidate, d.nodes[2], cp)};
}

// Independent oracle: filter the full cartesian product of node elements.
std::size_t brute_force_limit_order(const GroupDiagram& d) {
  std::vector<std::vector<GroupElement>> pools;
  for (const auto& g : d.nodes) pools.push_back(g.elements());
  std::size_t total = 1;
  for (const auto& p : pools) total *= p.size();
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<GroupElement> t;
    std::size_t c = code;
    for (const auto& p : pools) {
      t.push_back(p[c % p.size()]);
      c /= p.size();
    }
    bool ok = true;
    for (const auto& a : d.arrows)
      if (a.map(t[a.source]) != t[a.target]) ok = false;
    count += ok;
  }
  return count;
}

std::vector<Group> small_groups() {
  return {Group::trivial(),
          Group::cyclic(2),
          Group::cyclic(3),
          Group::cyclic(4),
          Group::finite_abelian({2, 2}),
          Group::cyclic(6),
          Group::from_permutations({{1, 0, 2}, {1, 2, 0}}),
          Group::finite_abelian({2, 4}),
          Group::from_permutations({{1, 2, 3, 0}, {3, 2, 1, 0}}),
          Group::finite_abelian({2, 2, 2})};
}

}  // namespace

TEST(DiagramLimit, FibreProductForTwoByTwoMatrices) {
  GroupDiagram d = matrix_diagram(2);
  LimitResult r = diagram_limit(d);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].method, LimitMethod::fibre_product);
  EXPECT_FALSE(r.exact());

  Group candidate = Group::direct_product({Group::free(1), Group::cyclic(2)});
  auto cert = certify_limit_iso(d, candidate, matrix_cone(d, candidate, 2), 8);
  EXPECT_EQ(cert.radius, 8u);
  EXPECT_EQ(cert.candidate_elements, cert.compatible_tuples);
  EXPECT_EQ(cert.compatible_tuples, 17u * 2u);

  // projections commute with the arrows on every element of the ball
  for (const auto& x : r.group.ball(4))
    for (const auto& a : d.arrows) EXPECT_EQ(a.map(r.projections[a.source](x)), r.projections[a.target](x));
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    std::vector<GroupElement> images;
    for (const auto& g : r.group.generators()) images.push_back(r.projections[i](g));
    EXPECT_EQ(generates(d.nodes[i], images), Tri::yes) << i;
  }
}

TEST(DiagramLimit, FibreProductForThreeByThreeMatrices) {
  GroupDiagram d = matrix_diagram(3);
  Group candidate = Group::direct_product({Group::free(2), Group::cyclic(3)});
  auto cert = certify_limit_iso(d, candidate, matrix_cone(d, candidate, 3), 6);
  EXPECT_GT(cert.compatible_tuples, 1000u);
}

TEST(DiagramLimit, WrongCandidateFails) {
  GroupDiagram d = matrix_diagram(2);
  Group c4 = Group::cyclic(4);
  std::vector<Homomorphism> cone{hom(c4, d.nodes[0], {"(1,t)"}), hom(c4, d.nodes[1], {"1"}),
                                 hom(c4, d.nodes[2], {"1"})};
  try {
    certify_limit_iso(d, c4, cone, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::certificate_failure);
  }
  EXPECT_THROW(hom(c4, d.nodes[1], {"s"}), Error);  // Z has no element of order dividing 4 except 1
  Group z = Group::free(1);
  std::vector<Homomorphism> noncommuting{hom(z, d.nodes[0], {"(t,1)"}), hom(z, d.nodes[1], {"s"}),
                                         hom(z, d.nodes[2], {"1"})};
  try {
    certify_limit_iso(d, z, noncommuting, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cone_does_not_commute);
  }
}

TEST(DiagramLimit, InitialNode) {
  Group f3 = Group::free(3);
  GroupDiagram d;
  d.nodes = {f3, Group::cyclic(2), Group::cyclic(3), Group::finite_abelian({2, 2})};
  d.arrows = {{0, 1, hom(f3, d.nodes[1], {"t", "t", "1"})},
              {0, 2, hom(f3, d.nodes[2], {"t", "1", "t"})},
              {0, 3, hom(f3, d.nodes[3], {"(t,1)", "(1,t)", "1"})}};
  LimitResult r = diagram_limit(d);
  EXPECT_EQ(r.group, f3);
  EXPECT_EQ(r.components[0].method, LimitMethod::initial_node);

  // an extra arrow that does not commute with the others
  d.arrows.push_back({3, 1, hom(d.nodes[3], d.nodes[1], {"1", "t"})});
  EXPECT_THROW(diagram_limit(d), Error);
}

TEST(DiagramLimit, DisjointFiniteNodes) {
  GroupDiagram d;
  d.nodes = {Group::cyclic(4), Group::finite_abelian({2, 2}), Group::cyclic(3)};
  LimitResult r = diagram_limit(d);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.group.order(), 48u);
  EXPECT_TRUE(is_abelian(r.group));
  EXPECT_EQ(brute_force_limit_order(d), 48u);
}

TEST(DiagramLimit, TrivialNodesArePruned) {
  GroupDiagram d;
  d.nodes = {Group::cyclic(2), Group::trivial(), Group::cyclic(3)};
  d.arrows = {{0, 1, Homomorphism::trivial(d.nodes[0], d.nodes[1])},
              {2, 1, Homomorphism::trivial(d.nodes[2], d.nodes[1])}};
  LimitResult r = diagram_limit(d);
  EXPECT_EQ(r.pruned, (std::vector<std::size_t>{1}));
  EXPECT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.group.name(), "C2 x C3");
  EXPECT_EQ(diagram_limit(d, false).group.order(), 6u);
}

TEST(DiagramLimit, UnsupportedShape) {
  Group z = Group::free(1), c2 = Group::cyclic(2);
  GroupDiagram d;
  d.nodes = {z, z, c2, c2};
  d.arrows = {{0, 2, hom(z, c2, {"t"})}, {1, 2, hom(z, c2, {"t"})}, {1, 3, hom(z, c2, {"t"})}};
  try {
    diagram_limit(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported_shape);
  }
}

TEST(DiagramLimit, NonSurjectiveArrowRejected) {
  Group c2 = Group::cyclic(2), c4 = Group::cyclic(4);
  GroupDiagram d;
  d.nodes = {c2, c4};
  d.arrows = {{0, 1, hom(c2, c4, {"t^2"})}};
  EXPECT_THROW(d.validate(), Error);
}

TEST(DiagramLimit, RandomFiniteDiagramsMatchBruteForce) {
  std::mt19937 rng(424242);
  const auto groups = small_groups();
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1), nodes(1, 4);
  int built = 0;
  for (int trial = 0; built < 40 && trial < 2000; ++trial) {
    GroupDiagram d;
    for (std::size_t n = nodes(rng); n > 0; --n) d.nodes.push_back(groups[pick(rng)]);
    std::uniform_int_distribution<std::size_t> node(0, d.nodes.size() - 1);
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::size_t s = node(rng), t = node(rng);
      if (s == t) continue;
      const Group& src = d.nodes[s];
      const Group& tgt = d.nodes[t];
      auto elems = tgt.elements();
      std::uniform_int_distribution<std::size_t> el(0, elems.size() - 1);
      std::vector<GroupElement> images;
      for (std::size_t k = 0; k < src.generators().size(); ++k) images.push_back(elems[el(rng)]);
      try {
        auto h = Homomorphism::from_images(src, tgt, images);
        if (is_surjective(h) == Tri::yes) d.arrows.push_back({s, t, h});
      } catch (const Error&) {
      }
    }
    LimitResult r = diagram_limit(d);
    ASSERT_EQ(r.group.order(), brute_force_limit_order(d)) << trial;
    ++built;
  }
  EXPECT_EQ(built, 40);
}
