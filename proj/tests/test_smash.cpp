#include <gtest/gtest.h>

#include <functional>

#include "cgrad/catalog.hpp"
#include "cgrad/smash.hpp"

using namespace cgrad;

namespace {

// Hom dimensions of B#G counted straight from the degrees.
std::size_t expected_hom(const Grading& g, std::size_t b, const GroupElement& x, std::size_t c, const GroupElement& y) {
  std::size_t n = 0;
  for (std::size_t f = 0; f < g.category.dimension(); ++f) {
    const auto& m = g.category.basis(f);
    if (m.source == b && m.target == c && g.degrees[f] == y.inverse() * x) ++n;
  }
  return n;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(Smash, GroupAlgebraOfC2) {
  SmashCategory s = smash_product(group_algebra_grading(Group::cyclic(2), Field::rational()));
  ASSERT_EQ(s.objects.size(), 2u);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) EXPECT_EQ(s.realization.hom(x, y).size(), 1u);
  CoveringReport r = verify_covering(s);
  EXPECT_EQ(r.checked, 2u);
  EXPECT_EQ(r.scope, "full");
  for (const auto& row : r.stars) {
    EXPECT_EQ(row.out_dimension, 2u);
    EXPECT_EQ(row.in_dimension, 2u);
  }
  EXPECT_TRUE(is_connected_category(s));
  EXPECT_TRUE(verify_galois(s));
  EXPECT_EQ(certify_schurian_simply_connected(s.realization).objects, 2u);
}

TEST(Smash, TruncatedZGrading) {
  Grading z = truncated_Z_grading(3, Field::prime(3));
  EXPECT_EQ(code_of([&] { smash_product(z); }), ErrorCode::infinite_without_radius);
  SmashCategory s = smash_product(z, 5);
  ASSERT_EQ(s.objects.size(), 11u);
  EXPECT_EQ(s.label(0), "(0, 1)");
  Group zz = z.group;
  auto at = [&](long i) { return *s.find(0, zz.generator(0).pow(i)); };
  for (long i = -5; i <= 5; ++i)
    for (long j = -5; j <= 5; ++j)
      EXPECT_EQ(s.realization.hom(at(i), at(j)).size(), (i - j >= 0 && i - j < 3) ? 1u : 0u) << i << " " << j;
  CoveringReport r = verify_covering(s);
  EXPECT_EQ(r.checked, 7u);
  EXPECT_EQ(r.boundary.size(), 4u);
  EXPECT_EQ(r.scope, "interior-certified at radius 5");
  for (long i = -3; i <= 3; ++i) EXPECT_TRUE(s.interior[at(i)]);
  EXPECT_TRUE(is_connected_category(s));
  EXPECT_EQ(code_of([&] { certify_schurian_simply_connected(s.realization); }), ErrorCode::shape_mismatch);
  EXPECT_EQ(code_of([&] { verify_galois(s); }), ErrorCode::invalid_argument);
}

TEST(Smash, FineMatrixGrading) {
  for (std::size_t n = 2; n <= 4; ++n) {
    Field f = n == 2 ? Field::rational() : Field::cyclotomic(static_cast<int>(n));
    SmashCategory s = smash_product(fine_matrix_grading(n, f));
    ASSERT_EQ(s.objects.size(), n * n);
    EXPECT_EQ(certify_schurian_simply_connected(s.realization).compositions, n * n * n * n * n * n);
    EXPECT_EQ(verify_covering(s).checked, n * n);
    if (n <= 3) EXPECT_TRUE(verify_galois(s));
  }
}

TEST(Smash, HomDimensionsMatchDegreeCount) {
  for (const auto& e : catalog_entries()) {
    const Grading& g = e.grading;
    if (!g.group.is_finite() || g.group.order() > 16) continue;
    SmashCategory s = smash_product(g);
    ASSERT_EQ(s.objects.size(), g.category.object_count() * g.group.order()) << e.name;
    for (std::size_t x = 0; x < s.objects.size(); ++x)
      for (std::size_t y = 0; y < s.objects.size(); ++y)
        ASSERT_EQ(s.realization.hom(x, y).size(),
                  expected_hom(g, s.objects[x].base, s.objects[x].element, s.objects[y].base, s.objects[y].element))
            << e.name;
    // the fibre over each target reassembles the base hom
    for (std::size_t x = 0; x < s.objects.size(); ++x)
      for (std::size_t c = 0; c < g.category.object_count(); ++c) {
        std::size_t total = 0;
        for (std::size_t y = 0; y < s.objects.size(); ++y)
          if (s.objects[y].base == c) total += s.realization.hom(x, y).size();
        EXPECT_EQ(total, g.category.hom(s.objects[x].base, c).size());
      }
    EXPECT_EQ(verify_covering(s).checked, s.objects.size());
  }
}

TEST(Smash, GaloisAndConnectedness) {
  Field q = Field::rational();
  EXPECT_TRUE(verify_galois(smash_product(group_algebra_grading(Group::cyclic(3), q))));
  Grading idle = trivial_grading(make_diagonal(2, q), Group::cyclic(4));
  EXPECT_EQ(code_of([&] { verify_galois(smash_product(idle)); }), ErrorCode::not_connected);
  Grading point = trivial_grading(make_diagonal(1, q), Group::cyclic(2));
  EXPECT_FALSE(is_connected_category(smash_product(point)));
  EXPECT_FALSE(check_smash_connectedness_equivalence(point));
  EXPECT_TRUE(check_smash_connectedness_equivalence(fine_matrix_grading(2, q)));
  EXPECT_TRUE(check_smash_connectedness_equivalence(ergodic_diagonal_grading(Group::cyclic(4), Field::cyclotomic(4))));
}

TEST(Smash, ConnectednessEquivalenceOnCatalog) {
  for (const auto& e : catalog_entries())
    if (e.grading.group.is_finite()) EXPECT_TRUE(check_smash_connectedness_equivalence(e.grading)) << e.name;
  // quotients with small support
  Field q = Field::rational();
  Grading half = Grading::on_basis("half", make_group_algebra(Group::cyclic(2), q), Group::cyclic(4),
                                   std::vector<std::string>{"1", "t^2"});
  EXPECT_FALSE(check_smash_connectedness_equivalence(half));
}

TEST(Smash, StarsOnInfiniteTruncations) {
  for (const auto& e : catalog_entries()) {
    if (e.grading.group.is_finite()) continue;
    std::size_t longest = 0;
    for (const auto& d : support(e.grading)) longest = std::max(longest, e.grading.group.word_length(d));
    SmashCategory s = smash_product(e.grading, longest + 1);
    CoveringReport r = verify_covering(s);
    EXPECT_GT(r.checked, 0u) << e.name;
    EXPECT_EQ(r.checked + r.boundary.size(), s.objects.size());
  }
}

TEST(Smash, GroupAlgebrasAreSchurian) {
  Field q12 = Field::cyclotomic(12);
  for (const Group& g : {Group::cyclic(2), Group::cyclic(3), Group::cyclic(4), Group::finite_abelian({2, 2}),
                         Group::cyclic(5), Group::cyclic(6)}) {
    SmashCategory s = smash_product(group_algebra_grading(g, q12));
    EXPECT_EQ(certify_schurian_simply_connected(s.realization).objects, g.order());
  }
}

TEST(Rigidity, FreeSmashCertificates) {
  RigidityCertificate a = certify_free_smash_rigidity(2, 3);
  EXPECT_FALSE(a.vacuous);
  EXPECT_EQ(a.objects, 7u);
  EXPECT_EQ(a.interior_objects, 5u);
  EXPECT_EQ(a.idempotents, 10u);
  RigidityCertificate b = certify_free_smash_rigidity(3, 2);
  EXPECT_FALSE(b.vacuous);
  EXPECT_GT(b.triangles, 0u);
  RigidityCertificate c = certify_free_smash_rigidity(2, 1);
  EXPECT_TRUE(c.vacuous);
  EXPECT_EQ(c.interior_objects, 1u);
  EXPECT_TRUE(certify_free_smash_rigidity(3, 3).triangles > b.triangles);
}

TEST(Rigidity, TruncatedZSmash) {
  for (std::size_t p : {2u, 3u, 5u}) {
    Grading z = truncated_Z_grading(p, Field::prime(static_cast<int>(p)));
    RigidityCertificate c = certify_smash_rigidity(smash_product(z, 2 * p));
    EXPECT_FALSE(c.vacuous);
    EXPECT_EQ(c.components, 1u);
    EXPECT_EQ(c.interior_objects, 4 * p - 1);
    if (p > 2) EXPECT_GT(c.triangles, 0u);
  }
}

TEST(Rigidity, RejectsTwoDimensionalHoms) {
  SmashCategory s = smash_product(cyclic_good_grading(2, Field::rational()));
  EXPECT_EQ(code_of([&] { certify_smash_rigidity(s); }), ErrorCode::check_failure);
}

// Closed walks of nonzero composites at the first idempotent of the base
// object come back as multiples of that idempotent, so their degree is 1.
TEST(Rigidity, ClosedWalksComposeToTheIdempotent) {
  for (auto [n, radius] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 2}}) {
    SmashCategory s = smash_product(free_good_grading(GoodKind::matrix, n, Field::rational()), radius);
    const LinearCategory& r = s.realization;
    std::size_t start = *s.find(0, s.base.group.identity());
    std::size_t e = r.index("E11@1");
    std::size_t closed = 0;
    std::function<void(std::size_t, const Coeffs&, std::size_t)> walk = [&](std::size_t at, const Coeffs& c,
                                                                              std::size_t left) {
      if (at == start && c.size() == 1 && c[0].first != e) ADD_FAILURE() << "walk lands on " << r.basis(c[0].first).name;
      if (at == start && left < 6) {
        EXPECT_EQ(c.size(), 1u);
        EXPECT_EQ(c[0].first, e);
        ++closed;
      }
      if (left == 0) return;
      for (std::size_t m : r.out_of(at)) {
        std::size_t to = r.basis(m).target;
        if (to == at || s.base.group.word_length(s.objects[to].element) >= radius) continue;
        Coeffs next = compose_coeffs(r, {{m, Scalar::one(r.field())}}, c);
        if (!next.empty()) walk(to, next, left - 1);
      }
    };
    walk(start, {{e, Scalar::one(r.field())}}, 6);
    EXPECT_GT(closed, 1u);
  }
}
