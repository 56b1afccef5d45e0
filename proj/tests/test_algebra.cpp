#include <gtest/gtest.h>

#include <array>
#include <random>

#include "cgrad/algebra.hpp"

using namespace cgrad;

namespace {

using Mat2 = std::array<std::array<long, 2>, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

AlgebraElement el(const LinearCategory& c, const std::string& name) { return AlgebraElement::basis(c, name); }

// Category with n objects, one basis morphism per ordered pair, and
// composition constants a(z,y) a(y,x) / a(z,x) from random nonzero a.
LinearCategory twisted_complete_category(std::size_t n, std::mt19937& rng) {
  Field q = Field::rational();
  std::uniform_int_distribution<int> pick(1, 5);
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
  for (auto& row : a)
    for (auto& s : row) s = Scalar::from_int(q, pick(rng) * (pick(rng) % 2 ? 1 : -1));
  LinearCategory::Builder b(q, n);
  std::vector<std::vector<std::size_t>> idx(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) idx[y][x] = b.add("f" + std::to_string(y) + std::to_string(x), x, y);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) b.set_compose(idx[z][y], idx[y][x], {{idx[z][x], a[z][y] * a[y][x] / a[z][x]}});
  for (std::size_t x = 0; x < n; ++x) b.set_identity(x, {{idx[x][x], a[x][x].inverse()}});
  return b.build();
}

}  // namespace

TEST(MatrixAlgebra, UnitProducts) {
  Field q = Field::rational();
  LinearCategory m2 = make_matrix_algebra(2, q);
  EXPECT_EQ(el(m2, "E21") * el(m2, "E12"), el(m2, "E22"));
  EXPECT_TRUE((el(m2, "E21") * el(m2, "E21")).is_zero());
  EXPECT_EQ(m2.dimension(), 4u);
  EXPECT_EQ(AlgebraElement::unit(make_matrix_algebra(3, q)).coeffs().size(), 3u);
  EXPECT_EQ(make_matrix_algebra(12, q).basis(13).name, "E2,2");
}

TEST(MatrixXY, RelationsAndSquare) {
  Field q = Field::rational();
  LinearCategory a = make_matrix_xy(2, q);
  AlgebraElement x = el(a, "x"), y = el(a, "y");
  EXPECT_EQ(y * x, -(x * y));

  // oracle: explicit matrices x = [[0,1],[1,0]], y = diag(q, q^2) with q = -1
  Mat2 xm{{{0, 1}, {1, 0}}}, ym{{{-1, 0}, {0, 1}}};
  Mat2 xy = mul(xm, ym);
  Mat2 sq = mul(xy, xy);
  ASSERT_EQ(sq[0][1], 0);
  ASSERT_EQ(sq[1][0], 0);
  ASSERT_EQ(sq[0][0], sq[1][1]);
  EXPECT_EQ((x * y) * (x * y), AlgebraElement::unit(a) * Scalar::from_int(q, sq[0][0]));

  Field q3 = Field::cyclotomic(3);
  LinearCategory b = make_matrix_xy(3, q3);
  EXPECT_EQ(el(b, "x").pow(3), AlgebraElement::unit(b));
  EXPECT_EQ(el(b, "y").pow(3), AlgebraElement::unit(b));
  EXPECT_THROW(make_matrix_xy(3, q), Error);
}

TEST(MatrixXY, IsomorphicToMatrixUnits) {
  for (std::size_t n : {2u, 3u, 4u}) {
    Field f = n == 2 ? Field::rational() : Field::cyclotomic(static_cast<int>(n));
    AlgebraMorphism phi(make_matrix_xy(n, f), make_matrix_algebra(n, f), matrix_xy_images(n, f));
    EXPECT_TRUE(phi.is_injective()) << n;
  }
}

TEST(SmallAlgebras, Products) {
  Field q = Field::rational();
  LinearCategory k3 = make_diagonal(3, q);
  EXPECT_TRUE((el(k3, "d1") * el(k3, "d2")).is_zero());
  EXPECT_EQ(el(k3, "d1") * el(k3, "d1"), el(k3, "d1"));

  LinearCategory kc2 = make_group_algebra(Group::cyclic(2), q);
  EXPECT_EQ(el(kc2, "t") * el(kc2, "t"), el(kc2, "1"));

  LinearCategory trunc = make_truncated_poly(3, q);
  EXPECT_TRUE((el(trunc, "x^2") * el(trunc, "x")).is_zero());

  LinearCategory t3 = make_triangular(3, q);
  EXPECT_EQ(t3.dimension(), 6u);
  EXPECT_EQ(el(t3, "E32") * el(t3, "E21"), el(t3, "E31"));
  EXPECT_FALSE(t3.find("E12").has_value());
}

TEST(SmallAlgebras, ProductAlgebra) {
  Field q = Field::rational();
  LinearCategory k5 = product_algebra(make_diagonal(2, q), make_diagonal(3, q));
  EXPECT_EQ(k5.dimension(), 5u);
  LinearCategory mixed = product_algebra(make_truncated_poly(2, q), make_group_algebra(Group::cyclic(2), q));
  EXPECT_EQ(mixed.dimension(), 4u);
  EXPECT_EQ(AlgebraElement::unit(mixed).coeffs().size(), 2u);
  EXPECT_TRUE((el(mixed, "(x,0)") * el(mixed, "(0,t)")).is_zero());
}

TEST(Builder, RejectsNonAssociativeConstants) {
  Field q = Field::rational();
  LinearCategory::Builder b(q, 1);
  b.add("1", 0, 0);
  b.add("x", 0, 0);
  b.set_compose(0, 0, {{0, Scalar::one(q)}});
  b.set_compose(0, 1, {{1, Scalar::one(q)}});
  b.set_compose(1, 0, {{1, Scalar::one(q)}});
  b.set_compose(1, 1, {{0, Scalar::one(q)}, {1, Scalar::one(q)}});
  b.set_identity(0, {{0, Scalar::one(q)}});
  EXPECT_NO_THROW(b.build());

  LinearCategory::Builder bad(q, 1);
  bad.add("1", 0, 0);
  bad.add("x", 0, 0);
  bad.set_compose(0, 0, {{0, Scalar::one(q)}});
  bad.set_compose(0, 1, {{1, Scalar::from_int(q, 2)}});
  bad.set_compose(1, 0, {{1, Scalar::one(q)}});
  bad.set_identity(0, {{0, Scalar::one(q)}});
  try {
    bad.build();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_associative);
  }
}

TEST(Quiver, MatrixPresentation) {
  Field q = Field::rational();
  QuiverPresentation p2 = quiver_presentation_matrix(2, q);
  EXPECT_EQ(p2.evaluate("y1*x1"), el(p2.matrices, "E11"));
  EXPECT_TRUE(p2.evaluate("x1*x1").is_zero());
  QuiverPresentation p3 = quiver_presentation_matrix(3, q);
  EXPECT_EQ(p3.evaluate("x2*x1"), el(p3.matrices, "E31"));
  for (const auto& [name, value] : p3.relations()) EXPECT_TRUE(value.is_zero()) << name;
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_EQ(quiver_presentation_matrix(n, q).image_rank(), n * n);
  EXPECT_THROW(p2.evaluate("x3"), Error);
}

TEST(Truncated, Valuation) {
  Field f = Field::prime(5);
  LinearCategory a = make_truncated_poly(5, f);
  AlgebraElement one = AlgebraElement::unit(a), x = el(a, "x"), x2 = el(a, "x^2");
  EXPECT_EQ(valuation(x + x2), 1u);
  EXPECT_EQ(valuation(one + x), 0u);
  EXPECT_EQ(valuation(x * x2), valuation(x) + valuation(x2));
  try {
    valuation(AlgebraElement(a));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_element);
  }
}

TEST(Truncated, ValuationIsAdditiveOnRandomPairs) {
  std::mt19937 rng(11);
  Field f = Field::prime(7);
  LinearCategory a = make_truncated_poly(7, f);
  std::uniform_int_distribution<int> coef(0, 6), start(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    auto random_element = [&] {
      AlgebraElement e(a);
      int s = start(rng);
      e = e + el(a, a.basis(static_cast<std::size_t>(s)).name);
      for (int i = s + 1; i < 7; ++i) e = e + el(a, a.basis(static_cast<std::size_t>(i)).name) * Scalar::from_int(f, coef(rng));
      return e;
    };
    AlgebraElement u = random_element(), v = random_element();
    AlgebraElement uv = u * v;
    if (uv.is_zero()) {
      EXPECT_GE(valuation(u) + valuation(v), 7u);
      continue;
    }
    EXPECT_EQ(valuation(uv), valuation(u) + valuation(v));
    EXPECT_EQ(is_invertible(u), valuation(u) == 0);
  }
}

TEST(Invertibility, Examples) {
  Field f = Field::prime(3);
  LinearCategory a = make_truncated_poly(3, f);
  EXPECT_TRUE(is_invertible(AlgebraElement::unit(a) + el(a, "x")));
  EXPECT_FALSE(is_invertible(el(a, "x")));
  LinearCategory m2 = make_matrix_algebra(2, Field::rational());
  EXPECT_FALSE(is_invertible(el(m2, "E11")));
  EXPECT_TRUE(is_invertible(el(m2, "E12") + el(m2, "E21")));
}

TEST(TotalAlgebra, DimensionsAndIdentity) {
  std::mt19937 rng(3);
  LinearCategory c = twisted_complete_category(3, rng);
  LinearCategory t = total_algebra(c);
  EXPECT_EQ(t.dimension(), 9u);
  EXPECT_EQ(t.object_count(), 1u);
  LinearCategory m2 = make_matrix_algebra(2, Field::rational());
  EXPECT_EQ(total_algebra(m2), m2);
}

TEST(TotalAlgebra, TwistedCategoriesMatchMatrices) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    LinearCategory t = total_algebra(twisted_complete_category(n, rng));
    AlgebraMorphism phi = match_matrix_structure(t, n);
    EXPECT_TRUE(phi.is_injective());
    EXPECT_EQ(phi.target().dimension(), n * n);
  }
  try {
    match_matrix_structure(make_diagonal(2, Field::rational()), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::shape_mismatch);
  }
}

TEST(Characters, IdempotentsForC2) {
  Field q = Field::rational();
  Group c2 = Group::cyclic(2);
  auto e = character_idempotents(c2, q);
  ASSERT_EQ(e.size(), 2u);
  // expand (1 + t)/2 and (1 - t)/2 by hand
  Scalar half = Scalar::from_rational(q, mpq_class(1, 2));
  EXPECT_EQ(e[0], (Coeffs{{0, half}, {1, half}}));
  EXPECT_EQ(e[1], (Coeffs{{0, half}, {1, -half}}));
  AlgebraMorphism phi = group_algebra_to_diagonal(c2, q);
  LinearCategory kg = phi.source();
  EXPECT_EQ(phi.apply(AlgebraElement::from_coeffs(kg, e[0])), el(phi.target(), "d1"));
  EXPECT_EQ(phi.apply(AlgebraElement::from_coeffs(kg, e[1])), el(phi.target(), "d2"));
  EXPECT_EQ(phi.apply(el(kg, "t")), el(phi.target(), "d1") - el(phi.target(), "d2"));
}

TEST(Characters, OrthogonalForSeveralGroups) {
  Field q12 = Field::cyclotomic(12);
  for (auto g : {Group::cyclic(3), Group::cyclic(4), Group::finite_abelian({2, 2}), Group::cyclic(6),
                 Group::finite_abelian({2, 6})}) {
    auto e = character_idempotents(g, q12);
    EXPECT_EQ(e.size(), g.order());
    EXPECT_TRUE(group_algebra_to_diagonal(g, q12).is_injective());
  }
  try {
    group_algebra_to_diagonal(Group::cyclic(2), Field::prime(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::bad_characteristic);
  }
  try {
    group_algebra_to_diagonal(Group::cyclic(3), Field::rational());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_such_root);
  }
}

TEST(Elements, Formatting) {
  Field q = Field::rational();
  LinearCategory m2 = make_matrix_algebra(2, q);
  EXPECT_EQ((el(m2, "E11") - el(m2, "E22")).to_string(), "E11 + -1*E22");
  EXPECT_EQ(AlgebraElement(m2).to_string(), "0");
  Field q3 = Field::cyclotomic(3);
  LinearCategory a = make_matrix_xy(3, q3);
  EXPECT_EQ((el(a, "y") * el(a, "x")).to_string(), "z*x*y");
}
