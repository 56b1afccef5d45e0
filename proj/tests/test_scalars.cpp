#include <gtest/gtest.h>

#include <random>

#include "cgrad/linalg.hpp"
#include "cgrad/scalars.hpp"

using namespace cgrad;

namespace {

// Exact polynomial division over Z (divisor monic), used as an independent
// route to the cyclotomic polynomials: Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    long c = num[i + den.size() - 1];
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (long r : num) EXPECT_EQ(r, 0);
  return q;
}

std::vector<long> phi_oracle(int m) {
  std::vector<long> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(p, phi_oracle(d));
  return p;
}

std::vector<long> as_longs(const IntPoly& p) {
  std::vector<long> out;
  for (const auto& c : p) out.push_back(c.get_si());
  return out;
}

Scalar random_scalar(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  if (f.kind() == Field::Kind::prime) return Scalar::from_int(f, num(rng));
  Scalar s = Scalar::zero(f);
  Scalar z = f.kind() == Field::Kind::cyclotomic ? Scalar::zeta(f) : Scalar::one(f);
  Scalar zk = Scalar::one(f);
  for (int k = 0; k < f.degree(); ++k) {
    s += zk * Scalar::from_rational(f, mpq_class(num(rng), den(rng)));
    zk *= z;
  }
  return s;
}

}  // namespace

TEST(Cyclotomic, LowDegreeValues) {
  EXPECT_EQ(as_longs(cyclotomic_polynomial(1)), (std::vector<long>{-1, 1}));
  EXPECT_EQ(as_longs(cyclotomic_polynomial(4)), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(as_longs(cyclotomic_polynomial(3)), (std::vector<long>{1, 1, 1}));
}

TEST(Cyclotomic, MatchesDivisionOracle) {
  for (int m = 1; m <= 30; ++m) {
    SCOPED_TRACE(m);
    EXPECT_EQ(as_longs(cyclotomic_polynomial(m)), phi_oracle(m));
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(m).size()) - 1, euler_phi(m));
  }
}

TEST(Cyclotomic, ZetaIsARootOfItsPolynomial) {
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12, 15}) {
    Field f = Field::cyclotomic(m);
    Scalar z = primitive_root(f, m);
    Scalar acc = Scalar::zero(f);
    Scalar zk = Scalar::one(f);
    for (const auto& c : cyclotomic_polynomial(m)) {
      acc += zk * Scalar::from_rational(f, mpq_class(c));
      zk *= z;
    }
    EXPECT_TRUE(acc.is_zero()) << m;
  }
}

TEST(Arithmetic, Examples) {
  Field q4 = Field::cyclotomic(4);
  Scalar z = Scalar::zeta(q4);
  EXPECT_EQ(z * z, Scalar::from_int(q4, -1));

  Field f5 = Field::prime(5);
  EXPECT_EQ(Scalar::from_int(f5, 3).inverse(), Scalar::from_int(f5, 2));

  Field q3 = Field::cyclotomic(3);
  Scalar w = Scalar::zeta(q3);
  EXPECT_EQ(w + w * w, Scalar::from_int(q3, -1));
}

TEST(Arithmetic, Errors) {
  Field q = Field::rational();
  Field f5 = Field::prime(5);
  try {
    (void)(Scalar::one(q) + Scalar::one(f5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::field_mismatch);
  }
  try {
    (void)Scalar::zero(f5).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::division_by_zero);
  }
  Field q5 = Field::cyclotomic(5);
  EXPECT_THROW((void)Scalar::zero(q5).inverse(), Error);
}

TEST(Arithmetic, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(20240613);
  for (const Field& f : {Field::rational(), Field::cyclotomic(3), Field::cyclotomic(5), Field::cyclotomic(12),
                         Field::prime(2), Field::prime(7)}) {
    for (int trial = 0; trial < 60; ++trial) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      ASSERT_EQ((a + b) + c, a + (b + c)) << f.to_string();
      ASSERT_EQ((a * b) * c, a * (b * c)) << f.to_string();
      ASSERT_EQ(a * (b + c), a * b + a * c) << f.to_string();
      ASSERT_EQ(a * b, b * a);
      ASSERT_TRUE((a - a).is_zero());
      if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one()) << f.to_string() << " " << a.to_string();
    }
  }
}

TEST(Arithmetic, TextRoundTrip) {
  std::mt19937 rng(7);
  for (const Field& f : {Field::rational(), Field::cyclotomic(12), Field::prime(5)}) {
    for (int trial = 0; trial < 30; ++trial) {
      Scalar a = random_scalar(f, rng);
      EXPECT_EQ(Scalar::parse(f, a.to_string()), a) << a.to_string();
    }
  }
  Field q12 = Field::cyclotomic(12);
  EXPECT_EQ(Scalar::parse(q12, "1/2*z^2 + 1").to_string(), "1/2*z^2 + 1");
}

TEST(Fields, Parse) {
  EXPECT_EQ(Field::parse("Q"), Field::rational());
  EXPECT_EQ(Field::parse("Q(z12)"), Field::cyclotomic(12));
  EXPECT_EQ(Field::parse("cyclotomic:12"), Field::cyclotomic(12));
  EXPECT_EQ(Field::parse("F5"), Field::prime(5));
  EXPECT_EQ(Field::parse("prime:5"), Field::prime(5));
  EXPECT_THROW(Field::parse("F6"), Error);
  EXPECT_THROW(Field::parse("R"), Error);
}

TEST(PrimitiveRoot, Examples) {
  Field q6 = Field::cyclotomic(6);
  EXPECT_EQ(primitive_root(q6, 3), Scalar::zeta(q6).pow(2));

  // brute-force the least residue of order exactly 4 in F_5
  Field f5 = Field::prime(5);
  int least = 0;
  for (int a = 1; a < 5 && !least; ++a) {
    int k = 1, x = a;
    while (x != 1) {
      x = x * a % 5;
      ++k;
    }
    if (k == 4) least = a;
  }
  EXPECT_EQ(primitive_root(f5, 4), Scalar::from_int(f5, least));

  try {
    primitive_root(Field::prime(3), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_such_root);
  }
  EXPECT_THROW(primitive_root(Field::rational(), 3), Error);
  EXPECT_THROW(primitive_root(Field::cyclotomic(4), 3), Error);
}

TEST(PrimitiveRoot, ExactOrder) {
  struct Case {
    Field f;
    int n;
  };
  std::vector<Case> cases{{Field::rational(), 1},      {Field::rational(), 2},      {Field::cyclotomic(12), 12},
                          {Field::cyclotomic(12), 4},  {Field::cyclotomic(12), 6},  {Field::cyclotomic(3), 6},
                          {Field::cyclotomic(5), 10},  {Field::prime(7), 6},        {Field::prime(7), 3},
                          {Field::prime(13), 12},      {Field::cyclotomic(8), 8}};
  for (const auto& c : cases) {
    Scalar r = primitive_root(c.f, c.n);
    EXPECT_TRUE(r.pow(c.n).is_one()) << c.f.to_string() << " " << c.n;
    for (int d = 1; d < c.n; ++d)
      if (c.n % d == 0) EXPECT_FALSE(r.pow(d).is_one()) << c.f.to_string() << " " << c.n << " " << d;
    EXPECT_EQ(multiplicative_order(r), c.n);
  }
}

TEST(Linalg, RankAndInverse) {
  Field q = Field::rational();
  Matrix m(q, 2, 2);
  m(0, 0) = Scalar::from_int(q, 1);
  m(0, 1) = Scalar::from_int(q, 2);
  m(1, 0) = Scalar::from_int(q, 2);
  m(1, 1) = Scalar::from_int(q, 4);
  EXPECT_EQ(rank(m), 1u);
  EXPECT_FALSE(inverse(m).has_value());
  m(1, 1) = Scalar::from_int(q, 5);
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, Matrix::identity(q, 2));
}
