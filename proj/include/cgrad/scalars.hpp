#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cgrad/error.hpp"

namespace cgrad {

/// Integer polynomial, lowest degree first.
using IntPoly = std::vector<mpz_class>;

/// m-th cyclotomic polynomial, monic, lowest degree first.
IntPoly cyclotomic_polynomial(int m);

int euler_phi(int m);
bool is_prime(std::int64_t n);

/// Exact base field: Q, Q(zeta_m) or F_p.
class Field {
 public:
  enum class Kind { rational, cyclotomic, prime };

  static Field rational();
  static Field cyclotomic(int m);
  static Field prime(int p);

  /// Accepts "Q", "Q(z12)", "cyclotomic:12", "F5", "prime:5".
  static Field parse(const std::string& text);

  Kind kind() const;
  int conductor() const;       // m for cyclotomic, 1 otherwise
  int characteristic() const;  // 0 or p
  /// Dimension over the prime field part used for storage (phi(m) or 1).
  int degree() const;
  const IntPoly& minimal_polynomial() const;

  std::string to_string() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Immutable exact field element in canonical (reduced) form.
class Scalar {
 public:
  Scalar();  // zero of Q

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long value);
  static Scalar from_rational(const Field& f, const mpq_class& value);
  /// The generator z = zeta_m of a cyclotomic field.
  static Scalar zeta(const Field& f);
  /// Inverse of to_string.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& b) const;
  Scalar operator-(const Scalar& b) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& b) const;
  Scalar operator/(const Scalar& b) const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  /// Rationals as "a/b", cyclotomic elements as polynomials in z
  /// ("1/2*z^2 + 1"), residues as decimal strings.
  std::string to_string() const;

  /// Rational coefficients of the canonical representative (cyclotomic and
  /// rational fields); a single entry holding the residue for prime fields.
  std::vector<mpq_class> coefficients() const;

 private:
  Field field_;
  std::vector<mpq_class> coeffs_;  // rational / cyclotomic
  std::int64_t residue_ = 0;       // prime

  void check_same_field(const Scalar& b) const;
};

/// Deterministic primitive n-th root of unity: zeta^(m/n) in Q(zeta_m)
/// (or -zeta^(2m/n) when m is odd and n | 2m), the least residue of exact
/// order n in F_p, and 1 or -1 in Q.
Scalar primitive_root(const Field& field, int n);

/// Multiplicative order of a nonzero scalar, or 0 if it exceeds `limit`.
int multiplicative_order(const Scalar& a, int limit = 1000);

}  // namespace cgrad
