#include "cgrad/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cgrad {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::field_mismatch: return "FieldMismatch";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::no_such_root: return "NoSuchRoot";
    case ErrorCode::bad_characteristic: return "BadCharacteristic";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unknown_generator: return "UnknownGenerator";
    case ErrorCode::group_mismatch: return "GroupMismatch";
    case ErrorCode::not_a_group: return "NotAGroup";
    case ErrorCode::not_a_homomorphism: return "NotAHomomorphism";
    case ErrorCode::not_surjective: return "NotSurjective";
    case ErrorCode::unsupported_shape: return "UnsupportedShape";
    case ErrorCode::cone_does_not_commute: return "ConeDoesNotCommute";
    case ErrorCode::certificate_failure: return "CertificateFailure";
    case ErrorCode::not_associative: return "NotAssociative";
    case ErrorCode::not_a_basis: return "NotABasis";
    case ErrorCode::zero_element: return "ZeroElement";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::broken_chain: return "BrokenChain";
    case ErrorCode::infinite_without_radius: return "InfiniteWithoutRadius";
    case ErrorCode::star_mismatch: return "StarMismatch";
    case ErrorCode::not_connected: return "NotConnected";
    case ErrorCode::action_failure: return "ActionFailure";
    case ErrorCode::mismatch_bug: return "MismatchBug";
    case ErrorCode::check_failure: return "CheckFailure";
    case ErrorCode::unknown_tag: return "UnknownTag";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

// Division with remainder by a nonzero divisor.
void poly_divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  trim(a);
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const mpq_class& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / lead;
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(quot);
  rem = std::move(a);
}

IntPoly compute_cyclotomic(int m, std::map<int, IntPoly>& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  QPoly num(m + 1);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    IntPoly phi_d = compute_cyclotomic(d, cache);
    QPoly den(phi_d.begin(), phi_d.end());
    QPoly q, r;
    poly_divmod(num, den, q, r);
    num = q;
  }
  IntPoly out;
  for (const auto& c : num) out.push_back(c.get_num());
  cache[m] = out;
  return out;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error(ErrorCode::division_by_zero, "residue not invertible");
  if (t < 0) t += p;
  return t;
}

}  // namespace

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "cyclotomic_polynomial: m must be >= 1");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  return compute_cyclotomic(m, cache);
}

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Field

struct Field::Data {
  Kind kind = Kind::rational;
  int m = 1;
  int p = 0;
  IntPoly phi;
  QPoly phi_q;
};

Field Field::rational() {
  static const Field q(std::make_shared<Data>());
  return q;
}

Field Field::cyclotomic(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "cyclotomic field needs m >= 1");
  auto d = std::make_shared<Data>();
  d->kind = Kind::cyclotomic;
  d->m = m;
  d->phi = cyclotomic_polynomial(m);
  d->phi_q.assign(d->phi.begin(), d->phi.end());
  return Field(d);
}

Field Field::prime(int p) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "F_p needs a prime p, got " + std::to_string(p));
  auto d = std::make_shared<Data>();
  d->kind = Kind::prime;
  d->p = p;
  return Field(d);
}

Field Field::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  auto number_after = [&](std::size_t pos, std::size_t end) {
    std::string digits = text.substr(pos, end - pos);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw Error(ErrorCode::parse_error, "bad field descriptor: " + raw);
    return std::stoi(digits);
  };
  if (text == "Q" || text == "rational") return rational();
  if (text.rfind("Q(z", 0) == 0 && text.back() == ')') return cyclotomic(number_after(3, text.size() - 1));
  if (text.rfind("cyclotomic:", 0) == 0) return cyclotomic(number_after(11, text.size()));
  if (text.rfind("prime:", 0) == 0) return prime(number_after(6, text.size()));
  if (text.size() > 1 && text[0] == 'F') return prime(number_after(1, text.size()));
  throw Error(ErrorCode::parse_error, "bad field descriptor: " + raw);
}

Field::Kind Field::kind() const { return data_->kind; }
int Field::conductor() const { return data_->m; }
int Field::characteristic() const { return data_->p; }
int Field::degree() const {
  return data_->kind == Kind::cyclotomic ? static_cast<int>(data_->phi.size()) - 1 : 1;
}
const IntPoly& Field::minimal_polynomial() const { return data_->phi; }

std::string Field::to_string() const {
  switch (data_->kind) {
    case Kind::rational: return "Q";
    case Kind::cyclotomic: return "Q(z" + std::to_string(data_->m) + ")";
    case Kind::prime: return "F" + std::to_string(data_->p);
  }
  return "?";
}

bool Field::operator==(const Field& other) const {
  if (data_ == other.data_) return true;
  return data_->kind == other.data_->kind && data_->m == other.data_->m && data_->p == other.data_->p;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : field_(Field::rational()), coeffs_(1) {}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  s.coeffs_.assign(f.kind() == Field::Kind::prime ? 0 : f.degree(), 0);
  s.residue_ = 0;
  return s;
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long value) {
  Scalar s = zero(f);
  if (f.kind() == Field::Kind::prime) {
    long p = f.characteristic();
    s.residue_ = ((value % p) + p) % p;
  } else {
    s.coeffs_[0] = value;
  }
  return s;
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& value) {
  if (f.kind() != Field::Kind::prime) {
    Scalar s = zero(f);
    s.coeffs_[0] = value;
    s.coeffs_[0].canonicalize();
    return s;
  }
  if (value.get_den() == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
  Scalar num = from_int(f, mpz_class(value.get_num() % f.characteristic()).get_si());
  Scalar den = from_int(f, mpz_class(value.get_den() % f.characteristic()).get_si());
  return num / den;
}

Scalar Scalar::zeta(const Field& f) {
  if (f.kind() != Field::Kind::cyclotomic)
    throw Error(ErrorCode::no_such_root, "zeta is only defined for cyclotomic fields");
  Scalar s = zero(f);
  if (f.degree() == 1) {
    // Q(z1) and Q(z2): z is the root of x - 1 or x + 1.
    s.coeffs_[0] = -mpq_class(f.minimal_polynomial()[0]);
    return s;
  }
  s.coeffs_[1] = 1;
  return s;
}

bool Scalar::is_zero() const {
  if (field_.kind() == Field::Kind::prime) return residue_ == 0;
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Scalar::is_one() const { return *this == one(field_); }

void Scalar::check_same_field(const Scalar& b) const {
  if (field_ != b.field_)
    throw Error(ErrorCode::field_mismatch,
                "operands live in " + field_.to_string() + " and " + b.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& b) const {
  check_same_field(b);
  Scalar r = *this;
  if (field_.kind() == Field::Kind::prime) {
    r.residue_ = (residue_ + b.residue_) % field_.characteristic();
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.kind() == Field::Kind::prime) {
    r.residue_ = (field_.characteristic() - residue_) % field_.characteristic();
  } else {
    for (auto& c : r.coeffs_) c = -c;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& b) const { return *this + (-b); }

Scalar Scalar::operator*(const Scalar& b) const {
  check_same_field(b);
  Scalar r = *this;
  switch (field_.kind()) {
    case Field::Kind::prime:
      r.residue_ = residue_ * b.residue_ % field_.characteristic();
      return r;
    case Field::Kind::rational:
      r.coeffs_[0] *= b.coeffs_[0];
      return r;
    case Field::Kind::cyclotomic: break;
  }
  const std::size_t d = coeffs_.size();
  QPoly prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * b.coeffs_[j];
  }
  const IntPoly& phi = field_.minimal_polynomial();
  for (std::size_t k = prod.size(); k-- > d;) {
    if (prod[k] == 0) continue;
    mpq_class c = prod[k];
    for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= c * phi[i];
    prod[k] = 0;
  }
  for (std::size_t i = 0; i < d; ++i) r.coeffs_[i] = prod[i];
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  Scalar r = *this;
  switch (field_.kind()) {
    case Field::Kind::prime:
      r.residue_ = mod_inverse(residue_, field_.characteristic());
      return r;
    case Field::Kind::rational:
      r.coeffs_[0] = 1 / coeffs_[0];
      return r;
    case Field::Kind::cyclotomic: break;
  }
  // Extended Euclid in Q[x]: find s with s*a = 1 mod Phi_m.
  QPoly a = coeffs_;
  trim(a);
  QPoly phi(field_.minimal_polynomial().begin(), field_.minimal_polynomial().end());
  QPoly r0 = phi, r1 = a, s0, s1{mpq_class(1)};
  while (!r1.empty() && r1.size() > 1) {
    QPoly q, rem;
    poly_divmod(r0, r1, q, rem);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi_m is irreducible.
  mpq_class c = r1[0];
  QPoly inv;
  for (auto& x : s1) inv.push_back(x / c);
  QPoly q, rem;
  poly_divmod(inv, phi, q, rem);
  r.coeffs_.assign(coeffs_.size(), 0);
  for (std::size_t i = 0; i < rem.size(); ++i) r.coeffs_[i] = rem[i];
  return r;
}

Scalar Scalar::operator/(const Scalar& b) const {
  check_same_field(b);
  return *this * b.inverse();
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? -exponent : exponent;
  Scalar result = one(field_);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& b) const {
  if (field_ != b.field_) return false;
  if (field_.kind() == Field::Kind::prime) return residue_ == b.residue_;
  return coeffs_ == b.coeffs_;
}

std::vector<mpq_class> Scalar::coefficients() const {
  if (field_.kind() == Field::Kind::prime) return {mpq_class(residue_)};
  return coeffs_;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case Field::Kind::prime: return std::to_string(residue_);
    case Field::Kind::rational: return coeffs_[0].get_str();
    case Field::Kind::cyclotomic: break;
  }
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    bool negative = c < 0;
    mpq_class mag = negative ? mpq_class(-c) : c;
    std::string term;
    if (k == 0) {
      term = mag.get_str();
    } else {
      std::string mono = k == 1 ? "z" : "z^" + std::to_string(k);
      term = mag == 1 ? mono : mag.get_str() + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

Scalar Scalar::parse(const Field& f, const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty scalar");
  auto parse_rational = [&](const std::string& s) {
    if (s.empty()) return mpq_class(1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorCode::parse_error, "bad rational '" + s + "' in " + raw);
    q.canonicalize();
    return q;
  };
  if (f.kind() != Field::Kind::cyclotomic) return from_rational(f, parse_rational(text));

  Scalar result = zero(f);
  const Scalar z = zeta(f);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = pos + 1;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string term = text.substr(pos, end - pos);
    pos = end;
    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term.erase(0, 1);
    }
    mpq_class coef(1);
    long power = 0;
    auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      coef = parse_rational(term);
    } else {
      std::string c = term.substr(0, zpos);
      if (!c.empty() && c.back() == '*') c.pop_back();
      coef = parse_rational(c);
      std::string rest = term.substr(zpos + 1);
      if (rest.empty()) {
        power = 1;
      } else if (rest[0] == '^' && rest.size() > 1 && std::all_of(rest.begin() + 1, rest.end(), ::isdigit)) {
        power = std::stol(rest.substr(1));
      } else {
        throw Error(ErrorCode::parse_error, "bad monomial in " + raw);
      }
    }
    if (negative) coef = -coef;
    result += from_rational(f, coef) * z.pow(power);
  }
  return result;
}

int multiplicative_order(const Scalar& a, int limit) {
  if (a.is_zero()) throw Error(ErrorCode::zero_element, "order of zero");
  Scalar x = a;
  for (int k = 1; k <= limit; ++k) {
    if (x.is_one()) return k;
    x *= a;
  }
  return 0;
}

Scalar primitive_root(const Field& field, int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "primitive_root: n must be >= 1");
  auto missing = [&]() {
    return Error(ErrorCode::no_such_root,
                 field.to_string() + " has no primitive " + std::to_string(n) + "-th root of unity");
  };
  switch (field.kind()) {
    case Field::Kind::rational:
      if (n == 1) return Scalar::one(field);
      if (n == 2) return Scalar::from_int(field, -1);
      throw missing();
    case Field::Kind::prime: {
      int p = field.characteristic();
      if ((p - 1) % n != 0) throw missing();
      for (int a = 1; a < p; ++a) {
        Scalar s = Scalar::from_int(field, a);
        if (multiplicative_order(s, p) == n) return s;
      }
      throw missing();
    }
    case Field::Kind::cyclotomic: {
      int m = field.conductor();
      Scalar z = Scalar::zeta(field);
      if (m % n == 0) return z.pow(m / n);
      if (m % 2 == 1 && (2 * m) % n == 0) {
        // n = 2d with d odd dividing m: -zeta_d has order 2d.
        int d = n / 2;
        return -z.pow(m / d);
      }
      throw missing();
    }
  }
  throw missing();
}

}  // namespace cgrad
