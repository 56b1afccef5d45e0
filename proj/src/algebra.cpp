#include "cgrad/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace cgrad {

struct LinearCategory::Data {
  Data() : field(Field::rational()) {}
  Field field;
  std::vector<std::string> object_names;
  std::vector<BasisMorphism> basis;
  std::unordered_map<std::string, std::size_t> by_name;
  std::vector<std::vector<std::vector<std::size_t>>> homs;  // [source][target]
  std::vector<std::vector<std::size_t>> out;
  std::unordered_map<std::uint64_t, Coeffs> compose;
  std::vector<Coeffs> identity;
  std::string tag;
  std::vector<std::pair<std::size_t, std::size_t>> block_origin;
};

namespace {

std::uint64_t pair_key(std::size_t g, std::size_t f) {
  return (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint64_t>(f);
}

const Coeffs& empty_coeffs() {
  static const Coeffs empty;
  return empty;
}

const std::vector<std::size_t>& empty_indices() {
  static const std::vector<std::size_t> empty;
  return empty;
}

Coeffs from_map(const std::map<std::size_t, Scalar>& m) {
  Coeffs out;
  for (const auto& [i, s] : m)
    if (!s.is_zero()) out.emplace_back(i, s);
  return out;
}

Coeffs unit_coeffs(std::size_t i, const Field& f) { return {{i, Scalar::one(f)}}; }

std::string term_string(const Scalar& c, const std::string& name) {
  if (c.is_one()) return name;
  std::string s = c.to_string();
  if (s.find(' ') != std::string::npos) s = "(" + s + ")";
  return s + "*" + name;
}

}  // namespace

// ---------------------------------------------------------------------------
// LinearCategory

LinearCategory::LinearCategory() {
  static const std::shared_ptr<const Data> empty = [] {
    auto d = std::make_shared<Data>();
    d->field = Field::rational();
    return std::shared_ptr<const Data>(d);
  }();
  data_ = empty;
}

const Field& LinearCategory::field() const { return data_->field; }
std::size_t LinearCategory::object_count() const { return data_->object_names.size(); }
const std::vector<std::string>& LinearCategory::object_names() const { return data_->object_names; }
std::size_t LinearCategory::dimension() const { return data_->basis.size(); }
const std::vector<BasisMorphism>& LinearCategory::basis() const { return data_->basis; }
const BasisMorphism& LinearCategory::basis(std::size_t i) const { return data_->basis.at(i); }

std::optional<std::size_t> LinearCategory::find(const std::string& name) const {
  auto it = data_->by_name.find(name);
  if (it == data_->by_name.end()) return std::nullopt;
  return it->second;
}

std::size_t LinearCategory::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw Error(ErrorCode::invalid_argument, "no basis morphism named '" + name + "'");
  return *i;
}

const std::vector<std::size_t>& LinearCategory::hom(std::size_t x, std::size_t y) const {
  if (x >= object_count() || y >= object_count()) return empty_indices();
  return data_->homs[x][y];
}

const std::vector<std::size_t>& LinearCategory::out_of(std::size_t x) const {
  if (x >= object_count()) return empty_indices();
  return data_->out[x];
}

const Coeffs& LinearCategory::compose(std::size_t g, std::size_t f) const {
  auto it = data_->compose.find(pair_key(g, f));
  return it == data_->compose.end() ? empty_coeffs() : it->second;
}

const Coeffs& LinearCategory::identity(std::size_t object) const { return data_->identity.at(object); }
const std::string& LinearCategory::tag() const { return data_->tag; }
const std::vector<std::pair<std::size_t, std::size_t>>& LinearCategory::block_origin() const {
  return data_->block_origin;
}

// ---------------------------------------------------------------------------
// Builder

LinearCategory::Builder::Builder(Field field, std::size_t objects) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < objects; ++i) names.push_back(std::to_string(i));
  *this = Builder(std::move(field), std::move(names));
}

LinearCategory::Builder::Builder(Field field, std::vector<std::string> object_names)
    : data_(std::make_shared<Data>()) {
  data_->field = std::move(field);
  std::size_t n = object_names.size();
  data_->object_names = std::move(object_names);
  data_->homs.assign(n, std::vector<std::vector<std::size_t>>(n));
  data_->out.assign(n, {});
  data_->identity.assign(n, {});
}

std::size_t LinearCategory::Builder::add(std::string name, std::size_t source, std::size_t target) {
  std::size_t n = data_->object_names.size();
  if (source >= n || target >= n) throw Error(ErrorCode::invalid_argument, "object index out of range");
  if (data_->by_name.count(name)) throw Error(ErrorCode::invalid_argument, "duplicate basis name '" + name + "'");
  std::size_t i = data_->basis.size();
  data_->by_name[name] = i;
  data_->basis.push_back({std::move(name), source, target});
  data_->homs[source][target].push_back(i);
  data_->out[source].push_back(i);
  return i;
}

void LinearCategory::Builder::set_compose(std::size_t g, std::size_t f, Coeffs value) {
  const auto& b = data_->basis;
  if (g >= b.size() || f >= b.size()) throw Error(ErrorCode::invalid_argument, "basis index out of range");
  if (b[g].source != b[f].target)
    throw Error(ErrorCode::invalid_argument, "composition of non-composable " + b[g].name + " o " + b[f].name);
  std::sort(value.begin(), value.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  Coeffs clean;
  for (auto& [i, s] : value) {
    if (s.is_zero()) continue;
    if (i >= b.size() || b[i].source != b[f].source || b[i].target != b[g].target)
      throw Error(ErrorCode::invalid_argument, "composition " + b[g].name + " o " + b[f].name + " leaves its hom space");
    if (!clean.empty() && clean.back().first == i)
      clean.back().second += s;
    else
      clean.emplace_back(i, s);
  }
  if (clean.empty())
    data_->compose.erase(pair_key(g, f));
  else
    data_->compose[pair_key(g, f)] = std::move(clean);
}

void LinearCategory::Builder::set_identity(std::size_t object, Coeffs value) {
  for (const auto& [i, s] : value) {
    (void)s;
    const auto& m = data_->basis.at(i);
    if (m.source != object || m.target != object)
      throw Error(ErrorCode::invalid_argument, "identity outside the endomorphism space");
  }
  data_->identity.at(object) = std::move(value);
}

void LinearCategory::Builder::set_tag(std::string tag) { data_->tag = std::move(tag); }

void LinearCategory::Builder::set_block_origin(std::vector<std::pair<std::size_t, std::size_t>> origin) {
  data_->block_origin = std::move(origin);
}

std::size_t LinearCategory::Builder::dimension() const { return data_->basis.size(); }

LinearCategory LinearCategory::Builder::build() {
  LinearCategory c(data_);
  const auto& b = data_->basis;
  for (std::size_t f = 0; f < b.size(); ++f) {
    Coeffs single = unit_coeffs(f, data_->field);
    if (compose_coeffs(c, data_->identity[b[f].target], single) != single ||
        compose_coeffs(c, single, data_->identity[b[f].source]) != single)
      throw Error(ErrorCode::not_associative, "identity law fails on " + b[f].name);
  }
  for (std::size_t f = 0; f < b.size(); ++f)
    for (std::size_t g : data_->out[b[f].target]) {
      const Coeffs& gf = c.compose(g, f);
      for (std::size_t h : data_->out[b[g].target]) {
        Coeffs left = compose_coeffs(c, c.compose(h, g), unit_coeffs(f, data_->field));
        Coeffs right = compose_coeffs(c, unit_coeffs(h, data_->field), gf);
        if (left != right)
          throw Error(ErrorCode::not_associative,
                      "(" + b[h].name + " o " + b[g].name + ") o " + b[f].name + " differs from " + b[h].name +
                          " o (" + b[g].name + " o " + b[f].name + ")");
      }
    }
  data_.reset();
  return c;
}

// ---------------------------------------------------------------------------
// Sparse helpers

Coeffs compose_coeffs(const LinearCategory& c, const Coeffs& a, const Coeffs& b) {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      if (c.basis(i).source != c.basis(j).target) continue;
      const Coeffs& ij = c.compose(i, j);
      if (ij.empty()) continue;
      Scalar xy = x * y;
      for (const auto& [k, z] : ij) {
        auto it = acc.find(k);
        if (it == acc.end())
          acc.emplace(k, xy * z);
        else
          it->second += xy * z;
      }
    }
  return from_map(acc);
}

Coeffs add_coeffs(const Coeffs& a, const Coeffs& b, const Scalar& factor) {
  std::map<std::size_t, Scalar> acc(a.begin(), a.end());
  for (const auto& [i, s] : b) {
    auto it = acc.find(i);
    if (it == acc.end())
      acc.emplace(i, s * factor);
    else
      it->second += s * factor;
  }
  return from_map(acc);
}

Coeffs scale_coeffs(const Coeffs& a, const Scalar& s) {
  Coeffs out;
  if (s.is_zero()) return out;
  for (const auto& [i, x] : a) out.emplace_back(i, x * s);
  return out;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(LinearCategory c)
    : cat_(std::move(c)), coords_(cat_.dimension(), Scalar::zero(cat_.field())) {}

AlgebraElement AlgebraElement::basis(const LinearCategory& c, std::size_t i) {
  AlgebraElement e(c);
  e.coords_.at(i) = Scalar::one(c.field());
  return e;
}

AlgebraElement AlgebraElement::basis(const LinearCategory& c, const std::string& name) {
  return basis(c, c.index(name));
}

AlgebraElement AlgebraElement::from_coeffs(const LinearCategory& c, const Coeffs& coeffs) {
  AlgebraElement e(c);
  for (const auto& [i, s] : coeffs) e.coords_.at(i) += s;
  return e;
}

AlgebraElement AlgebraElement::unit(const LinearCategory& c) {
  AlgebraElement e(c);
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (const auto& [i, s] : c.identity(x)) e.coords_[i] += s;
  return e;
}

Coeffs AlgebraElement::coeffs() const {
  Coeffs out;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) out.emplace_back(i, coords_[i]);
  return out;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& b) const {
  if (!(cat_ == b.cat_)) throw Error(ErrorCode::invalid_argument, "elements of different categories");
  AlgebraElement r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& b) const { return *this + (-b); }

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& s : r.coords_) s = -s;
  return r;
}

AlgebraElement AlgebraElement::operator*(const Scalar& s) const {
  AlgebraElement r = *this;
  for (auto& c : r.coords_) c *= s;
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& b) const {
  if (!(cat_ == b.cat_)) throw Error(ErrorCode::invalid_argument, "elements of different categories");
  return from_coeffs(cat_, compose_coeffs(cat_, coeffs(), b.coeffs()));
}

AlgebraElement AlgebraElement::pow(unsigned exponent) const {
  AlgebraElement r = unit(cat_);
  for (unsigned k = 0; k < exponent; ++k) r = r * *this;
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& b) const { return cat_ == b.cat_ && coords_ == b.coords_; }

std::string AlgebraElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += term_string(coords_[i], cat_.basis(i).name);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// AlgebraMorphism

AlgebraMorphism::AlgebraMorphism(LinearCategory source, LinearCategory target, std::vector<Coeffs> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.dimension())
    throw Error(ErrorCode::invalid_argument, "one image per source basis vector expected");
  if (apply(AlgebraElement::unit(source_)) != AlgebraElement::unit(target_))
    throw Error(ErrorCode::not_a_homomorphism, "algebra map is not unital");
  for (std::size_t i = 0; i < source_.dimension(); ++i)
    for (std::size_t j = 0; j < source_.dimension(); ++j) {
      if (source_.basis(i).source != source_.basis(j).target) continue;
      Coeffs lhs;
      for (const auto& [k, s] : source_.compose(i, j)) lhs = add_coeffs(lhs, images_[k], s);
      if (lhs != compose_coeffs(target_, images_[i], images_[j]))
        throw Error(ErrorCode::not_a_homomorphism,
                    "algebra map not multiplicative on " + source_.basis(i).name + " * " + source_.basis(j).name);
    }
}

AlgebraElement AlgebraMorphism::apply(const AlgebraElement& a) const {
  Coeffs acc;
  for (const auto& [i, s] : a.coeffs()) acc = add_coeffs(acc, images_.at(i), s);
  return AlgebraElement::from_coeffs(target_, acc);
}

bool AlgebraMorphism::is_injective() const {
  Matrix m(target_.field(), images_.size(), target_.dimension());
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (const auto& [j, s] : images_[i]) m(i, j) = s;
  return rank(m) == images_.size();
}

// ---------------------------------------------------------------------------
// Constructions

std::string matrix_unit_name(std::size_t n, std::size_t row, std::size_t col) {
  if (n < 10) return "E" + std::to_string(row) + std::to_string(col);
  return "E" + std::to_string(row) + "," + std::to_string(col);
}

LinearCategory make_matrix_algebra(std::size_t n, const Field& field) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "matrix size must be positive");
  LinearCategory::Builder b(field, 1);
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t c = 1; c <= n; ++c) b.add(matrix_unit_name(n, r, c), 0, 0);
  auto idx = [n](std::size_t r, std::size_t c) { return (r - 1) * n + (c - 1); };
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t c = 1; c <= n; ++c)
      for (std::size_t l = 1; l <= n; ++l) b.set_compose(idx(r, c), idx(c, l), unit_coeffs(idx(r, l), field));
  Coeffs unit;
  for (std::size_t i = 1; i <= n; ++i) unit.emplace_back(idx(i, i), Scalar::one(field));
  b.set_identity(0, unit);
  b.set_tag("matrix:" + std::to_string(n));
  return b.build();
}

std::string xy_name(std::size_t i, std::size_t j) {
  if (i == 0 && j == 0) return "1";
  std::string out;
  if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
  if (j > 0) {
    if (!out.empty()) out += "*";
    out += j == 1 ? "y" : "y^" + std::to_string(j);
  }
  return out;
}

LinearCategory make_matrix_xy(std::size_t n, const Field& field) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "matrix size must be positive");
  Scalar q = primitive_root(field, static_cast<int>(n));
  LinearCategory::Builder b(field, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add(xy_name(i, j), 0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          b.set_compose(i * n + j, k * n + l,
                        {{((i + k) % n) * n + (j + l) % n, q.pow(static_cast<long>((j * k) % n))}});
  b.set_identity(0, unit_coeffs(0, field));
  b.set_tag("matrix_xy:" + std::to_string(n));
  return b.build();
}

std::vector<Coeffs> matrix_xy_images(std::size_t n, const Field& field) {
  Scalar q = primitive_root(field, static_cast<int>(n));
  Matrix x(field, n, n), y(field, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    x((k + 1) % n, k) = Scalar::one(field);
    y(k, k) = q.pow(static_cast<long>(k + 1));
  }
  std::vector<Coeffs> out;
  Matrix xi = Matrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m = xi;
    for (std::size_t j = 0; j < n; ++j) {
      Coeffs c;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col)
          if (!m(r, col).is_zero()) c.emplace_back(r * n + col, m(r, col));
      out.push_back(std::move(c));
      m = m * y;
    }
    xi = xi * x;
  }
  return out;
}

LinearCategory make_triangular(std::size_t n, const Field& field) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "matrix size must be positive");
  LinearCategory::Builder b(field, 1);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> idx;
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t c = 1; c <= r; ++c) idx[{r, c}] = b.add(matrix_unit_name(n, r, c), 0, 0);
  for (const auto& [rc, i] : idx)
    for (const auto& [kl, j] : idx)
      if (rc.second == kl.first) b.set_compose(i, j, unit_coeffs(idx.at({rc.first, kl.second}), field));
  Coeffs unit;
  for (std::size_t i = 1; i <= n; ++i) unit.emplace_back(idx.at({i, i}), Scalar::one(field));
  std::sort(unit.begin(), unit.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  b.set_identity(0, unit);
  b.set_tag("triangular:" + std::to_string(n));
  return b.build();
}

LinearCategory make_diagonal(std::size_t n, const Field& field) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "diagonal size must be positive");
  LinearCategory::Builder b(field, 1);
  Coeffs unit;
  for (std::size_t i = 0; i < n; ++i) {
    b.add("d" + std::to_string(i + 1), 0, 0);
    b.set_compose(i, i, unit_coeffs(i, field));
    unit.emplace_back(i, Scalar::one(field));
  }
  b.set_identity(0, unit);
  b.set_tag("diagonal:" + std::to_string(n));
  return b.build();
}

LinearCategory make_group_algebra(const Group& group, const Field& field) {
  if (!group.is_finite()) throw Error(ErrorCode::invalid_argument, "group algebra of an infinite group");
  auto elems = group.elements();
  std::map<GroupElement, std::size_t> index;
  LinearCategory::Builder b(field, 1);
  for (const auto& g : elems) index[g] = b.add(group.format(g), 0, 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) b.set_compose(i, j, unit_coeffs(index.at(elems[i] * elems[j]), field));
  b.set_identity(0, unit_coeffs(index.at(group.identity()), field));
  b.set_tag("group:" + group.key());
  return b.build();
}

LinearCategory make_truncated_poly(std::size_t p, const Field& field) {
  if (p < 1) throw Error(ErrorCode::invalid_argument, "truncation degree must be positive");
  LinearCategory::Builder b(field, 1);
  for (std::size_t i = 0; i < p; ++i) b.add(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i), 0, 0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; i + j < p; ++j) b.set_compose(i, j, unit_coeffs(i + j, field));
  b.set_identity(0, unit_coeffs(0, field));
  b.set_tag("truncated:" + std::to_string(p));
  return b.build();
}

LinearCategory product_algebra(const LinearCategory& a, const LinearCategory& b) {
  if (a.object_count() != 1 || b.object_count() != 1)
    throw Error(ErrorCode::invalid_argument, "product of algebras needs one-object categories");
  if (a.field() != b.field()) throw Error(ErrorCode::field_mismatch, "product of algebras over different fields");
  if (a.tag().rfind("diagonal:", 0) == 0 && b.tag().rfind("diagonal:", 0) == 0)
    return make_diagonal(a.dimension() + b.dimension(), a.field());
  bool clash = false;
  for (const auto& m : b.basis()) clash = clash || a.find(m.name).has_value();
  LinearCategory::Builder out(a.field(), 1);
  for (const auto& m : a.basis()) out.add(clash ? "(" + m.name + ",0)" : m.name, 0, 0);
  for (const auto& m : b.basis()) out.add(clash ? "(0," + m.name + ")" : m.name, 0, 0);
  std::size_t off = a.dimension();
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j) out.set_compose(i, j, a.compose(i, j));
  for (std::size_t i = 0; i < b.dimension(); ++i)
    for (std::size_t j = 0; j < b.dimension(); ++j) {
      Coeffs c;
      for (const auto& [k, s] : b.compose(i, j)) c.emplace_back(k + off, s);
      out.set_compose(i + off, j + off, c);
    }
  Coeffs unit = a.identity(0);
  for (const auto& [k, s] : b.identity(0)) unit.emplace_back(k + off, s);
  out.set_identity(0, unit);
  out.set_tag("product:" + a.tag() + "," + b.tag());
  return out.build();
}

LinearCategory total_algebra(const LinearCategory& c) {
  if (c.object_count() == 1) return c;
  std::map<std::string, std::size_t> seen;
  for (const auto& m : c.basis()) ++seen[m.name];
  LinearCategory::Builder b(c.field(), 1);
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  for (const auto& m : c.basis()) {
    std::string name = m.name;
    if (seen[name] > 1) name += "@" + std::to_string(m.source) + ">" + std::to_string(m.target);
    b.add(name, 0, 0);
    origin.emplace_back(m.source, m.target);
  }
  for (std::size_t f = 0; f < c.dimension(); ++f)
    for (std::size_t g : c.out_of(c.basis(f).target))
      if (!c.compose(g, f).empty()) b.set_compose(g, f, c.compose(g, f));
  Coeffs unit;
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (const auto& e : c.identity(x)) unit.push_back(e);
  std::sort(unit.begin(), unit.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  b.set_identity(0, unit);
  b.set_block_origin(std::move(origin));
  b.set_tag("total:" + c.tag());
  return b.build();
}

// ---------------------------------------------------------------------------
// Element properties

std::size_t valuation(const AlgebraElement& a) {
  if (a.category().tag().rfind("truncated:", 0) != 0)
    throw Error(ErrorCode::invalid_argument, "valuation needs a truncated polynomial algebra");
  for (std::size_t i = 0; i < a.coordinates().size(); ++i)
    if (!a[i].is_zero()) return i;
  throw Error(ErrorCode::zero_element, "valuation of zero");
}

Matrix left_multiplication(const AlgebraElement& a) {
  const LinearCategory& c = a.category();
  std::size_t d = c.dimension();
  Matrix m(c.field(), d, d);
  Coeffs ac = a.coeffs();
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& [i, s] : compose_coeffs(c, ac, unit_coeffs(j, c.field()))) m(i, j) = s;
  return m;
}

bool is_invertible(const AlgebraElement& a) {
  if (a.category().object_count() != 1) throw Error(ErrorCode::invalid_argument, "invertibility needs an algebra");
  return rank(left_multiplication(a)) == a.category().dimension();
}

// ---------------------------------------------------------------------------
// Matrix structure of total algebras

AlgebraMorphism match_matrix_structure(const LinearCategory& a, std::size_t n) {
  const auto& origin = a.block_origin();
  if (a.object_count() != 1 || origin.size() != a.dimension() || a.dimension() != n * n)
    throw Error(ErrorCode::shape_mismatch, "not the total algebra of a category with " + std::to_string(n) +
                                               " objects and one-dimensional homs");
  // block[y][x]: basis vector of the hom x -> y
  std::vector<std::vector<std::optional<std::size_t>>> block(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < origin.size(); ++i) {
    auto [x, y] = origin[i];
    if (x >= n || y >= n || block[y][x])
      throw Error(ErrorCode::shape_mismatch, "hom space of " + a.basis(i).name + " is not one-dimensional");
    block[y][x] = i;
  }
  auto constant = [&](std::size_t y, std::size_t x, std::size_t z) {
    const Coeffs& c = a.compose(*block[y][x], *block[x][z]);
    if (c.size() != 1 || c[0].first != *block[y][z])
      throw Error(ErrorCode::shape_mismatch,
                  "zero structure constant for " + a.basis(*block[y][x]).name + " * " + a.basis(*block[x][z]).name);
    return c[0].second;
  };
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t z = 0; z < n; ++z) (void)constant(y, x, z);

  LinearCategory m = make_matrix_algebra(n, a.field());
  Scalar q000 = constant(0, 0, 0);
  auto root = [&](std::size_t x) { return x == 0 ? q000 : Scalar::one(a.field()); };
  std::vector<Coeffs> images(a.dimension());
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      // f_{y0} is sent to E_{y0}; the remaining scalars follow from f_{yx} o f_{x0} = q f_{y0}
      Scalar c = x == 0 && y != 0 ? Scalar::one(a.field()) : constant(y, x, 0) * root(y) / root(x);
      images[*block[y][x]] = {{y * n + x, c}};
    }
  try {
    return AlgebraMorphism(a, m, images);
  } catch (const Error& e) {
    throw Error(ErrorCode::shape_mismatch, std::string("rescaling along the star does not close: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Characters of finite abelian groups

namespace {

struct CharacterTable {
  std::vector<GroupElement> elements;
  std::map<GroupElement, std::size_t> index;
  std::vector<std::vector<long>> characters;  // exponent tuples
  std::vector<Scalar> roots;                  // one per cyclic factor
  std::vector<long> orders;

  Scalar value(std::size_t chi, const GroupElement& g) const {
    Scalar v = Scalar::one(roots.empty() ? Field::rational() : roots[0].field());
    for (std::size_t i = 0; i < orders.size(); ++i) v *= roots[i].pow(characters[chi][i] * g.code()[i] % orders[i]);
    return v;
  }
};

CharacterTable character_table(const Group& group, const Field& field) {
  if (group.kind() != GroupKind::finite_abelian)
    throw Error(ErrorCode::invalid_argument, "characters need a group given by invariant factors");
  if (field.characteristic() != 0 && group.order() % static_cast<std::size_t>(field.characteristic()) == 0)
    throw Error(ErrorCode::bad_characteristic,
                "characteristic " + std::to_string(field.characteristic()) + " divides the group order");
  CharacterTable t;
  t.orders = group.cyclic_orders();
  for (long n : t.orders) t.roots.push_back(primitive_root(field, static_cast<int>(n)));
  if (t.roots.empty()) t.roots.push_back(Scalar::one(field));
  t.elements = group.elements();
  for (std::size_t i = 0; i < t.elements.size(); ++i) t.index[t.elements[i]] = i;
  std::vector<long> c(t.orders.size(), 0);
  while (true) {
    t.characters.push_back(c);
    std::size_t k = c.size();
    while (k > 0 && ++c[k - 1] == t.orders[k - 1]) c[--k] = 0;
    if (k == 0) break;
  }
  return t;
}

}  // namespace

std::vector<Coeffs> character_idempotents(const Group& group, const Field& field) {
  CharacterTable t = character_table(group, field);
  LinearCategory kg = make_group_algebra(group, field);
  Scalar inv_order = Scalar::from_int(field, static_cast<long>(t.elements.size())).inverse();
  std::vector<Coeffs> out;
  for (std::size_t chi = 0; chi < t.characters.size(); ++chi) {
    Coeffs e;
    for (std::size_t i = 0; i < t.elements.size(); ++i) e.emplace_back(i, t.value(chi, t.elements[i]) * inv_order);
    out.push_back(from_map(std::map<std::size_t, Scalar>(e.begin(), e.end())));
  }
  Coeffs sum;
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = 0; b < out.size(); ++b) {
      Coeffs prod = compose_coeffs(kg, out[a], out[b]);
      if (prod != (a == b ? out[a] : Coeffs{}))
        throw Error(ErrorCode::check_failure, "character idempotents are not orthogonal");
    }
    sum = add_coeffs(sum, out[a], Scalar::one(field));
  }
  if (sum != kg.identity(0)) throw Error(ErrorCode::check_failure, "character idempotents do not sum to 1");
  return out;
}

AlgebraMorphism group_algebra_to_diagonal(const Group& group, const Field& field) {
  CharacterTable t = character_table(group, field);
  character_idempotents(group, field);
  LinearCategory kg = make_group_algebra(group, field);
  LinearCategory diag = make_diagonal(t.elements.size(), field);
  std::vector<Coeffs> images;
  for (const auto& g : t.elements) {
    Coeffs c;
    for (std::size_t chi = 0; chi < t.characters.size(); ++chi) c.emplace_back(chi, t.value(chi, g).inverse());
    images.push_back(std::move(c));
  }
  return AlgebraMorphism(kg, diag, images);
}

// ---------------------------------------------------------------------------
// Quiver presentation

QuiverPresentation quiver_presentation_matrix(std::size_t n, const Field& field) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "quiver presentation needs n >= 2");
  QuiverPresentation q;
  q.n = n;
  q.matrices = make_matrix_algebra(n, field);
  for (std::size_t i = 1; i < n; ++i) q.arrows.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) q.arrows.push_back("y" + std::to_string(i));
  for (const auto& [name, value] : q.relations())
    if (!value.is_zero()) throw Error(ErrorCode::check_failure, "relation " + name + " does not vanish");
  if (q.image_rank() != n * n) throw Error(ErrorCode::check_failure, "path images do not span the matrices");
  return q;
}

AlgebraElement QuiverPresentation::evaluate(const std::string& path) const {
  AlgebraElement acc = AlgebraElement::unit(matrices);
  std::string s;
  for (char ch : path)
    if (ch != ' ') s += ch;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t stop = s.find('*', start);
    if (stop == std::string::npos) stop = s.size();
    std::string tok = s.substr(start, stop - start);
    std::size_t i = 0;
    try {
      if (tok.size() < 2) throw std::invalid_argument(tok);
      i = std::stoul(tok.substr(1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, "bad path letter '" + tok + "'");
    }
    std::string name;
    if (tok[0] == 'e' && i >= 1 && i <= n)
      name = matrix_unit_name(n, i, i);
    else if (tok[0] == 'x' && i >= 1 && i < n)
      name = matrix_unit_name(n, i + 1, i);
    else if (tok[0] == 'y' && i >= 1 && i < n)
      name = matrix_unit_name(n, i, i + 1);
    else
      throw Error(ErrorCode::parse_error, "bad path letter '" + tok + "'");
    acc = acc * AlgebraElement::basis(matrices, name);
    start = stop + 1;
  }
  return acc;
}

std::vector<std::pair<std::string, AlgebraElement>> QuiverPresentation::relations() const {
  std::vector<std::pair<std::string, AlgebraElement>> out;
  for (std::size_t i = 1; i < n; ++i) {
    std::string k = std::to_string(i), k1 = std::to_string(i + 1);
    out.emplace_back("y" + k + "*x" + k + " - e" + k, evaluate("y" + k + "*x" + k) - evaluate("e" + k));
    out.emplace_back("x" + k + "*y" + k + " - e" + k1, evaluate("x" + k + "*y" + k) - evaluate("e" + k1));
  }
  return out;
}

std::size_t QuiverPresentation::image_rank() const {
  // paths as (current vertex, word), extended by one arrow at a time
  std::vector<std::pair<std::size_t, std::string>> layer;
  for (std::size_t v = 1; v <= n; ++v) layer.emplace_back(v, "e" + std::to_string(v));
  std::vector<AlgebraElement> images;
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<std::pair<std::size_t, std::string>> next;
    for (const auto& [v, word] : layer) {
      images.push_back(evaluate(word));
      if (v < n) next.emplace_back(v + 1, "x" + std::to_string(v) + "*" + word);
      if (v > 1) next.emplace_back(v - 1, "y" + std::to_string(v - 1) + "*" + word);
    }
    layer = std::move(next);
  }
  Matrix m(matrices.field(), images.size(), matrices.dimension());
  for (std::size_t r = 0; r < images.size(); ++r)
    for (std::size_t c = 0; c < matrices.dimension(); ++c) m(r, c) = images[r][c];
  return rank(m);
}

}  // namespace cgrad
