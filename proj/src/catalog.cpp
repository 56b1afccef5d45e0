#include "cgrad/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace cgrad {

namespace {

void require_characteristic(const Field& field, std::size_t p) {
  if (field.characteristic() != static_cast<int>(p))
    throw Error(ErrorCode::bad_characteristic,
                "the truncated polynomial gradings need characteristic " + std::to_string(p) + ", got " + field.to_string());
}

LinearCategory product_of(const std::vector<LinearCategory>& parts) {
  if (parts.size() == 1) return parts[0];
  bool diagonal = std::all_of(parts.begin(), parts.end(),
                              [](const LinearCategory& c) { return c.tag().rfind("diagonal:", 0) == 0; });
  std::size_t total = 0;
  for (const auto& c : parts) total += c.dimension();
  if (diagonal) return make_diagonal(total, parts[0].field());
  std::map<std::string, int> seen;
  for (const auto& c : parts)
    for (const auto& m : c.basis()) ++seen[m.name];
  bool clash = std::any_of(seen.begin(), seen.end(), [](const auto& p) { return p.second > 1; });
  LinearCategory::Builder b(parts[0].field(), 1);
  std::string tag = "product:";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].object_count() != 1) throw Error(ErrorCode::invalid_argument, "product of algebras needs one-object categories");
    if (parts[i].field() != parts[0].field()) throw Error(ErrorCode::field_mismatch, "product over different fields");
    for (const auto& m : parts[i].basis()) b.add(clash ? m.name + "[" + std::to_string(i + 1) + "]" : m.name, 0, 0);
    tag += (i ? "," : "") + parts[i].tag();
  }
  Coeffs unit;
  std::size_t off = 0;
  for (const auto& c : parts) {
    for (std::size_t i = 0; i < c.dimension(); ++i)
      for (std::size_t j = 0; j < c.dimension(); ++j) {
        Coeffs v;
        for (const auto& [k, s] : c.compose(i, j)) v.emplace_back(k + off, s);
        if (!v.empty()) b.set_compose(i + off, j + off, v);
      }
    for (const auto& [k, s] : c.identity(0)) unit.emplace_back(k + off, s);
    off += c.dimension();
  }
  b.set_identity(0, unit);
  b.set_tag(tag);
  return b.build();
}

// Embedding of a free-product factor's elements into the free product.
GroupElement embed_factor(const Group& target, std::size_t offset, const GroupElement& a) {
  const Group src = a.group();
  GroupElement out = target.identity();
  switch (src.kind()) {
    case GroupKind::finite_abelian:
      return target.generator(offset).pow(a.code()[0]);
    case GroupKind::free:
      for (long letter : a.code()) out = out * target.generator(offset).pow(letter > 0 ? 1 : -1);
      return out;
    case GroupKind::free_product_cyclic:
      for (std::size_t i = 0; i + 1 < a.code().size(); i += 2)
        out = out * target.generator(offset + static_cast<std::size_t>(a.code()[i])).pow(a.code()[i + 1]);
      return out;
    default:
      throw Error(ErrorCode::unsupported_shape, "free product factor of unsupported kind");
  }
}

std::vector<long> free_product_orders(const Group& g) {
  switch (g.kind()) {
    case GroupKind::finite_abelian:
      if (g.cyclic_orders().size() == 1) return g.cyclic_orders();
      break;
    case GroupKind::free:
      if (g.rank() == 1) return {0};
      break;
    case GroupKind::free_product_cyclic:
      return g.cyclic_orders();
    default:
      break;
  }
  throw Error(ErrorCode::unsupported_shape, "free products are built only from cyclic factors, got " + g.name());
}

Group parse_group_name(const std::string& s) {
  if (s == "1") return Group::trivial();
  if (s == "C2xC2") return Group::finite_abelian({2, 2});
  if (s.size() > 1 && s[0] == 'C') return Group::cyclic(std::stol(s.substr(1)));
  throw Error(ErrorCode::invalid_argument, "unknown group " + s);
}

Grading renamed(Grading g, std::string name) {
  g.name = std::move(name);
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix algebras

Grading fine_matrix_grading(std::size_t n, const Field& field) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "fine grading needs n >= 2");
  Group g = Group::finite_abelian({static_cast<long>(n), static_cast<long>(n)});
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) degrees.push_back(g.abelian({static_cast<long>(i), static_cast<long>(j)}));
  return Grading::transported("fine C" + std::to_string(n) + " x C" + std::to_string(n) + " grading of M" + std::to_string(n),
                              make_matrix_xy(n, field), g, degrees, make_matrix_algebra(n, field),
                              matrix_xy_images(n, field));
}

Grading good_grading_from_map(GoodKind kind, std::size_t n, const Group& group, const std::vector<GroupElement>& m,
                              const Field& field) {
  if (n < 1 || m.size() + 1 != n) throw Error(ErrorCode::invalid_argument, "good grading needs n-1 images");
  for (const auto& x : m)
    if (!(x.group() == group)) throw Error(ErrorCode::group_mismatch, "good grading images outside the group");
  LinearCategory c = kind == GoodKind::matrix ? make_matrix_algebra(n, field) : make_triangular(n, field);
  auto below = [&](std::size_t r, std::size_t col) {  // degree of E_{r,col}, r >= col
    GroupElement d = group.identity();
    for (std::size_t i = col; i < r; ++i) d = m[i - 1] * d;
    return d;
  };
  std::vector<GroupElement> degrees;
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t col = 1; col <= n; ++col) {
      if (r >= col)
        degrees.push_back(below(r, col));
      else if (kind == GoodKind::matrix)
        degrees.push_back(below(col, r).inverse());
    }
  std::string name = std::string("good ") + group.name() + " grading of " + (kind == GoodKind::matrix ? "M" : "T") +
                     std::to_string(n);
  return Grading::on_basis(name, c, group, degrees);
}

Grading free_good_grading(GoodKind kind, std::size_t n, const Field& field) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "free good grading needs n >= 2");
  Group f = Group::free(n - 1);
  return good_grading_from_map(kind, n, f, f.generators(), field);
}

Grading cyclic_good_grading(std::size_t n, const Field& field) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "cyclic good grading needs n >= 2");
  Group c = Group::cyclic(static_cast<long>(n));
  return good_grading_from_map(GoodKind::matrix, n, c, std::vector<GroupElement>(n - 1, c.generator(0)), field);
}

// ---------------------------------------------------------------------------
// Group algebras and truncated polynomials

Grading group_algebra_grading(const Group& group, const Field& field) {
  return Grading::on_basis("natural " + group.name() + " grading of k" + group.name(), make_group_algebra(group, field),
                           group, group.elements());
}

Grading truncated_Z_grading(std::size_t p, const Field& field) {
  require_characteristic(field, p);
  Group z = Group::free(1);
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < p; ++i) degrees.push_back(z.generator(0).pow(static_cast<long>(i)));
  return Grading::on_basis("Z grading of k[x]/(x^" + std::to_string(p) + ")", make_truncated_poly(p, field), z, degrees);
}

Grading truncated_group_grading(std::size_t p, const Field& field) {
  require_characteristic(field, p);
  Group c = Group::cyclic(static_cast<long>(p));
  auto elems = c.elements();
  std::vector<Coeffs> coords;
  for (const auto& g : elems) {
    // (1 + x)^i by Pascal's rule
    long i = g.code().empty() ? 0 : g.code()[0];
    std::vector<long> row{1};
    for (long k = 0; k < i; ++k) {
      std::vector<long> next(row.size() + 1, 0);
      for (std::size_t j = 0; j < row.size(); ++j) {
        next[j] += row[j];
        next[j + 1] += row[j];
      }
      row = next;
    }
    Coeffs v;
    for (std::size_t j = 0; j < row.size() && j < p; ++j) {
      Scalar s = Scalar::from_int(field, row[j]);
      if (!s.is_zero()) v.emplace_back(j, s);
    }
    coords.push_back(std::move(v));
  }
  return Grading::transported("C" + std::to_string(p) + " grading of k[x]/(x^" + std::to_string(p) + ")",
                              make_group_algebra(c, field), c, elems, make_truncated_poly(p, field), coords);
}

// ---------------------------------------------------------------------------
// Diagonal algebras

Grading ergodic_diagonal_grading(const Group& group, const Field& field) {
  AlgebraMorphism phi = group_algebra_to_diagonal(group, field);
  return Grading::transported("ergodic " + group.name() + " grading of k^" + std::to_string(group.order()),
                              phi.source(), group, group.elements(), phi.target(), phi.images());
}

Grading trivial_grading(const LinearCategory& c, const Group& group) {
  Grading g = Grading::on_basis("trivial grading", c, group, std::vector<GroupElement>(c.dimension(), group.identity()));
  return g;
}

Grading free_product_grading(const std::vector<Grading>& parts) {
  if (parts.empty()) throw Error(ErrorCode::invalid_argument, "free product of no gradings");
  std::vector<std::size_t> nontrivial;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].category.object_count() != 1)
      throw Error(ErrorCode::invalid_argument, "free product grading needs algebras");
    if (!parts[i].group.is_trivial()) nontrivial.push_back(i);
  }
  Group group;
  std::vector<std::size_t> offset(parts.size(), 0);
  if (nontrivial.size() == 1) {
    group = parts[nontrivial[0]].group;
  } else if (nontrivial.size() > 1) {
    std::vector<long> orders;
    for (std::size_t i : nontrivial) {
      offset[i] = orders.size();
      auto o = free_product_orders(parts[i].group);
      orders.insert(orders.end(), o.begin(), o.end());
    }
    group = Group::free_product_cyclic(orders);
  }
  std::vector<LinearCategory> cats, ambients;
  std::vector<GroupElement> degrees;
  std::vector<Coeffs> coords;
  std::size_t off = 0;
  std::string name;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Grading& p = parts[i];
    cats.push_back(p.category);
    ambients.push_back(p.ambient);
    for (const auto& d : p.degrees) {
      if (p.group.is_trivial())
        degrees.push_back(group.identity());
      else if (nontrivial.size() == 1)
        degrees.push_back(d);
      else
        degrees.push_back(embed_factor(group, offset[i], d));
    }
    for (const auto& v : p.coordinates) {
      Coeffs w;
      for (const auto& [k, s] : v) w.emplace_back(k + off, s);
      coords.push_back(std::move(w));
    }
    off += p.ambient.dimension();
    name += (i ? " * " : "") + p.group.name();
  }
  return Grading::transported("free product grading by " + name, product_of(cats), group, degrees, product_of(ambients),
                              coords);
}

Grading free_product_grading(const Grading& a, const Grading& b) { return free_product_grading(std::vector<Grading>{a, b}); }

Grading specific_diagonal_grading(const std::vector<std::vector<std::size_t>>& partition,
                                  const std::vector<Group>& groups, const Field& field) {
  if (partition.size() != groups.size() || partition.empty())
    throw Error(ErrorCode::invalid_argument, "one group per block expected");
  std::vector<std::size_t> order;
  for (const auto& block : partition) order.insert(order.end(), block.begin(), block.end());
  std::size_t n = order.size();
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != i + 1) throw Error(ErrorCode::invalid_argument, "blocks must partition {1..n}");
  std::vector<Grading> parts;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (groups[i].order() != partition[i].size() || !is_abelian(groups[i]))
      throw Error(ErrorCode::invalid_argument, "each block needs an abelian group of its size");
    parts.push_back(ergodic_diagonal_grading(groups[i], field));
  }
  Grading g = free_product_grading(parts);
  std::string blocks;
  for (const auto& block : partition) {
    blocks += "{";
    for (std::size_t k = 0; k < block.size(); ++k) blocks += (k ? "," : "") + std::to_string(block[k]);
    blocks += "}";
  }
  std::string name = "specific " + g.group.name() + " grading of k^" + std::to_string(n) + " on " + blocks;
  bool identity = true;
  for (std::size_t i = 0; i < n; ++i) identity = identity && order[i] == i + 1;
  if (identity) return renamed(std::move(g), name);
  std::vector<Coeffs> coords;
  for (const auto& v : g.coordinates) {
    Coeffs w;
    for (const auto& [k, s] : v) w.emplace_back(order[k] - 1, s);
    std::sort(w.begin(), w.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    coords.push_back(std::move(w));
  }
  return Grading::transported(name, g.category, g.group, g.degrees, make_diagonal(n, field), coords);
}

// ---------------------------------------------------------------------------
// Tags and diagrams

AlgebraTag parse_tag(const std::string& tag) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(ErrorCode::unknown_tag, "unknown algebra tag '" + tag + "'");
    return std::stoul(s);
  };
  AlgebraTag t;
  std::string rest;
  if (tag.rfind("trunc:", 0) == 0) {
    t.kind = AlgebraTag::Kind::truncated;
    t.n = number(tag.substr(6));
    if (!is_prime(static_cast<std::int64_t>(t.n))) throw Error(ErrorCode::unknown_tag, "trunc needs a prime");
    t.text = "trunc:" + std::to_string(t.n);
    return t;
  }
  if (tag.rfind("Mp:", 0) == 0 || tag.rfind("Tn:", 0) == 0) {
    t.kind = tag[0] == 'M' ? AlgebraTag::Kind::matrix : AlgebraTag::Kind::triangular;
    t.n = number(tag.substr(3));
  } else if (!tag.empty() && (tag[0] == 'M' || tag[0] == 'T' || tag[0] == 'k')) {
    t.kind = tag[0] == 'M' ? AlgebraTag::Kind::matrix
             : tag[0] == 'T' ? AlgebraTag::Kind::triangular
                             : AlgebraTag::Kind::diagonal;
    t.n = number(tag.substr(1));
  } else {
    throw Error(ErrorCode::unknown_tag, "unknown algebra tag '" + tag + "'");
  }
  switch (t.kind) {
    case AlgebraTag::Kind::diagonal:
      if (t.n < 2 || t.n > 4) throw Error(ErrorCode::unknown_tag, "diagonal tags are k2, k3 and k4");
      t.text = "k" + std::to_string(t.n);
      break;
    case AlgebraTag::Kind::matrix:
      if (!is_prime(static_cast<std::int64_t>(t.n))) throw Error(ErrorCode::unknown_tag, "matrix tags need a prime size");
      t.text = t.n <= 3 ? "M" + std::to_string(t.n) : "Mp:" + std::to_string(t.n);
      break;
    case AlgebraTag::Kind::triangular:
      if (t.n < 2) throw Error(ErrorCode::unknown_tag, "triangular tags need n >= 2");
      t.text = "Tn:" + std::to_string(t.n);
      break;
    default:
      break;
  }
  return t;
}

Field default_field(const AlgebraTag& tag) {
  switch (tag.kind) {
    case AlgebraTag::Kind::diagonal:
      return Field::cyclotomic(12);
    case AlgebraTag::Kind::matrix:
      return tag.n == 2 ? Field::rational() : Field::cyclotomic(static_cast<int>(tag.n));
    case AlgebraTag::Kind::triangular:
      return Field::rational();
    default:
      return Field::prime(static_cast<int>(tag.n));
  }
}

GradingDiagram grading_diagram_for(const std::string& text, const Field& field) {
  AlgebraTag tag = parse_tag(text);
  GradingDiagram d;
  d.tag = tag.text;
  Group c2 = Group::cyclic(2), one = Group::trivial();
  switch (tag.kind) {
    case AlgebraTag::Kind::diagonal:
      if (tag.n == 2) {
        d.nodes = {specific_diagonal_grading({{1, 2}}, {c2}, field)};
      } else if (tag.n == 3) {
        d.nodes = {specific_diagonal_grading({{1, 2}, {3}}, {c2, one}, field),
                   specific_diagonal_grading({{1, 2, 3}}, {Group::cyclic(3)}, field)};
      } else {
        d.nodes = {specific_diagonal_grading({{1, 2}, {3, 4}}, {c2, c2}, field),
                   specific_diagonal_grading({{1, 2}, {3}, {4}}, {c2, one, one}, field),
                   specific_diagonal_grading({{1, 2, 3}, {4}}, {Group::cyclic(3), one}, field),
                   specific_diagonal_grading({{1, 2, 3, 4}}, {Group::cyclic(4)}, field),
                   specific_diagonal_grading({{1, 2, 3, 4}}, {Group::finite_abelian({2, 2})}, field)};
        d.arrows = {{0, 1, Homomorphism::from_images(d.nodes[0].group, d.nodes[1].group, std::vector<std::string>{"t", "1"})}};
      }
      break;
    case AlgebraTag::Kind::matrix: {
      std::size_t n = tag.n;
      d.nodes = {fine_matrix_grading(n, field), free_good_grading(GoodKind::matrix, n, field),
                 cyclic_good_grading(n, field)};
      d.arrows = {{0, 2, Homomorphism::from_images(d.nodes[0].group, d.nodes[2].group, std::vector<std::string>{"t", "1"})},
                  {1, 2, Homomorphism::from_images(d.nodes[1].group, d.nodes[2].group,
                                                   std::vector<std::string>(n - 1, "t"))}};
      break;
    }
    case AlgebraTag::Kind::triangular:
      d.nodes = {free_good_grading(GoodKind::triangular, tag.n, field)};
      break;
    case AlgebraTag::Kind::truncated:
      d.nodes = {truncated_Z_grading(tag.n, field), truncated_group_grading(tag.n, field)};
      break;
  }
  d.validate();
  return d;
}

GradingDiagram grading_diagram_for(const std::string& tag) { return grading_diagram_for(tag, default_field(parse_tag(tag))); }

// ---------------------------------------------------------------------------
// k^4 table

std::vector<TableRow> k4_table_report(const Field& field) {
  Group one = Group::trivial(), c2 = Group::cyclic(2);
  std::vector<Grading> gradings{
      specific_diagonal_grading({{1}, {2}, {3}, {4}}, {one, one, one, one}, field),
      specific_diagonal_grading({{1, 2}, {3, 4}}, {c2, c2}, field),
      specific_diagonal_grading({{1, 2, 3}, {4}}, {Group::cyclic(3), one}, field),
      specific_diagonal_grading({{1, 2}, {3}, {4}}, {c2, one, one}, field),
      specific_diagonal_grading({{1, 2, 3, 4}}, {Group::cyclic(4)}, field),
      specific_diagonal_grading({{1, 2, 3, 4}}, {Group::finite_abelian({2, 2})}, field)};
  std::vector<TableRow> rows;
  for (const auto& g : gradings) {
    if (auto v = verify_grading(g)) throw Error(ErrorCode::check_failure, g.name + ": " + v->message);
    TableRow row;
    row.group = g.group.name();
    row.trivial_dimension = trivial_component_dimension(g);
    for (const auto& [d, n] : component_dimensions(g))
      if (!d.is_identity()) row.other_dimensions.push_back(n);
    std::sort(row.other_dimensions.rbegin(), row.other_dimensions.rend());
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Common quotient of the fine and good gradings

bool fine_quotient_is_good(const Grading& fine, const std::vector<GroupElement>& subgroup) {
  auto members = closure(fine.group, subgroup);
  std::set<GroupElement> n(members.begin(), members.end());
  std::size_t d = fine.ambient.dimension();
  Matrix m(fine.ambient.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [j, s] : fine.coordinates[i]) m(i, j) = s;
  auto inv = inverse(m);
  if (!inv) throw Error(ErrorCode::not_a_basis, "homogeneous vectors do not form a basis");
  for (std::size_t j = 0; j < d; ++j) {
    std::optional<GroupElement> first;
    for (std::size_t i = 0; i < d; ++i) {
      if ((*inv)(j, i).is_zero()) continue;
      if (!first)
        first = fine.degrees[i];
      else if (!n.count(fine.degrees[i] * first->inverse()))
        return false;
    }
  }
  return true;
}

CommonQuotientCertificate verify_common_quotient(std::size_t n, const Field& field) {
  Grading fine = fine_matrix_grading(n, field);
  Grading good = cyclic_good_grading(n, field);
  Grading free = free_good_grading(GoodKind::matrix, n, field);
  const Group& g = fine.group;
  auto fine_to_good = Homomorphism::from_images(g, good.group, std::vector<std::string>{"t", "1"});
  auto free_to_good = Homomorphism::from_images(free.group, good.group, std::vector<std::string>(n - 1, "t"));
  GroupElement n0 = g.parse("(1,t)");
  if (!fine_quotient_is_good(fine, {n0}) || !check_quotient_arrow(fine, good, fine_to_good))
    throw Error(ErrorCode::certificate_failure, "fine grading modulo 1 x C" + std::to_string(n) + " is not the good grading");
  if (!check_quotient_arrow(free, good, free_to_good))
    throw Error(ErrorCode::certificate_failure, "free good grading does not reach the good C" + std::to_string(n) + " grading");
  CommonQuotientCertificate cert;
  cert.n = n;
  cert.minimal_subgroup = "1 x C" + std::to_string(n);
  std::set<std::vector<GroupElement>> subgroups;
  auto elems = g.elements();
  for (const auto& a : elems)
    for (const auto& b : elems) {
      auto s = closure(g, {a, b});
      std::sort(s.begin(), s.end());
      subgroups.insert(s);
    }
  for (const auto& s : subgroups) {
    ++cert.subgroups_checked;
    if (!fine_quotient_is_good(fine, s)) continue;
    ++cert.good_subgroups;
    if (!std::binary_search(s.begin(), s.end(), n0))
      throw Error(ErrorCode::certificate_failure, "a subgroup without 1 x C" + std::to_string(n) + " has a good quotient");
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct Recipe {
  std::string name;
  std::string description;
  std::function<Field()> field;
  std::function<Grading(const Field&)> build;
};

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> all = [] {
    std::vector<Recipe> r;
    auto q = [] { return Field::rational(); };
    auto cyc = [](int m) { return [m] { return Field::cyclotomic(m); }; };
    auto fp = [](int p) { return [p] { return Field::prime(p); }; };
    for (std::size_t n : {2u, 3u, 4u}) {
      auto f = n == 2 ? std::function<Field()>(q) : std::function<Field()>(cyc(static_cast<int>(n)));
      r.push_back({"M" + std::to_string(n) + "/fine", "fine C_n x C_n grading of matrices", f,
                   [n](const Field& k) { return fine_matrix_grading(n, k); }});
    }
    for (std::size_t n : {2u, 3u}) {
      r.push_back({"M" + std::to_string(n) + "/free", "good grading by the free group", q,
                   [n](const Field& k) { return free_good_grading(GoodKind::matrix, n, k); }});
      r.push_back({"M" + std::to_string(n) + "/cyclic", "good cyclic grading", q,
                   [n](const Field& k) { return cyclic_good_grading(n, k); }});
    }
    for (std::size_t n : {2u, 3u, 4u})
      r.push_back({"T" + std::to_string(n) + "/free", "good grading of triangular matrices by the free group", q,
                   [n](const Field& k) { return free_good_grading(GoodKind::triangular, n, k); }});
    for (std::string name : {"C2", "C3", "C4", "C2xC2", "C5", "C6"}) {
      int m = name == "C5" ? 5 : 12;
      r.push_back({"k" + name, "natural grading of the group algebra", cyc(m),
                   [name](const Field& k) { return group_algebra_grading(parse_group_name(name), k); }});
    }
    for (int p : {2, 3, 5}) {
      auto sp = static_cast<std::size_t>(p);
      r.push_back({"trunc" + std::to_string(p) + "/Z", "Z grading of a truncated polynomial algebra", fp(p),
                   [sp](const Field& k) { return truncated_Z_grading(sp, k); }});
      r.push_back({"trunc" + std::to_string(p) + "/C" + std::to_string(p),
                   "cyclic grading of a truncated polynomial algebra through 1 + x", fp(p),
                   [sp](const Field& k) { return truncated_group_grading(sp, k); }});
    }
    Group c2 = Group::cyclic(2), c3 = Group::cyclic(3), one = Group::trivial();
    auto specific = [](std::vector<std::vector<std::size_t>> blocks, std::vector<Group> groups) {
      return [blocks, groups](const Field& k) { return specific_diagonal_grading(blocks, groups, k); };
    };
    r.push_back({"k2/C2", "ergodic grading of k^2", cyc(12), specific({{1, 2}}, {c2})});
    r.push_back({"k3/C2", "specific grading of k^3", cyc(12), specific({{1, 2}, {3}}, {c2, one})});
    r.push_back({"k3/C3", "ergodic grading of k^3", cyc(12), specific({{1, 2, 3}}, {c3})});
    r.push_back({"k4/C2*C2", "specific grading of k^4", cyc(12), specific({{1, 2}, {3, 4}}, {c2, c2})});
    r.push_back({"k4/C2", "specific grading of k^4", cyc(12), specific({{1, 2}, {3}, {4}}, {c2, one, one})});
    r.push_back({"k4/C3", "specific grading of k^4", cyc(12), specific({{1, 2, 3}, {4}}, {c3, one})});
    r.push_back({"k4/C4", "ergodic grading of k^4", cyc(12), specific({{1, 2, 3, 4}}, {Group::cyclic(4)})});
    r.push_back({"k4/C2xC2", "ergodic grading of k^4", cyc(12),
                 specific({{1, 2, 3, 4}}, {Group::finite_abelian({2, 2})})});
    r.push_back({"k5/C2*C3", "free product of ergodic gradings of k^2 and k^3", cyc(12),
                 [](const Field& k) {
                   return free_product_grading(ergodic_diagonal_grading(Group::cyclic(2), k),
                                               ergodic_diagonal_grading(Group::cyclic(3), k));
                 }});
    return r;
  }();
  return all;
}

const Recipe& recipe(const std::string& name) {
  for (const auto& r : recipes())
    if (r.name == name) return r;
  throw Error(ErrorCode::unknown_tag, "no catalog entry named '" + name + "'");
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& r : recipes()) out.push_back(r.name);
  return out;
}

CatalogEntry catalog_entry(const std::string& name, const Field& field) {
  const Recipe& r = recipe(name);
  return {r.name, r.description, renamed(r.build(field), r.name)};
}

CatalogEntry catalog_entry(const std::string& name) { return catalog_entry(name, recipe(name).field()); }

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& r : recipes()) out.push_back(catalog_entry(r.name));
  return out;
}

}  // namespace cgrad
