#include "cgrad/grading.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace cgrad {

namespace {

std::vector<Coeffs> standard_coordinates(const LinearCategory& c) {
  std::vector<Coeffs> out;
  for (std::size_t i = 0; i < c.dimension(); ++i) out.push_back({{i, Scalar::one(c.field())}});
  return out;
}

std::size_t rank_of(const LinearCategory& ambient, const std::vector<const Coeffs*>& rows) {
  if (rows.empty()) return 0;
  Matrix m(ambient.field(), rows.size(), ambient.dimension());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [j, s] : *rows[r]) m(r, j) = s;
  return rank(m);
}

bool same_ambient(const LinearCategory& a, const LinearCategory& b) {
  return a == b || (a.tag() == b.tag() && a.dimension() == b.dimension() && a.field() == b.field() &&
                    a.object_count() == b.object_count());
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out.empty() ? "-" : out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Grading Grading::on_basis(std::string name, LinearCategory c, Group g, std::vector<GroupElement> degrees) {
  if (degrees.size() != c.dimension())
    throw Error(ErrorCode::invalid_argument, "one degree per basis morphism expected");
  for (const auto& d : degrees)
    if (!(d.group() == g)) throw Error(ErrorCode::group_mismatch, "degree " + d.to_string() + " outside the grading group");
  Grading out;
  out.name = std::move(name);
  out.coordinates = standard_coordinates(c);
  out.ambient = c;
  out.category = std::move(c);
  out.group = std::move(g);
  out.degrees = std::move(degrees);
  return out;
}

Grading Grading::on_basis(std::string name, LinearCategory c, Group g, const std::vector<std::string>& degrees) {
  std::vector<GroupElement> parsed;
  for (const auto& d : degrees) parsed.push_back(g.parse(d));
  return on_basis(std::move(name), std::move(c), std::move(g), std::move(parsed));
}

Grading Grading::transported(std::string name, LinearCategory homogeneous, Group g, std::vector<GroupElement> degrees,
                             LinearCategory ambient, std::vector<Coeffs> coordinates) {
  Grading out = on_basis(std::move(name), std::move(homogeneous), std::move(g), std::move(degrees));
  if (out.category.dimension() != ambient.dimension())
    throw Error(ErrorCode::not_a_basis, "homogeneous basis has the wrong size");
  AlgebraMorphism iso(out.category, ambient, coordinates);
  if (!iso.is_injective()) throw Error(ErrorCode::not_a_basis, "homogeneous vectors are linearly dependent");
  out.ambient = std::move(ambient);
  out.coordinates = std::move(coordinates);
  return out;
}

const GroupElement& Grading::degree(const std::string& basis_name) const {
  return degrees.at(category.index(basis_name));
}

// ---------------------------------------------------------------------------
// Axiom, support, components

std::optional<GradingViolation> verify_grading(const Grading& g) {
  const LinearCategory& c = g.category;
  if (g.degrees.size() != c.dimension())
    return GradingViolation{"", "", "", "degree list does not match the basis"};
  for (std::size_t f = 0; f < c.dimension(); ++f)
    for (std::size_t h : c.out_of(c.basis(f).target)) {
      GroupElement expected = g.degrees[h] * g.degrees[f];
      for (const auto& [k, s] : c.compose(h, f)) {
        (void)s;
        if (g.degrees[k] != expected)
          return GradingViolation{c.basis(h).name, c.basis(f).name, c.basis(k).name,
                                  c.basis(h).name + " o " + c.basis(f).name + " has a component on " +
                                      c.basis(k).name + " of degree " + g.degrees[k].to_string() + ", expected " +
                                      expected.to_string()};
      }
    }
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (const auto& [k, s] : c.identity(x)) {
      (void)s;
      if (!g.degrees[k].is_identity())
        return GradingViolation{"", "", c.basis(k).name,
                                "identity of object " + c.object_names()[x] + " has a component on " +
                                    c.basis(k).name + " of degree " + g.degrees[k].to_string()};
    }
  return std::nullopt;
}

std::vector<GroupElement> support(const Grading& g) {
  std::vector<GroupElement> out;
  for (const auto& d : g.degrees)
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  return out;
}

std::vector<std::pair<GroupElement, std::size_t>> component_dimensions(const Grading& g) {
  std::vector<std::pair<GroupElement, std::size_t>> out;
  for (const auto& d : g.degrees) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == d; });
    if (it == out.end())
      out.emplace_back(d, 1);
    else
      ++it->second;
  }
  return out;
}

std::size_t trivial_component_dimension(const Grading& g) {
  return static_cast<std::size_t>(
      std::count_if(g.degrees.begin(), g.degrees.end(), [](const GroupElement& d) { return d.is_identity(); }));
}

// ---------------------------------------------------------------------------
// Connectedness

bool is_walk_connected(const LinearCategory& c) {
  std::size_t n = c.object_count();
  if (n <= 1) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& m : c.basis()) {
    adj[m.source].push_back(m.target);
    adj[m.target].push_back(m.source);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == n;
}

Tri is_connected(const Grading& g) {
  const LinearCategory& c = g.category;
  if (c.object_count() <= 1) return generates(g.group, support(g));
  if (!is_walk_connected(c)) return Tri::no;
  // potentials: degree of a tree walk from object 0
  std::size_t n = c.object_count();
  std::vector<std::optional<GroupElement>> p(n);
  p[0] = g.group.identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t f = 0; f < c.dimension(); ++f) {
      std::size_t x = c.basis(f).source, y = c.basis(f).target;
      if (p[x] && !p[y]) {
        p[y] = g.degrees[f] * *p[x];
        grew = true;
      } else if (p[y] && !p[x]) {
        p[x] = g.degrees[f].inverse() * *p[y];
        grew = true;
      }
    }
  }
  std::vector<GroupElement> loops;
  for (std::size_t f = 0; f < c.dimension(); ++f) {
    GroupElement l = p[c.basis(f).target]->inverse() * g.degrees[f] * *p[c.basis(f).source];
    if (std::find(loops.begin(), loops.end(), l) == loops.end()) loops.push_back(l);
  }
  return generates(g.group, loops);
}

// ---------------------------------------------------------------------------
// Quotients and walks

Grading quotient_grading(const Grading& g, const Homomorphism& phi) {
  if (!(phi.source() == g.group)) throw Error(ErrorCode::group_mismatch, "quotient map does not start at the grading group");
  if (is_surjective(phi) == Tri::no)
    throw Error(ErrorCode::not_surjective, "quotient map onto " + phi.target().name() + " is not surjective");
  Grading out = g;
  out.name = g.name + " / " + phi.target().name();
  out.group = phi.target();
  for (auto& d : out.degrees) d = phi(d);
  return out;
}

GroupElement walk_degree(const Grading& g, const Walk& w) {
  GroupElement acc = g.group.identity();
  std::optional<std::size_t> at;
  for (const auto& step : w) {
    std::size_t f = g.category.index(step.morphism);
    if (step.sign != 1 && step.sign != -1) throw Error(ErrorCode::invalid_argument, "walk sign must be +1 or -1");
    const auto& m = g.category.basis(f);
    std::size_t from = step.sign == 1 ? m.source : m.target;
    std::size_t to = step.sign == 1 ? m.target : m.source;
    if (at && *at != from) throw Error(ErrorCode::broken_chain, "walk breaks before " + step.morphism);
    at = to;
    acc = (step.sign == 1 ? g.degrees[f] : g.degrees[f].inverse()) * acc;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Discriminators

bool has_invertible_nontrivial_homogeneous(const Grading& g, std::uint64_t seed) {
  const LinearCategory& c = g.category;
  if (c.object_count() != 1) throw Error(ErrorCode::invalid_argument, "invertibility needs a one-object category");
  std::map<GroupElement, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < c.dimension(); ++i)
    if (!g.degrees[i].is_identity()) components[g.degrees[i]].push_back(i);
  for (const auto& [d, idx] : components)
    for (std::size_t i : idx)
      if (is_invertible(AlgebraElement::basis(c, i))) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (const auto& [d, idx] : components) {
    if (idx.size() < 2) continue;
    AlgebraElement all(c);
    for (std::size_t i : idx) all = all + AlgebraElement::basis(c, i);
    if (is_invertible(all)) return true;
    for (int trial = 0; trial < 8; ++trial) {
      AlgebraElement r(c);
      for (std::size_t i : idx) r = r + AlgebraElement::basis(c, i) * Scalar::from_int(c.field(), coef(rng));
      if (is_invertible(r)) return true;
    }
  }
  return false;
}

std::string DistinguishReport::to_string() const {
  if (!distinguished) return "indistinguishable by these invariants";
  return invariant + ": " + first + " vs " + second;
}

DistinguishReport distinguish(const Grading& a, const Grading& b) {
  if (!same_ambient(a.ambient, b.ambient))
    throw Error(ErrorCode::invalid_argument, "gradings of different categories");
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> invariants;
  invariants.push_back({"trivial component dimension",
                        {std::to_string(trivial_component_dimension(a)), std::to_string(trivial_component_dimension(b))}});
  auto profile = [](const Grading& g) {
    std::vector<std::size_t> dims;
    for (const auto& [d, n] : component_dimensions(g)) dims.push_back(n);
    std::sort(dims.begin(), dims.end());
    return join_sizes(dims);
  };
  invariants.push_back({"component dimensions", {profile(a), profile(b)}});
  if (a.category.object_count() == 1 && b.category.object_count() == 1) {
    auto flag = [](const Grading& g) { return has_invertible_nontrivial_homogeneous(g) ? "true" : "false"; };
    invariants.push_back({"invertible homogeneous element of nontrivial degree", {flag(a), flag(b)}});
  }
  invariants.push_back({"group isomorphism class", {isomorphism_class(a.group), isomorphism_class(b.group)}});
  for (const auto& [name, values] : invariants)
    if (values.first != values.second) return {true, name, values.first, values.second};
  return {};
}

bool check_quotient_arrow(const Grading& source, const Grading& target, const Homomorphism& phi) {
  if (!same_ambient(source.ambient, target.ambient))
    throw Error(ErrorCode::invalid_argument, "quotient arrow between gradings of different categories");
  if (!(phi.source() == source.group) || !(phi.target() == target.group))
    throw Error(ErrorCode::group_mismatch, "quotient map does not match the grading groups");
  if (is_surjective(phi) == Tri::no) throw Error(ErrorCode::not_surjective, "quotient map is not surjective");
  std::vector<GroupElement> image;
  for (const auto& d : source.degrees) image.push_back(phi(d));
  std::vector<GroupElement> degrees = support(target);
  for (const auto& d : image)
    if (std::find(degrees.begin(), degrees.end(), d) == degrees.end()) degrees.push_back(d);
  for (const auto& h : degrees) {
    std::vector<const Coeffs*> v, w, both;
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] == h) v.push_back(&source.coordinates[i]);
    for (std::size_t i = 0; i < target.degrees.size(); ++i)
      if (target.degrees[i] == h) w.push_back(&target.coordinates[i]);
    both = v;
    both.insert(both.end(), w.begin(), w.end());
    std::size_t rv = rank_of(source.ambient, v), rw = rank_of(source.ambient, w);
    if (rv != rw || rank_of(source.ambient, both) != rv) return false;
  }
  return true;
}

void GradingDiagram::validate() const {
  for (const auto& a : arrows) {
    if (a.source >= nodes.size() || a.target >= nodes.size())
      throw Error(ErrorCode::invalid_argument, "grading arrow endpoint out of range");
    if (!check_quotient_arrow(nodes[a.source], nodes[a.target], a.map))
      throw Error(ErrorCode::check_failure,
                  nodes[a.target].name + " is not the quotient of " + nodes[a.source].name + " along the given map");
  }
}

GroupDiagram GradingDiagram::groups() const {
  GroupDiagram d;
  for (const auto& n : nodes) {
    d.nodes.push_back(n.group);
    d.labels.push_back(n.name);
  }
  for (const auto& a : arrows) d.arrows.push_back({a.source, a.target, a.map});
  return d;
}

}  // namespace cgrad
