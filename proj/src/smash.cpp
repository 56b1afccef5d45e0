#include "cgrad/smash.hpp"

#include <algorithm>
#include <set>

#include "cgrad/catalog.hpp"
#include "cgrad/error.hpp"

namespace cgrad {

namespace {

std::string morphism_name(const std::string& base, const GroupElement& g) { return base + "@" + g.to_string(); }

}  // namespace

std::string SmashCategory::label(std::size_t object) const {
  const auto& o = objects.at(object);
  return "(" + base.category.object_names()[o.base] + ", " + o.element.to_string() + ")";
}

std::optional<std::size_t> SmashCategory::find(std::size_t base_object, const GroupElement& g) const {
  auto it = index.find({base_object, g});
  if (it == index.end()) return std::nullopt;
  return it->second;
}

SmashCategory smash_product(const Grading& g, std::optional<std::size_t> radius) {
  const Group& group = g.group;
  if (!group.is_finite() && !radius)
    throw Error(ErrorCode::infinite_without_radius, "smash product over " + group.name() + " needs a radius");
  std::vector<GroupElement> elements = radius ? group.ball(*radius) : group.elements();
  if (radius)
    std::stable_sort(elements.begin(), elements.end(), [&](const GroupElement& a, const GroupElement& b) {
      return group.word_length(a) < group.word_length(b);
    });

  const LinearCategory& c = g.category;
  SmashCategory s;
  s.base = g;
  s.radius = radius;
  std::vector<std::string> names;
  for (std::size_t b = 0; b < c.object_count(); ++b)
    for (const auto& e : elements) {
      s.index[{b, e}] = s.objects.size();
      s.objects.push_back({b, e});
    }
  for (std::size_t o = 0; o < s.objects.size(); ++o) names.push_back(s.label(o));

  LinearCategory::Builder builder(c.field(), names);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> copy;  // (object, base morphism) -> morphism
  std::vector<std::vector<std::size_t>> out(s.objects.size());
  std::vector<std::size_t> target_of;
  for (std::size_t o = 0; o < s.objects.size(); ++o) {
    const auto& [b, e] = s.objects[o];
    for (std::size_t f : c.out_of(b)) {
      auto t = s.find(c.basis(f).target, e * g.degrees[f].inverse());
      if (!t) continue;
      std::size_t m = builder.add(morphism_name(c.basis(f).name, e), o, *t);
      copy[{o, f}] = m;
      out[o].push_back(m);
      s.covering.push_back(f);
      target_of.push_back(*t);
    }
  }

  auto lift = [&](std::size_t o, const Coeffs& v) {
    Coeffs r;
    for (const auto& [f, x] : v) {
      auto it = copy.find({o, f});
      if (it == copy.end())
        throw Error(ErrorCode::check_failure, "composite leaves the smash at " + s.label(o) + ": grading is not valid");
      r.emplace_back(it->second, x);
    }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  };

  for (std::size_t o = 0; o < s.objects.size(); ++o) {
    builder.set_identity(o, lift(o, c.identity(s.objects[o].base)));
    for (std::size_t m1 : out[o])
      for (std::size_t m2 : out[target_of[m1]]) {
        const Coeffs& v = c.compose(s.covering[m2], s.covering[m1]);
        if (!v.empty()) builder.set_compose(m2, m1, lift(o, v));
      }
  }
  builder.set_tag("smash:" + c.tag());
  s.realization = builder.build();

  s.interior.assign(s.objects.size(), true);
  if (radius) {
    for (std::size_t o = 0; o < s.objects.size(); ++o) {
      const auto& [b, e] = s.objects[o];
      for (std::size_t f = 0; f < c.dimension() && s.interior[o]; ++f) {
        const auto& bm = c.basis(f);
        if (bm.source == b && !s.find(bm.target, e * g.degrees[f].inverse())) s.interior[o] = false;
        if (bm.target == b && !s.find(bm.source, e * g.degrees[f])) s.interior[o] = false;
      }
    }
  }
  return s;
}

CoveringReport verify_covering(const SmashCategory& s) {
  const LinearCategory& c = s.base.category;
  const LinearCategory& r = s.realization;
  std::vector<std::vector<std::size_t>> in(r.object_count()), base_in(c.object_count());
  for (std::size_t m = 0; m < r.dimension(); ++m) in[r.basis(m).target].push_back(m);
  for (std::size_t f = 0; f < c.dimension(); ++f) base_in[c.basis(f).target].push_back(f);

  CoveringReport report;
  report.scope = s.full() ? "full" : "interior-certified at radius " + std::to_string(*s.radius);
  for (std::size_t o = 0; o < s.objects.size(); ++o) {
    if (!s.interior[o]) {
      report.boundary.push_back(s.label(o));
      continue;
    }
    std::size_t b = s.objects[o].base;
    auto image = [&](const std::vector<std::size_t>& ms) {
      std::set<std::size_t> out;
      for (std::size_t m : ms) out.insert(s.covering[m]);
      return out;
    };
    const auto& outs = r.out_of(o);
    std::set<std::size_t> out_image = image(outs), in_image = image(in[o]);
    std::set<std::size_t> base_out(c.out_of(b).begin(), c.out_of(b).end());
    std::set<std::size_t> base_ins(base_in[b].begin(), base_in[b].end());
    StarRow row{s.label(o), outs.size(), in[o].size(), base_out.size(), base_ins.size()};
    if (out_image.size() != outs.size() || in_image.size() != in[o].size() || out_image != base_out ||
        in_image != base_ins)
      throw Error(ErrorCode::star_mismatch, "star at " + row.object + " has dimensions " +
                                                std::to_string(row.out_dimension) + "+" +
                                                std::to_string(row.in_dimension) + ", base star " +
                                                std::to_string(row.base_out_dimension) + "+" +
                                                std::to_string(row.base_in_dimension));
    report.stars.push_back(row);
    ++report.checked;
  }
  return report;
}

bool is_connected_category(const LinearCategory& c) { return is_walk_connected(c); }

bool is_connected_category(const SmashCategory& s) { return is_walk_connected(s.realization); }

bool verify_galois(const SmashCategory& s) {
  if (!s.full()) throw Error(ErrorCode::invalid_argument, "Galois check needs the full smash of a finite group");
  const Group& group = s.base.group;
  const LinearCategory& r = s.realization;
  const LinearCategory& c = s.base.category;
  auto elements = group.elements();

  auto act_object = [&](const GroupElement& u, std::size_t o) {
    auto t = s.find(s.objects[o].base, u * s.objects[o].element);
    if (!t) throw Error(ErrorCode::action_failure, "translation leaves the objects at " + s.label(o));
    return *t;
  };
  auto act_morphism = [&](const GroupElement& u, std::size_t m) {
    std::size_t o = r.basis(m).source;
    auto t = r.find(morphism_name(c.basis(s.covering[m]).name, u * s.objects[o].element));
    if (!t) throw Error(ErrorCode::action_failure, "no translate of " + r.basis(m).name + " by " + u.to_string());
    return *t;
  };

  for (const auto& u : elements) {
    std::vector<bool> hit(s.objects.size(), false);
    for (std::size_t o = 0; o < s.objects.size(); ++o) {
      std::size_t t = act_object(u, o);
      if (hit[t]) throw Error(ErrorCode::action_failure, "translation by " + u.to_string() + " is not a bijection");
      hit[t] = true;
      if (!u.is_identity() && t == o)
        throw Error(ErrorCode::action_failure, u.to_string() + " fixes " + s.label(o));
    }
    for (std::size_t m = 0; m < r.dimension(); ++m) {
      std::size_t a = act_morphism(u, m);
      if (r.basis(a).target != act_object(u, r.basis(m).target) || s.covering[a] != s.covering[m])
        throw Error(ErrorCode::action_failure, "translation by " + u.to_string() + " moves " + r.basis(m).name +
                                                   " off its fibre");
    }
  }
  for (const auto& u : group.generators()) {
    auto act_coeffs = [&](const Coeffs& v) {
      Coeffs out;
      for (const auto& [m, x] : v) out.emplace_back(act_morphism(u, m), x);
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return out;
    };
    for (std::size_t o = 0; o < s.objects.size(); ++o)
      if (act_coeffs(r.identity(o)) != r.identity(act_object(u, o)))
        throw Error(ErrorCode::action_failure, "translation does not preserve the identity of " + s.label(o));
    for (std::size_t m1 = 0; m1 < r.dimension(); ++m1)
      for (std::size_t m2 : r.out_of(r.basis(m1).target))
        if (act_coeffs(r.compose(m2, m1)) != r.compose(act_morphism(u, m2), act_morphism(u, m1)))
          throw Error(ErrorCode::action_failure, "translation by " + u.to_string() + " does not preserve " +
                                                     r.basis(m2).name + " o " + r.basis(m1).name);
  }
  for (std::size_t b = 0; b < c.object_count(); ++b) {
    std::set<std::size_t> orbit;
    std::size_t start = *s.find(b, group.identity());
    for (const auto& u : elements) orbit.insert(act_object(u, start));
    if (orbit.size() != elements.size())
      throw Error(ErrorCode::action_failure, "action is not transitive on the fibre over " + c.object_names()[b]);
  }
  if (!is_connected_category(s))
    throw Error(ErrorCode::not_connected, "smash over " + s.base.name + " is not connected");
  return true;
}

bool check_smash_connectedness_equivalence(const Grading& g) {
  if (!g.group.is_finite()) throw Error(ErrorCode::invalid_argument, "needs a finite group");
  bool graded = is_connected(g) == Tri::yes;
  bool smashed = is_connected_category(smash_product(g));
  if (graded != smashed)
    throw Error(ErrorCode::mismatch_bug, g.name + ": grading connected " + std::to_string(graded) +
                                             " but smash connected " + std::to_string(smashed));
  return graded;
}

SchurianCertificate certify_schurian_simply_connected(const LinearCategory& c) {
  const auto& names = c.object_names();
  SchurianCertificate cert;
  cert.objects = c.object_count();
  cert.morphisms = c.dimension();
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (std::size_t y = 0; y < c.object_count(); ++y)
      if (c.hom(x, y).size() != 1)
        throw Error(ErrorCode::shape_mismatch, "hom(" + names[x] + ", " + names[y] + ") has dimension " +
                                                   std::to_string(c.hom(x, y).size()));
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (std::size_t y = 0; y < c.object_count(); ++y)
      for (std::size_t z = 0; z < c.object_count(); ++z) {
        std::size_t f = c.hom(x, y)[0], g = c.hom(y, z)[0];
        if (c.compose(g, f).empty())
          throw Error(ErrorCode::shape_mismatch,
                      "zero composite " + c.basis(g).name + " o " + c.basis(f).name);
        ++cert.compositions;
      }
  return cert;
}

RigidityCertificate certify_smash_rigidity(const SmashCategory& s) {
  const LinearCategory& r = s.realization;
  RigidityCertificate cert;
  cert.radius = s.radius.value_or(0);
  cert.objects = s.objects.size();
  cert.scope = s.full() ? "full" : "interior-certified at radius " + std::to_string(cert.radius);

  // objects off the boundary word-length layer
  std::vector<bool> inner(s.objects.size(), true);
  if (s.radius)
    for (std::size_t o = 0; o < s.objects.size(); ++o)
      inner[o] = s.base.group.word_length(s.objects[o].element) < *s.radius;

  // vertices: primitive idempotents of inner endomorphism algebras
  std::map<std::size_t, std::size_t> vertex_of;  // idempotent morphism -> vertex
  std::vector<std::size_t> idempotent;
  for (std::size_t o = 0; o < s.objects.size(); ++o) {
    if (!inner[o]) continue;
    ++cert.interior_objects;
    const auto& end = r.hom(o, o);
    Coeffs sum;
    for (std::size_t e : end) {
      for (std::size_t e2 : end) {
        Coeffs expected;
        if (e == e2) expected.emplace_back(e, Scalar::one(r.field()));
        if (r.compose(e2, e) != expected)
          throw Error(ErrorCode::check_failure, "endomorphisms of " + s.label(o) + " are not orthogonal idempotents: " +
                                                    r.basis(e2).name + " o " + r.basis(e).name);
      }
      sum.emplace_back(e, Scalar::one(r.field()));
      vertex_of[e] = idempotent.size();
      idempotent.push_back(e);
    }
    if (sum != r.identity(o))
      throw Error(ErrorCode::check_failure, "idempotents at " + s.label(o) + " do not sum to the identity");
  }
  cert.idempotents = idempotent.size();

  auto side = [&](std::size_t object, auto nonzero) -> std::size_t {
    std::optional<std::size_t> found;
    for (std::size_t e : r.hom(object, object))
      if (nonzero(e)) {
        if (found) throw Error(ErrorCode::check_failure, "morphism meets two idempotents at " + s.label(object));
        found = e;
      }
    if (!found) throw Error(ErrorCode::check_failure, "morphism meets no idempotent at " + s.label(object));
    return vertex_of.at(*found);
  };

  struct Edge {
    std::size_t from, to, morphism;
  };
  std::vector<Edge> edges;
  std::map<std::size_t, std::size_t> edge_of;  // morphism -> edge
  std::vector<std::vector<std::size_t>> leaving(idempotent.size());
  for (std::size_t m = 0; m < r.dimension(); ++m) {
    std::size_t x = r.basis(m).source, y = r.basis(m).target;
    if (x == y || !inner[x] || !inner[y]) continue;
    if (r.hom(x, y).size() > 1)
      throw Error(ErrorCode::check_failure, "hom(" + s.label(x) + ", " + s.label(y) + ") has dimension " +
                                                std::to_string(r.hom(x, y).size()));
    std::size_t u = side(x, [&](std::size_t e) { return !r.compose(m, e).empty(); });
    std::size_t v = side(y, [&](std::size_t e) { return !r.compose(e, m).empty(); });
    edge_of[m] = edges.size();
    leaving[u].push_back(edges.size());
    edges.push_back({u, v, m});
  }
  cert.edges = edges.size();
  cert.vacuous = edges.empty();

  // spanning forest: its edges fix the degrees up to a choice of potentials
  std::vector<std::vector<std::size_t>> touching(idempotent.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    touching[edges[i].from].push_back(i);
    touching[edges[i].to].push_back(i);
  }
  std::vector<bool> known(edges.size(), false), seen(idempotent.size(), false);
  for (std::size_t root = 0; root < idempotent.size(); ++root) {
    if (seen[root]) continue;
    ++cert.components;
    std::vector<std::size_t> queue{root};
    seen[root] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (std::size_t i : touching[queue[k]]) {
        std::size_t w = edges[i].from == queue[k] ? edges[i].to : edges[i].from;
        if (seen[w]) continue;
        seen[w] = true;
        known[i] = true;
        queue.push_back(w);
      }
  }

  // relations: g o f a nonzero multiple of an edge h, or of an idempotent
  std::vector<std::vector<std::size_t>> relations;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j : leaving[edges[i].to]) {
      const Coeffs& c = r.compose(edges[j].morphism, edges[i].morphism);
      if (c.size() != 1) continue;
      if (edges[j].to == edges[i].from) {
        relations.push_back({i, j});
      } else if (auto it = edge_of.find(c[0].first); it != edge_of.end()) {
        relations.push_back({i, j, it->second});
        ++cert.triangles;
      }
    }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rel : relations) {
      std::size_t unknown = 0, last = 0;
      for (std::size_t e : rel)
        if (!known[e]) ++unknown, last = e;
      if (unknown == 1) {
        known[last] = true;
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!known[i])
      throw Error(ErrorCode::check_failure, "closed walk through " + r.basis(edges[i].morphism).name + " from " +
                                                r.basis(idempotent[edges[i].from]).name +
                                                " is not forced to degree 1");
  return cert;
}

RigidityCertificate certify_free_smash_rigidity(std::size_t n, std::size_t radius) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "rigidity needs n >= 2");
  RigidityCertificate cert =
      certify_smash_rigidity(smash_product(free_good_grading(GoodKind::matrix, n, Field::rational()), radius));
  cert.n = n;
  return cert;
}

}  // namespace cgrad
