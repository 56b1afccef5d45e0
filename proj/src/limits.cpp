#include "cgrad/limits.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace cgrad {

const char* to_string(LimitMethod m) {
  switch (m) {
    case LimitMethod::trivial:
      return "trivial";
    case LimitMethod::all_finite:
      return "all_finite";
    case LimitMethod::fibre_product:
      return "fibre_product";
    case LimitMethod::initial_node:
      return "initial_node";
  }
  return "?";
}

void GroupDiagram::validate() const {
  if (!labels.empty() && labels.size() != nodes.size())
    throw Error(ErrorCode::invalid_argument, "label count does not match node count");
  for (const auto& a : arrows) {
    if (a.source >= nodes.size() || a.target >= nodes.size())
      throw Error(ErrorCode::invalid_argument, "arrow endpoint out of range");
    if (a.map.source() != nodes[a.source] || a.map.target() != nodes[a.target])
      throw Error(ErrorCode::group_mismatch, "arrow " + std::to_string(a.source) + " -> " +
                                                 std::to_string(a.target) + " does not match its nodes");
    if (is_surjective(a.map) == Tri::no)
      throw Error(ErrorCode::not_surjective, "arrow " + std::to_string(a.source) + " -> " +
                                                 std::to_string(a.target) + " is not surjective");
  }
}

namespace {

struct Sub {
  std::vector<std::size_t> nodes;    // diagram indices
  std::vector<LimitArrow> arrows;    // local indices
};

/// Fibre product G1 x_K G2 of a cospan, with generators lifted through a
/// transversal of the second leg and Schreier generators of its kernel.
Group fibre_product(const Group& g1, const Group& k, const Group& g2, const Homomorphism& phi1,
                    const Homomorphism& phi2) {
  std::map<GroupElement, GroupElement> lift;  // k -> element of g2 over it
  lift.emplace(k.identity(), g2.identity());
  std::deque<GroupElement> queue{k.identity()};
  const auto& gens2 = g2.generators();
  while (!queue.empty()) {
    GroupElement x = queue.front();
    queue.pop_front();
    for (const auto& y : gens2) {
      GroupElement z = x * phi2(y);
      if (lift.emplace(z, lift.at(x) * y).second) queue.push_back(z);
    }
  }
  if (lift.size() != k.order())
    throw Error(ErrorCode::not_surjective, "cospan leg " + g2.name() + " -> " + k.name() + " is not surjective");

  const Group ambient = Group::direct_product({g1, k, g2});
  std::vector<GroupElement> gens;
  for (const auto& x : g1.generators()) {
    GroupElement kx = phi1(x);
    gens.push_back(ambient.tuple({x, kx, lift.at(kx)}));
  }
  std::set<GroupElement> seen;
  for (const auto& [kx, t] : lift)
    for (const auto& y : gens2) {
      GroupElement s = t * y * lift.at(kx * phi2(y)).inverse();
      if (s.is_identity() || !seen.insert(s).second) continue;
      gens.push_back(ambient.tuple({g1.identity(), k.identity(), s}));
    }
  std::vector<LimitArrow> arrows{{0, 1, phi1}, {2, 1, phi2}};
  return Group::limit({g1, k, g2}, arrows, gens);
}

}  // namespace

LimitResult diagram_limit(const GroupDiagram& d, bool prune_trivial) {
  d.validate();
  const std::size_t n = d.nodes.size();
  LimitResult result;

  std::vector<bool> alive(n, true);
  if (prune_trivial)
    for (std::size_t i = 0; i < n; ++i)
      if (d.nodes[i].is_trivial()) {
        alive[i] = false;
        result.pruned.push_back(i);
      }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& a : d.arrows)
    if (alive[a.source] && alive[a.target]) parent[find(a.source)] = find(a.target);

  std::map<std::size_t, Sub> by_root;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    std::size_t r = find(i);
    if (!by_root.count(r)) order.push_back(r);
    by_root[r].nodes.push_back(i);
  }
  std::vector<Sub> subs;
  for (std::size_t r : order) subs.push_back(by_root[r]);
  // Components are listed by their smallest node index.
  std::sort(subs.begin(), subs.end(), [](const Sub& a, const Sub& b) { return a.nodes[0] < b.nodes[0]; });

  // local index of each node within its component
  std::vector<std::size_t> local(n, 0), comp_of(n, 0);
  for (std::size_t c = 0; c < subs.size(); ++c)
    for (std::size_t j = 0; j < subs[c].nodes.size(); ++j) {
      local[subs[c].nodes[j]] = j;
      comp_of[subs[c].nodes[j]] = c;
    }
  for (const auto& a : d.arrows)
    if (alive[a.source] && alive[a.target])
      subs[comp_of[a.source]].arrows.push_back({local[a.source], local[a.target], a.map});

  // Per component: group plus projections to its nodes (local order).
  std::vector<std::vector<Homomorphism>> comp_proj(subs.size());
  for (std::size_t c = 0; c < subs.size(); ++c) {
    const Sub& s = subs[c];
    std::vector<Group> groups;
    for (std::size_t i : s.nodes) groups.push_back(d.nodes[i]);
    LimitComponent comp;
    comp.nodes = s.nodes;

    const bool all_finite = std::all_of(groups.begin(), groups.end(), [](const Group& g) { return g.is_finite(); });
    if (groups.size() == 1) {
      comp.method = all_finite ? LimitMethod::all_finite : LimitMethod::initial_node;
      comp.group = groups[0];
      comp_proj[c] = {Homomorphism::identity(groups[0])};
      result.components.push_back(comp);
      continue;
    }
    if (all_finite) {
      comp.method = LimitMethod::all_finite;
      comp.group = Group::limit(groups, s.arrows);
      for (std::size_t j = 0; j < groups.size(); ++j) comp_proj[c].push_back(Homomorphism::projection(comp.group, j));
      result.components.push_back(comp);
      continue;
    }

    // Cospan G1 -> K <- G2 with K finite.
    if (groups.size() == 3 && s.arrows.size() == 2 && s.arrows[0].target == s.arrows[1].target &&
        s.arrows[0].source != s.arrows[1].source && groups[s.arrows[0].target].is_finite()) {
      const auto& a1 = s.arrows[0];
      const auto& a2 = s.arrows[1];
      comp.method = LimitMethod::fibre_product;
      comp.group = fibre_product(groups[a1.source], groups[a1.target], groups[a2.source], a1.map, a2.map);
      comp_proj[c].resize(3);
      comp_proj[c][a1.source] = Homomorphism::projection(comp.group, 0);
      comp_proj[c][a1.target] = Homomorphism::projection(comp.group, 1);
      comp_proj[c][a2.source] = Homomorphism::projection(comp.group, 2);
      result.components.push_back(comp);
      continue;
    }

    // A node with a direct arrow to every other node, through which all
    // arrows factor.
    bool found = false;
    for (std::size_t i0 = 0; i0 < groups.size() && !found; ++i0) {
      std::vector<const LimitArrow*> direct(groups.size(), nullptr);
      bool ok = true;
      for (const auto& a : s.arrows) {
        if (a.target == i0) {
          ok = false;
          break;
        }
        if (a.source == i0) {
          if (direct[a.target] && direct[a.target]->map.generator_images() != a.map.generator_images()) {
            throw Error(ErrorCode::unsupported_shape, "parallel arrows out of " + groups[i0].name() + " disagree");
          }
          direct[a.target] = &a;
        }
      }
      for (std::size_t j = 0; j < groups.size() && ok; ++j)
        if (j != i0 && !direct[j]) ok = false;
      if (!ok) continue;
      for (const auto& a : s.arrows) {
        if (a.source == i0) continue;
        for (const auto& x : groups[i0].generators())
          if (a.map(direct[a.source]->map(x)) != direct[a.target]->map(x))
            throw Error(ErrorCode::unsupported_shape, "arrows out of " + groups[i0].name() + " do not commute");
      }
      found = true;
      comp.method = LimitMethod::initial_node;
      comp.group = groups[i0];
      for (std::size_t j = 0; j < groups.size(); ++j)
        comp_proj[c].push_back(j == i0 ? Homomorphism::identity(groups[i0]) : direct[j]->map);
    }
    if (!found) throw Error(ErrorCode::unsupported_shape, "diagram component has no supported shape");
    result.components.push_back(comp);
  }

  if (result.components.empty()) {
    result.group = Group::trivial();
  } else if (result.components.size() == 1) {
    result.group = result.components[0].group;
  } else {
    std::vector<Group> parts;
    for (const auto& c : result.components) parts.push_back(c.group);
    result.group = Group::direct_product(parts);
  }

  result.projections.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) {
      result.projections[i] = Homomorphism::trivial(result.group, d.nodes[i]);
      continue;
    }
    const Homomorphism& inner = comp_proj[comp_of[i]][local[i]];
    if (result.components.size() == 1)
      result.projections[i] = inner;
    else
      result.projections[i] = Homomorphism::compose(inner, Homomorphism::projection(result.group, comp_of[i]));
  }
  return result;
}

std::vector<std::vector<GroupElement>> compatible_tuples(const GroupDiagram& d, std::size_t radius) {
  std::vector<std::vector<GroupElement>> pools;
  for (const auto& g : d.nodes) pools.push_back(g.is_finite() ? g.elements() : g.ball(radius));
  for (std::size_t i = 0; i < pools.size(); ++i)
    if (d.nodes[i].is_finite()) {
      auto& p = pools[i];
      p.erase(std::remove_if(p.begin(), p.end(), [&](const GroupElement& x) { return x.length() > radius; }),
              p.end());
    }
  std::vector<std::vector<const LimitArrow*>> closing(d.nodes.size());
  for (const auto& a : d.arrows) closing[std::max(a.source, a.target)].push_back(&a);

  std::vector<std::vector<GroupElement>> out;
  std::vector<GroupElement> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d.nodes.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& x : pools[i]) {
      cur.push_back(x);
      bool ok = true;
      for (const LimitArrow* a : closing[i])
        if (a->map(cur[a->source]) != cur[a->target]) {
          ok = false;
          break;
        }
      if (ok) rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

std::string tuple_string(const std::vector<GroupElement>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += t[i].to_string();
  }
  return s + "]";
}

}  // namespace

LimitCertificate certify_limit_iso(const GroupDiagram& d, const Group& candidate,
                                   const std::vector<Homomorphism>& cone, std::size_t radius) {
  d.validate();
  if (cone.size() != d.nodes.size())
    throw Error(ErrorCode::invalid_argument, "cone needs one map per diagram node");
  for (std::size_t i = 0; i < cone.size(); ++i)
    if (cone[i].source() != candidate || cone[i].target() != d.nodes[i])
      throw Error(ErrorCode::group_mismatch, "cone map " + std::to_string(i) + " has the wrong endpoints");
  for (const auto& a : d.arrows)
    for (const auto& x : candidate.generators())
      if (a.map(cone[a.source](x)) != cone[a.target](x))
        throw Error(ErrorCode::cone_does_not_commute,
                    "cone does not commute with arrow " + std::to_string(a.source) + " -> " +
                        std::to_string(a.target) + " on generator " + x.to_string());

  LimitCertificate cert;
  cert.candidate = candidate.name();
  cert.radius = radius;

  std::map<std::vector<GroupElement>, GroupElement> image;
  const auto ball = candidate.ball(radius);
  cert.candidate_elements = ball.size();
  for (const auto& x : ball) {
    std::vector<GroupElement> t;
    for (const auto& f : cone) t.push_back(f(x));
    auto [it, fresh] = image.emplace(t, x);
    if (!fresh)
      throw Error(ErrorCode::certificate_failure, "not injective: " + it->second.to_string() + " and " +
                                                      x.to_string() + " both map to " + tuple_string(t));
  }
  const auto tuples = compatible_tuples(d, radius);
  cert.compatible_tuples = tuples.size();
  for (const auto& t : tuples)
    if (!image.count(t))
      throw Error(ErrorCode::certificate_failure,
                  "not surjective: compatible tuple " + tuple_string(t) + " has no preimage of length <= " +
                      std::to_string(radius));
  return cert;
}

}  // namespace cgrad
