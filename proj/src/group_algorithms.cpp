#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cgrad/groups.hpp"
#include "group_impl.hpp"

namespace cgrad {

namespace {

void require_members(const Group& group, const std::vector<GroupElement>& subset) {
  for (const auto& x : subset)
    if (!group.impl()->owns(x)) throw Error(ErrorCode::group_mismatch, "element does not belong to " + group.name());
}

/// Whether the rows span Z^k (integer row echelon form with unit pivots).
bool spans_lattice(std::vector<std::vector<long>> rows, std::size_t k) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < k; ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || std::labs(rows[i][c]) < std::labs(rows[best][c]))) best = i;
      if (best == rows.size()) return false;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        long q = rows[i][c] / rows[r][c];
        for (std::size_t j = c; j < k; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (std::labs(rows[r][c]) != 1) return false;
    ++r;
  }
  return true;
}

Tri generates_free_product(const Group& group, const std::vector<GroupElement>& subset) {
  const auto& orders = group.cyclic_orders();
  const std::size_t k = orders.size();
  if (k == 0) return Tri::yes;

  // Sufficient test: single-syllable elements among the subset, its inverses
  // and pairwise products cover every factor with exponents of gcd 1.
  std::vector<GroupElement> pool;
  for (const auto& x : subset) {
    pool.push_back(x);
    pool.push_back(x.inverse());
  }
  std::vector<GroupElement> candidates = pool;
  if (pool.size() <= 64)
    for (const auto& x : pool)
      for (const auto& y : pool) candidates.push_back(x * y);
  std::vector<long> g(k, 0);
  for (const auto& c : candidates) {
    if (c.code().size() != 2) continue;
    auto f = static_cast<std::size_t>(c.code()[0]);
    g[f] = std::gcd(g[f], c.code()[1]);
  }
  bool covered = true;
  for (std::size_t f = 0; f < k; ++f) {
    long n = orders[f];
    if (std::gcd(g[f], n) != 1) covered = false;
  }
  if (covered) return Tri::yes;

  // Falsification through the abelianization.
  std::vector<std::vector<long>> rows;
  for (const auto& x : subset) {
    std::vector<long> v(k, 0);
    const auto& c = x.code();
    for (std::size_t i = 0; i < c.size(); i += 2) v[static_cast<std::size_t>(c[i])] += c[i + 1];
    rows.push_back(v);
  }
  for (std::size_t f = 0; f < k; ++f)
    if (orders[f] != 0) {
      std::vector<long> v(k, 0);
      v[f] = orders[f];
      rows.push_back(v);
    }
  if (!spans_lattice(rows, k)) return Tri::no;
  return Tri::unknown;
}

Tri generates_product(const Group& group, const std::vector<GroupElement>& subset) {
  const auto& factors = group.factors();
  bool all_yes = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<GroupElement> proj, pure;
    for (const auto& x : subset) {
      proj.push_back(x.parts()[i]);
      bool only_here = true;
      for (std::size_t j = 0; j < factors.size(); ++j)
        if (j != i && !x.parts()[j].is_identity()) only_here = false;
      if (only_here) pure.push_back(x.parts()[i]);
    }
    if (generates(factors[i], proj) == Tri::no) return Tri::no;
    if (generates(factors[i], pure) != Tri::yes) all_yes = false;
  }
  return all_yes ? Tri::yes : Tri::unknown;
}

}  // namespace

std::vector<GroupElement> closure(const Group& group, const std::vector<GroupElement>& subset) {
  require_members(group, subset);
  if (!group.is_finite()) throw Error(ErrorCode::infinite_without_radius, "closure needs a finite group");
  std::vector<GroupElement> out{group.identity()};
  std::set<GroupElement> seen{group.identity()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : subset) {
      GroupElement y = out[i] * s;
      if (seen.insert(y).second) out.push_back(y);
    }
  return out;
}

Tri generates(const Group& group, const std::vector<GroupElement>& subset) {
  require_members(group, subset);
  if (group.is_trivial()) return Tri::yes;
  if (group.is_finite()) return closure(group, subset).size() == group.order() ? Tri::yes : Tri::no;
  switch (group.kind()) {
    case GroupKind::free: {
      return stallings_fold(group.rank(), subset).is_full_rose(group.rank()) ? Tri::yes : Tri::no;
    }
    case GroupKind::free_product_cyclic:
      return generates_free_product(group, subset);
    case GroupKind::direct_product:
      return generates_product(group, subset);
    default: {
      std::set<GroupElement> have(subset.begin(), subset.end());
      for (const auto& g : group.generators())
        if (!have.count(g)) return Tri::unknown;
      return Tri::yes;
    }
  }
}

Tri is_surjective(const Homomorphism& h) { return generates(h.target(), h.generator_images()); }

long element_order(const GroupElement& a) {
  const Group g = a.group();
  switch (g.kind()) {
    case GroupKind::finite_abelian: {
      long o = 1;
      const auto& n = g.cyclic_orders();
      for (std::size_t i = 0; i < n.size(); ++i) o = std::lcm(o, n[i] / std::gcd(a.code()[i], n[i]));
      return o;
    }
    case GroupKind::free:
      return a.code().empty() ? 1 : 0;
    case GroupKind::free_product_cyclic: {
      GroupElement w = a;
      while (w.code().size() >= 4 && w.code().front() == w.code()[w.code().size() - 2]) {
        GroupElement first = g.generator(static_cast<std::size_t>(w.code()[0])).pow(w.code()[1]);
        w = first.inverse() * w * first;
      }
      if (w.code().empty()) return 1;
      if (w.code().size() > 2) return 0;
      long n = g.cyclic_orders()[static_cast<std::size_t>(w.code()[0])];
      if (n == 0) return 0;
      return n / std::gcd(w.code()[1], n);
    }
    case GroupKind::direct_product:
    case GroupKind::limit: {
      long o = 1;
      for (const auto& p : a.parts()) {
        long k = element_order(p);
        if (k == 0) return 0;
        o = std::lcm(o, k);
      }
      return o;
    }
    case GroupKind::finite_table:
      break;
  }
  long k = 1;
  GroupElement x = a;
  while (!x.is_identity()) {
    x = x * a;
    ++k;
  }
  return k;
}

bool is_abelian(const Group& group) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

std::vector<long> abelian_invariants(const Group& group) {
  if (group.kind() == GroupKind::finite_abelian) return group.cyclic_orders();
  if (!group.is_finite() || !is_abelian(group))
    throw Error(ErrorCode::invalid_argument, group.name() + " is not a finite abelian group");
  std::vector<long> orders;
  for (const auto& x : group.elements()) orders.push_back(element_order(x));
  return detail::invariants_from_orders(orders);
}

std::string isomorphism_class(const Group& group) {
  if (!group.is_finite()) return group.name();
  if (is_abelian(group)) return "abelian " + detail::abelian_name(abelian_invariants(group));
  std::map<long, std::size_t> histogram;
  for (const auto& x : group.elements()) ++histogram[element_order(x)];
  std::string s = "order " + std::to_string(group.order()) + "; element orders";
  for (const auto& [o, c] : histogram) s += " " + std::to_string(o) + "^" + std::to_string(c);
  return s;
}

// ---------------------------------------------------------------------------
// Stallings folding

bool StallingsGraph::is_full_rose(std::size_t rank) const {
  if (vertices != 1) return false;
  std::set<std::size_t> labels;
  for (const auto& [from, gen, to] : edges) labels.insert(gen);
  return labels.size() == rank && edges.size() == rank;
}

StallingsGraph stallings_fold(std::size_t rank, const std::vector<GroupElement>& words) {
  using Edge = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::vector<Edge> edges;
  std::size_t count = 1;  // vertex 0 is the base point
  for (const auto& w : words) {
    const auto& code = w.code();
    if (code.empty()) continue;
    std::size_t at = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
      std::size_t next = i + 1 == code.size() ? 0 : count++;
      long x = code[i];
      auto gen = static_cast<std::size_t>(std::labs(x) - 1);
      if (gen >= rank) throw Error(ErrorCode::unknown_generator, "letter outside the free basis");
      if (x > 0)
        edges.emplace_back(at, gen, next);
      else
        edges.emplace_back(next, gen, at);
      at = next;
    }
  }

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  // Fold until no vertex has two equally labelled edges in the same direction.
  for (bool changed = true; changed;) {
    changed = false;
    std::set<Edge> canon;
    for (const auto& [a, g, b] : edges) canon.emplace(find(a), g, find(b));
    edges.assign(canon.begin(), canon.end());
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out, in;
    for (const auto& [a, g, b] : edges) {
      auto [it, fresh] = out.emplace(std::make_pair(a, g), b);
      if (!fresh && find(it->second) != find(b)) {
        std::size_t x = find(it->second), y = find(b);
        parent[std::max(x, y)] = std::min(x, y);
        changed = true;
        break;
      }
      auto [jt, fresh2] = in.emplace(std::make_pair(b, g), a);
      if (!fresh2 && find(jt->second) != find(a)) {
        std::size_t x = find(jt->second), y = find(a);
        parent[std::max(x, y)] = std::min(x, y);
        changed = true;
        break;
      }
    }
  }

  // Trim hanging trees away from the base point.
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::size_t, std::size_t> degree;
    for (const auto& [a, g, b] : edges) {
      ++degree[a];
      ++degree[b];
    }
    for (auto it = edges.begin(); it != edges.end(); ++it) {
      auto [a, g, b] = *it;
      if ((a != 0 && degree[a] == 1) || (b != 0 && degree[b] == 1)) {
        edges.erase(it);
        changed = true;
        break;
      }
    }
  }

  std::map<std::size_t, std::size_t> relabel{{0, 0}};
  for (const auto& [a, g, b] : edges)
    for (std::size_t v : {a, b}) relabel.emplace(v, relabel.size());
  StallingsGraph out;
  out.vertices = relabel.size();
  out.base = 0;
  for (const auto& [a, g, b] : edges) out.edges.emplace_back(relabel.at(a), g, relabel.at(b));
  return out;
}

}  // namespace cgrad
