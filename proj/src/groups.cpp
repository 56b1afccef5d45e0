#include "cgrad/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "group_impl.hpp"

namespace cgrad {

const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::finite_abelian:
      return "finite_abelian";
    case GroupKind::finite_table:
      return "finite_table";
    case GroupKind::free:
      return "free";
    case GroupKind::free_product_cyclic:
      return "free_product_cyclic";
    case GroupKind::direct_product:
      return "direct_product";
    case GroupKind::limit:
      return "limit";
  }
  return "?";
}

namespace detail {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

void push_letter(FormalWord& w, std::size_t gen, long exp) {
  if (exp == 0) return;
  if (!w.empty() && w.back().first == gen) {
    w.back().second += exp;
    if (w.back().second == 0) w.pop_back();
    return;
  }
  w.emplace_back(gen, exp);
}

std::string power(const std::string& base, long e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

long parse_long(const std::string& text) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse_error, "bad integer '" + text + "'");
  }
  if (used != text.size()) throw Error(ErrorCode::parse_error, "bad integer '" + text + "'");
  return v;
}

void sort_by_length(std::vector<GroupElement>& v) {
  std::stable_sort(v.begin(), v.end(), [](const GroupElement& a, const GroupElement& b) {
    return a.length() < b.length();
  });
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<long> orders_by_powers(const std::vector<GroupElement>& elems) {
  std::vector<long> orders;
  orders.reserve(elems.size());
  for (const auto& g : elems) {
    long k = 1;
    GroupElement x = g;
    while (!x.is_identity()) {
      x = x * g;
      ++k;
    }
    orders.push_back(k);
  }
  return orders;
}

bool generators_commute(const std::vector<GroupElement>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

/// Breadth-first words over generators and their inverses.
std::map<GroupElement, FormalWord> cayley_words(const GroupElement& id,
                                                const std::vector<GroupElement>& gens) {
  std::map<GroupElement, FormalWord> words;
  words[id] = {};
  std::deque<GroupElement> queue{id};
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (long s : {1L, -1L}) {
        GroupElement h = g * (s == 1 ? gens[i] : gens[i].inverse());
        if (words.count(h)) continue;
        FormalWord w = words[g];
        push_letter(w, i, s);
        words[h] = w;
        queue.push_back(h);
      }
    }
  }
  return words;
}

std::string trim_all(const std::string& text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string abelian_name(const std::vector<long>& invariants) {
  if (invariants.empty()) return "1";
  std::vector<std::string> parts;
  for (long n : invariants) parts.push_back("C" + std::to_string(n));
  return join(parts, " x ");
}

std::vector<long> invariants_from_orders(const std::vector<long>& orders) {
  const std::size_t n = orders.size();
  std::vector<long> primes;
  {
    std::size_t m = n;
    for (std::size_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      primes.push_back(static_cast<long>(p));
      while (m % p == 0) m /= p;
    }
    if (m > 1) primes.push_back(static_cast<long>(m));
  }
  // For each prime, the exponents of the cyclic p-parts, largest first.
  std::vector<std::vector<long>> powers;
  for (long p : primes) {
    std::vector<long> s{0};  // s[k] = log_p #{x : x^(p^k) = 1}
    long pk = 1;
    for (;;) {
      pk *= p;
      std::size_t count = 0;
      for (long o : orders)
        if (pk % o == 0) ++count;
      long e = 0;
      for (std::size_t c = count; c > 1; c /= static_cast<std::size_t>(p)) ++e;
      if (e == s.back()) break;
      s.push_back(e);
    }
    std::vector<long> exps;
    for (std::size_t k = 1; k < s.size(); ++k) {
      long at_least_k = s[k] - s[k - 1];
      long at_least_next = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
      for (long c = 0; c < at_least_k - at_least_next; ++c) {
        long v = 1;
        for (std::size_t j = 0; j < k; ++j) v *= p;
        exps.push_back(v);
      }
    }
    std::sort(exps.rbegin(), exps.rend());
    powers.push_back(exps);
  }
  std::size_t count = 0;
  for (const auto& e : powers) count = std::max(count, e.size());
  std::vector<long> inv(count, 1);
  for (const auto& e : powers)
    for (std::size_t j = 0; j < e.size(); ++j) inv[j] *= e[j];
  std::reverse(inv.begin(), inv.end());
  return inv;
}

GroupElement GroupImpl::make(std::vector<long> code, std::vector<GroupElement> parts) const {
  GroupElement e;
  e.group_ = shared_from_this();
  e.code_ = std::move(code);
  e.parts_ = std::move(parts);
  return e;
}

bool GroupImpl::owns(const GroupElement& a) const {
  return a.group_ && (a.group_.get() == this || a.group_->key() == key_);
}

void GroupImpl::finish(std::string key) {
  key_ = std::move(key);
  gens_ = compute_generators();
  after_generators();
}

namespace {

// ---------------------------------------------------------------------------

class AbelianImpl final : public GroupImpl {
 public:
  explicit AbelianImpl(std::vector<long> n) : GroupImpl(GroupKind::finite_abelian), n_(std::move(n)) {}

  const std::vector<long>& factors() const { return n_; }

  bool finite() const override { return true; }
  std::size_t order() const override {
    std::size_t o = 1;
    for (long x : n_) o *= static_cast<std::size_t>(x);
    return o;
  }
  std::string name() const override { return abelian_name(n_); }
  GroupElement identity() const override { return make(std::vector<long>(n_.size(), 0)); }

  GroupElement reduce(std::vector<long> r) const {
    if (r.size() != n_.size()) throw Error(ErrorCode::invalid_argument, "residue count mismatch");
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(r[i], n_[i]);
    return make(std::move(r));
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    std::vector<long> r(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i) r[i] = (a.code()[i] + b.code()[i]) % n_[i];
    return make(std::move(r));
  }
  GroupElement invert(const GroupElement& a) const override {
    std::vector<long> r(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i) r[i] = (n_[i] - a.code()[i]) % n_[i];
    return make(std::move(r));
  }
  FormalWord letters(const GroupElement& a) const override {
    FormalWord w;
    for (std::size_t i = 0; i < n_.size(); ++i)
      if (a.code()[i]) w.emplace_back(i, a.code()[i]);
    return w;
  }
  std::size_t length(const GroupElement& a) const override {
    std::size_t len = 0;
    for (std::size_t i = 0; i < n_.size(); ++i)
      len += static_cast<std::size_t>(std::min(a.code()[i], n_[i] - a.code()[i]));
    return len;
  }
  std::vector<GroupElement> elements() const override {
    std::vector<GroupElement> out;
    std::vector<long> r(n_.size(), 0);
    for (;;) {
      out.push_back(make(r));
      std::size_t i = n_.size();
      while (i > 0) {
        --i;
        if (++r[i] < n_[i]) break;
        r[i] = 0;
        if (i == 0) return out;
      }
      if (n_.empty()) return out;
    }
  }
  std::vector<GroupElement> ball(std::size_t radius) const override {
    std::vector<GroupElement> out;
    for (auto& g : elements())
      if (length(g) <= radius) out.push_back(g);
    sort_by_length(out);
    return out;
  }
  static std::string component(long r) { return r == 0 ? "1" : power("t", r); }
  std::string format(const GroupElement& a) const override {
    if (n_.size() == 1) return component(a.code()[0]);
    if (std::all_of(a.code().begin(), a.code().end(), [](long r) { return r == 0; })) return "1";
    std::vector<std::string> parts;
    for (long r : a.code()) parts.push_back(component(r));
    return "(" + join(parts, ",") + ")";
  }
  long parse_component(const std::string& s, long n) const {
    if (s == "1") return 0;
    if (s == "t") return 1;
    if (s.rfind("t^", 0) == 0) return mod(parse_long(s.substr(2)), n);
    throw Error(ErrorCode::parse_error, "bad cyclic component '" + s + "'");
  }
  std::optional<GroupElement> parse_atom(const std::string& token) const override {
    if (n_.size() == 1 && token == "t") return gens_[0];
    if (token.size() >= 2 && token.front() == '(' && token.back() == ')') {
      auto comps = split_top(token.substr(1, token.size() - 2), ',');
      if (comps.size() != n_.size())
        throw Error(ErrorCode::parse_error, "expected " + std::to_string(n_.size()) + " components");
      std::vector<long> r;
      for (std::size_t i = 0; i < comps.size(); ++i) r.push_back(parse_component(comps[i], n_[i]));
      return make(r);
    }
    return std::nullopt;
  }

 protected:
  std::vector<GroupElement> compute_generators() const override {
    std::vector<GroupElement> g;
    for (std::size_t i = 0; i < n_.size(); ++i) {
      std::vector<long> r(n_.size(), 0);
      r[i] = 1;
      g.push_back(make(r));
    }
    return g;
  }

 private:
  std::vector<long> n_;
};

// ---------------------------------------------------------------------------

class TableImpl final : public GroupImpl {
 public:
  explicit TableImpl(std::vector<std::vector<std::size_t>> table)
      : GroupImpl(GroupKind::finite_table), t_(std::move(table)) {
    const std::size_t n = t_.size();
    if (n == 0) throw Error(ErrorCode::not_a_group, "empty multiplication table");
    for (const auto& row : t_) {
      if (row.size() != n) throw Error(ErrorCode::not_a_group, "table is not square");
      for (std::size_t v : row)
        if (v >= n) throw Error(ErrorCode::not_a_group, "table entry out of range");
    }
    e_ = n;
    for (std::size_t i = 0; i < n && e_ == n; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = t_[i][j] == j && t_[j][i] == j;
      if (ok) e_ = i;
    }
    if (e_ == n) throw Error(ErrorCode::not_a_group, "no identity element");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (t_[t_[a][b]][c] != t_[a][t_[b][c]])
            throw Error(ErrorCode::not_a_group, "table is not associative");
    inv_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (t_[a][b] == e_ && t_[b][a] == e_) inv_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
      if (inv_[a] == n) throw Error(ErrorCode::not_a_group, "element without inverse");
  }

  const std::vector<std::vector<std::size_t>>& table() const { return t_; }

  bool finite() const override { return true; }
  std::size_t order() const override { return t_.size(); }
  std::string name() const override { return name_; }
  GroupElement identity() const override { return make({static_cast<long>(e_)}); }
  GroupElement at(std::size_t i) const {
    if (i >= t_.size()) throw Error(ErrorCode::invalid_argument, "table index out of range");
    return make({static_cast<long>(i)});
  }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    return at(t_[idx(a)][idx(b)]);
  }
  GroupElement invert(const GroupElement& a) const override { return at(inv_[idx(a)]); }
  FormalWord letters(const GroupElement& a) const override { return words_.at(a); }
  std::size_t length(const GroupElement& a) const override {
    std::size_t len = 0;
    for (const auto& [g, e] : words_.at(a)) len += static_cast<std::size_t>(std::labs(e));
    return len;
  }
  std::vector<GroupElement> elements() const override {
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < t_.size(); ++i) out.push_back(at(i));
    return out;
  }
  std::vector<GroupElement> ball(std::size_t radius) const override {
    std::vector<GroupElement> out;
    for (auto& g : elements())
      if (length(g) <= radius) out.push_back(g);
    sort_by_length(out);
    return out;
  }
  std::string format(const GroupElement& a) const override {
    if (idx(a) == e_) return "1";
    return "g" + std::to_string(idx(a));
  }
  std::optional<GroupElement> parse_atom(const std::string& token) const override {
    if (token.size() >= 2 && token[0] == 'g') return at(static_cast<std::size_t>(parse_long(token.substr(1))));
    return std::nullopt;
  }

 protected:
  std::vector<GroupElement> compute_generators() const override {
    const std::size_t n = t_.size();
    std::vector<std::size_t> gens;
    std::vector<bool> in(n, false);
    in[e_] = true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (in[cand]) continue;
      gens.push_back(cand);
      std::deque<std::size_t> queue;
      for (std::size_t i = 0; i < n; ++i)
        if (in[i]) queue.push_back(i);
      while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t g : gens)
          for (std::size_t y : {t_[x][g], t_[g][x]})
            if (!in[y]) {
              in[y] = true;
              queue.push_back(y);
            }
      }
    }
    std::vector<GroupElement> out;
    for (std::size_t g : gens) out.push_back(at(g));
    return out;
  }
  void after_generators() override {
    words_ = cayley_words(identity(), gens_);
    const auto elems = elements();
    if (generators_commute(gens_))
      name_ = abelian_name(invariants_from_orders(orders_by_powers(elems)));
    else
      name_ = "finite group of order " + std::to_string(t_.size());
  }

 private:
  static std::size_t idx(const GroupElement& a) { return static_cast<std::size_t>(a.code()[0]); }

  std::vector<std::vector<std::size_t>> t_;
  std::size_t e_ = 0;
  std::vector<std::size_t> inv_;
  std::map<GroupElement, FormalWord> words_;
  std::string name_;
};

// ---------------------------------------------------------------------------

class FreeImpl final : public GroupImpl {
 public:
  explicit FreeImpl(std::size_t rank) : GroupImpl(GroupKind::free), r_(rank) {}

  std::size_t rank() const { return r_; }

  bool finite() const override { return r_ == 0; }
  std::size_t order() const override { return r_ == 0 ? 1 : 0; }
  std::string name() const override {
    if (r_ == 0) return "1";
    if (r_ == 1) return "Z";
    return "F" + std::to_string(r_);
  }
  GroupElement identity() const override { return make({}); }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    std::vector<long> r = a.code();
    for (long x : b.code()) {
      if (!r.empty() && r.back() == -x)
        r.pop_back();
      else
        r.push_back(x);
    }
    return make(std::move(r));
  }
  GroupElement invert(const GroupElement& a) const override {
    std::vector<long> r(a.code().rbegin(), a.code().rend());
    for (long& x : r) x = -x;
    return make(std::move(r));
  }
  FormalWord letters(const GroupElement& a) const override {
    FormalWord w;
    for (long x : a.code()) push_letter(w, static_cast<std::size_t>(std::labs(x) - 1), x > 0 ? 1 : -1);
    return w;
  }
  std::size_t length(const GroupElement& a) const override { return a.code().size(); }
  std::vector<GroupElement> elements() const override {
    if (r_ == 0) return {identity()};
    throw Error(ErrorCode::infinite_without_radius, "free group of rank " + std::to_string(r_) + " is infinite");
  }
  std::vector<GroupElement> ball(std::size_t radius) const override {
    std::vector<GroupElement> out{identity()};
    std::vector<std::vector<long>> level{{}};
    for (std::size_t len = 1; len <= radius && r_ > 0; ++len) {
      std::vector<std::vector<long>> next;
      for (const auto& w : level)
        for (long k = 1; k <= static_cast<long>(r_); ++k)
          for (long x : {k, -k}) {
            if (!w.empty() && w.back() == -x) continue;
            auto v = w;
            v.push_back(x);
            out.push_back(make(v));
            next.push_back(std::move(v));
          }
      level = std::move(next);
    }
    return out;
  }
  std::string gen_name(std::size_t i) const { return r_ == 1 ? "s" : "s" + std::to_string(i + 1); }
  std::string format(const GroupElement& a) const override {
    if (a.code().empty()) return "1";
    std::vector<std::string> parts;
    for (const auto& [g, e] : letters(a)) parts.push_back(power(gen_name(g), e));
    return join(parts, "*");
  }
  std::optional<GroupElement> parse_atom(const std::string& token) const override {
    if (token == "s" && r_ == 1) return gens_[0];
    if (token.size() >= 2 && token[0] == 's' && std::isdigit(static_cast<unsigned char>(token[1]))) {
      long k = parse_long(token.substr(1));
      if (k >= 1 && k <= static_cast<long>(r_)) return gens_[static_cast<std::size_t>(k - 1)];
    }
    return std::nullopt;
  }

 protected:
  std::vector<GroupElement> compute_generators() const override {
    std::vector<GroupElement> g;
    for (std::size_t k = 1; k <= r_; ++k) g.push_back(make({static_cast<long>(k)}));
    return g;
  }

 private:
  std::size_t r_;
};

// ---------------------------------------------------------------------------

class FpcImpl final : public GroupImpl {
 public:
  explicit FpcImpl(std::vector<long> orders) : GroupImpl(GroupKind::free_product_cyclic), n_(std::move(orders)) {
    for (long n : n_)
      if (n != 0 && n < 2) throw Error(ErrorCode::invalid_argument, "cyclic factor orders must be 0 or >= 2");
  }

  const std::vector<long>& orders() const { return n_; }

  bool finite() const override { return n_.empty() || (n_.size() == 1 && n_[0] != 0); }
  std::size_t order() const override {
    if (n_.empty()) return 1;
    if (n_.size() == 1 && n_[0] != 0) return static_cast<std::size_t>(n_[0]);
    return 0;
  }
  std::string name() const override {
    if (n_.empty()) return "1";
    std::vector<std::string> parts;
    for (long n : n_) parts.push_back(n == 0 ? "Z" : "C" + std::to_string(n));
    return join(parts, " * ");
  }
  GroupElement identity() const override { return make({}); }

  long reduce(std::size_t f, long e) const { return n_[f] == 0 ? e : mod(e, n_[f]); }

  void push(std::vector<long>& code, std::size_t f, long e) const {
    e = reduce(f, e);
    if (e == 0) return;
    if (!code.empty() && code[code.size() - 2] == static_cast<long>(f)) {
      long merged = reduce(f, code.back() + e);
      code.resize(code.size() - 2);
      if (merged != 0) {
        code.push_back(static_cast<long>(f));
        code.push_back(merged);
      }
      return;
    }
    code.push_back(static_cast<long>(f));
    code.push_back(e);
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    std::vector<long> r = a.code();
    const auto& c = b.code();
    for (std::size_t i = 0; i < c.size(); i += 2) push(r, static_cast<std::size_t>(c[i]), c[i + 1]);
    return make(std::move(r));
  }
  GroupElement invert(const GroupElement& a) const override {
    std::vector<long> r;
    const auto& c = a.code();
    for (std::size_t i = c.size(); i >= 2; i -= 2) push(r, static_cast<std::size_t>(c[i - 2]), -c[i - 1]);
    return make(std::move(r));
  }
  FormalWord letters(const GroupElement& a) const override {
    FormalWord w;
    const auto& c = a.code();
    for (std::size_t i = 0; i < c.size(); i += 2) w.emplace_back(static_cast<std::size_t>(c[i]), c[i + 1]);
    return w;
  }
  std::size_t syllable_length(std::size_t f, long e) const {
    if (n_[f] == 0) return static_cast<std::size_t>(std::labs(e));
    return static_cast<std::size_t>(std::min(e, n_[f] - e));
  }
  std::size_t length(const GroupElement& a) const override {
    std::size_t len = 0;
    const auto& c = a.code();
    for (std::size_t i = 0; i < c.size(); i += 2) len += syllable_length(static_cast<std::size_t>(c[i]), c[i + 1]);
    return len;
  }
  std::vector<GroupElement> elements() const override {
    if (n_.empty()) return {identity()};
    if (finite()) {
      std::vector<GroupElement> out{identity()};
      for (long e = 1; e < n_[0]; ++e) out.push_back(make({0, e}));
      return out;
    }
    throw Error(ErrorCode::infinite_without_radius, name() + " is infinite");
  }
  void extend(std::vector<long>& code, std::size_t budget, std::vector<GroupElement>& out) const {
    for (std::size_t f = 0; f < n_.size(); ++f) {
      if (!code.empty() && code[code.size() - 2] == static_cast<long>(f)) continue;
      std::vector<long> exps;
      if (n_[f] == 0) {
        for (long e = 1; e <= static_cast<long>(budget); ++e) {
          exps.push_back(e);
          exps.push_back(-e);
        }
      } else {
        for (long e = 1; e < n_[f]; ++e) exps.push_back(e);
      }
      for (long e : exps) {
        std::size_t cost = syllable_length(f, e);
        if (cost > budget) continue;
        code.push_back(static_cast<long>(f));
        code.push_back(e);
        out.push_back(make(code));
        extend(code, budget - cost, out);
        code.resize(code.size() - 2);
      }
    }
  }
  std::vector<GroupElement> ball(std::size_t radius) const override {
    std::vector<GroupElement> out{identity()};
    std::vector<long> code;
    extend(code, radius, out);
    sort_by_length(out);
    return out;
  }
  static std::string letter(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i);
  }
  std::string format(const GroupElement& a) const override {
    if (a.code().empty()) return "1";
    std::vector<std::string> parts;
    for (const auto& [f, e] : letters(a)) parts.push_back(power(letter(f), e));
    return join(parts, "*");
  }
  std::optional<GroupElement> parse_atom(const std::string& token) const override {
    for (std::size_t i = 0; i < n_.size(); ++i)
      if (token == letter(i)) return gens_[i];
    return std::nullopt;
  }

 protected:
  std::vector<GroupElement> compute_generators() const override {
    std::vector<GroupElement> g;
    for (std::size_t i = 0; i < n_.size(); ++i) g.push_back(make({static_cast<long>(i), 1}));
    return g;
  }

 private:
  std::vector<long> n_;
};

// ---------------------------------------------------------------------------

template <class F>
void cartesian(const std::vector<std::vector<GroupElement>>& pools, F&& emit) {
  for (const auto& p : pools)
    if (p.empty()) return;
  std::vector<std::size_t> idx(pools.size(), 0);
  std::vector<GroupElement> cur;
  for (;;) {
    cur.clear();
    for (std::size_t i = 0; i < pools.size(); ++i) cur.push_back(pools[i][idx[i]]);
    emit(cur);
    std::size_t i = pools.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++idx[i] < pools[i].size()) break;
      idx[i] = 0;
    }
  }
}

std::string tuple_format(const std::vector<GroupElement>& parts) {
  std::vector<std::string> s;
  for (const auto& p : parts) s.push_back(p.to_string());
  return "[" + join(s, ", ") + "]";
}

class ProductImpl final : public GroupImpl {
 public:
  explicit ProductImpl(std::vector<Group> factors)
      : GroupImpl(GroupKind::direct_product), f_(std::move(factors)) {
    std::size_t off = 0;
    for (const auto& g : f_) {
      offsets_.push_back(off);
      off += g.generators().size();
    }
  }

  const std::vector<Group>& factors() const { return f_; }

  bool finite() const override {
    return std::all_of(f_.begin(), f_.end(), [](const Group& g) { return g.is_finite(); });
  }
  std::size_t order() const override {
    if (!finite()) return 0;
    std::size_t o = 1;
    for (const auto& g : f_) o *= g.order();
    return o;
  }
  std::string name() const override {
    std::vector<std::string> parts;
    for (const auto& g : f_) {
      std::string n = g.name();
      if (n.find(" * ") != std::string::npos) n = "(" + n + ")";
      parts.push_back(n);
    }
    if (parts.empty()) return "1";
    return join(parts, " x ");
  }
  GroupElement identity() const override {
    std::vector<GroupElement> p;
    for (const auto& g : f_) p.push_back(g.identity());
    return make({}, p);
  }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    std::vector<GroupElement> p;
    for (std::size_t i = 0; i < f_.size(); ++i) p.push_back(f_[i].multiply(a.parts()[i], b.parts()[i]));
    return make({}, p);
  }
  GroupElement invert(const GroupElement& a) const override {
    std::vector<GroupElement> p;
    for (std::size_t i = 0; i < f_.size(); ++i) p.push_back(f_[i].invert(a.parts()[i]));
    return make({}, p);
  }
  FormalWord letters(const GroupElement& a) const override {
    FormalWord w;
    for (std::size_t i = 0; i < f_.size(); ++i)
      for (const auto& [g, e] : f_[i].letters(a.parts()[i])) w.emplace_back(g + offsets_[i], e);
    return w;
  }
  std::size_t length(const GroupElement& a) const override {
    std::size_t len = 0;
    for (const auto& p : a.parts()) len = std::max(len, p.length());
    return len;
  }
  std::vector<GroupElement> elements() const override {
    std::vector<std::vector<GroupElement>> pools;
    for (const auto& g : f_) pools.push_back(g.elements());
    std::vector<GroupElement> out;
    cartesian(pools, [&](const std::vector<GroupElement>& p) { out.push_back(make({}, p)); });
    if (f_.empty()) out.push_back(identity());
    return out;
  }
  std::vector<GroupElement> ball(std::size_t radius) const override {
    std::vector<std::vector<GroupElement>> pools;
    for (const auto& g : f_) pools.push_back(g.ball(radius));
    std::vector<GroupElement> out;
    cartesian(pools, [&](const std::vector<GroupElement>& p) { out.push_back(make({}, p)); });
    if (f_.empty()) out.push_back(identity());
    sort_by_length(out);
    return out;
  }
  std::string format(const GroupElement& a) const override { return tuple_format(a.parts()); }
  std::optional<GroupElement> parse_atom(const std::string& token) const override {
    if (token.size() < 2 || token.front() != '[' || token.back() != ']') return std::nullopt;
    auto comps = split_top(token.substr(1, token.size() - 2), ',');
    if (f_.empty() && comps.size() == 1 && comps[0].empty()) return identity();
    if (comps.size() != f_.size())
      throw Error(ErrorCode::parse_error, "expected " + std::to_string(f_.size()) + " components");
    std::vector<GroupElement> p;
    for (std::size_t i = 0; i < f_.size(); ++i) p.push_back(f_[i].parse(comps[i]));
    return make({}, p);
  }

  GroupElement embed(std::size_t i, const GroupElement& a) const {
    std::vector<GroupElement> p;
    for (const auto& g : f_) p.push_back(g.identity());
    p.at(i) = a;
    return make({}, p);
  }

 protected:
  std::vector<GroupElement> compute_generators() const override {
    std::vector<GroupElement> g;
    for (std::size_t i = 0; i < f_.size(); ++i)
      for (const auto& x : f_[i].generators()) g.push_back(embed(i, x));
    return g;
  }

 private:
  std::vector<Group> f_;
  std::vector<std::size_t> offsets_;
};

// ---------------------------------------------------------------------------

class LimitImpl final : public GroupImpl {
 public:
  LimitImpl(std::vector<Group> nodes, std::vector<LimitArrow> arrows,
            std::optional<std::vector<GroupElement>> given)
      : GroupImpl(GroupKind::limit), nodes_(std::move(nodes)), arrows_(std::move(arrows)), given_(std::move(given)) {
    for (const auto& a : arrows_) {
      if (a.source >= nodes_.size() || a.target >= nodes_.size())
        throw Error(ErrorCode::invalid_argument, "limit arrow endpoint out of range");
      if (a.map.source() != nodes_[a.source] || a.map.target() != nodes_[a.target])
        throw Error(ErrorCode::group_mismatch, "limit arrow does not match its endpoints");
    }
    if (!finite() && !given_)
      throw Error(ErrorCode::infinite_without_radius, "an infinite limit needs explicit generators");
  }

  const std::vector<Group>& nodes() const { return nodes_; }
  const std::vector<LimitArrow>& arrows() const { return arrows_; }

  bool compatible(const std::vector<GroupElement>& parts) const {
    if (parts.size() != nodes_.size()) return false;
    for (const auto& a : arrows_)
      if (a.map(parts[a.source]) != parts[a.target]) return false;
    return true;
  }

  bool finite() const override {
    return std::all_of(nodes_.begin(), nodes_.end(), [](const Group& g) { return g.is_finite(); });
  }
  std::size_t order() const override { return finite() ? elems_.size() : 0; }
  std::string name() const override { return name_; }
  GroupElement identity() const override {
    std::vector<GroupElement> p;
    for (const auto& g : nodes_) p.push_back(g.identity());
    return make({}, p);
  }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    std::vector<GroupElement> p;
    for (std::size_t i = 0; i < nodes_.size(); ++i) p.push_back(nodes_[i].multiply(a.parts()[i], b.parts()[i]));
    return make({}, p);
  }
  GroupElement invert(const GroupElement& a) const override {
    std::vector<GroupElement> p;
    for (std::size_t i = 0; i < nodes_.size(); ++i) p.push_back(nodes_[i].invert(a.parts()[i]));
    return make({}, p);
  }
  FormalWord letters(const GroupElement& a) const override {
    if (!finite())
      throw Error(ErrorCode::unsupported_shape, "no word problem for elements of an infinite limit");
    return words_.at(a);
  }
  std::size_t length(const GroupElement& a) const override {
    std::size_t len = 0;
    for (const auto& p : a.parts()) len = std::max(len, p.length());
    return len;
  }
  std::vector<GroupElement> elements() const override {
    if (!finite()) throw Error(ErrorCode::infinite_without_radius, "limit is infinite");
    return elems_;
  }

  /// Compatible tuples with node i drawn from pools[i], in lexicographic order.
  std::vector<GroupElement> enumerate(const std::vector<std::vector<GroupElement>>& pools) const {
    std::vector<GroupElement> out;
    std::vector<GroupElement> cur;
    std::vector<std::vector<const LimitArrow*>> closing(nodes_.size());
    for (const auto& a : arrows_) closing[std::max(a.source, a.target)].push_back(&a);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == nodes_.size()) {
        out.push_back(make({}, cur));
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

  std::vector<GroupElement> ball(std::size_t radius) const override {
    std::vector<std::vector<GroupElement>> pools;
    for (const auto& g : nodes_) pools.push_back(g.ball(radius));
    auto out = enumerate(pools);
    sort_by_length(out);
    return out;
  }
  std::string format(const GroupElement& a) const override { return tuple_format(a.parts()); }
  std::optional<GroupElement> parse_atom(const std::string& token) const override {
    if (token.size() < 2 || token.front() != '[' || token.back() != ']') return std::nullopt;
    auto comps = split_top(token.substr(1, token.size() - 2), ',');
    if (comps.size() != nodes_.size())
      throw Error(ErrorCode::parse_error, "expected " + std::to_string(nodes_.size()) + " components");
    std::vector<GroupElement> p;
    for (std::size_t i = 0; i < nodes_.size(); ++i) p.push_back(nodes_[i].parse(comps[i]));
    return from_parts(p);
  }

  GroupElement from_parts(const std::vector<GroupElement>& parts) const {
    if (parts.size() != nodes_.size()) throw Error(ErrorCode::invalid_argument, "wrong tuple size");
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!nodes_[i].impl()->owns(parts[i])) throw Error(ErrorCode::group_mismatch, "tuple part outside its node");
    if (!compatible(parts)) throw Error(ErrorCode::invalid_argument, "tuple is not compatible with the arrows");
    return make({}, parts);
  }

 protected:
  std::vector<GroupElement> compute_generators() const override {
    if (given_) {
      std::vector<GroupElement> g;
      for (const auto& x : *given_) g.push_back(from_parts(x.parts()));
      return g;
    }
    elems_ = compute_elements();
    std::set<GroupElement> in{identity()};
    std::vector<GroupElement> gens;
    for (const auto& cand : elems_) {
      if (in.count(cand)) continue;
      gens.push_back(cand);
      std::deque<GroupElement> queue(in.begin(), in.end());
      while (!queue.empty()) {
        GroupElement x = queue.front();
        queue.pop_front();
        for (const auto& g : gens)
          for (const auto& y : {multiply(x, g), multiply(g, x)})
            if (in.insert(y).second) queue.push_back(y);
      }
    }
    return gens;
  }
  void after_generators() override {
    if (!finite()) {
      std::vector<std::string> n;
      for (const auto& g : nodes_) n.push_back(g.name());
      name_ = "lim(" + join(n, ", ") + ")";
      return;
    }
    if (elems_.empty()) elems_ = compute_elements();
    words_ = cayley_words(identity(), gens_);
    if (words_.size() != elems_.size())
      throw Error(ErrorCode::not_a_group, "supplied limit generators do not generate the limit");
    if (generators_commute(gens_))
      name_ = abelian_name(invariants_from_orders(orders_by_powers(elems_)));
    else
      name_ = "finite group of order " + std::to_string(elems_.size());
  }

 private:
  std::vector<GroupElement> compute_elements() const {
    std::vector<std::vector<GroupElement>> pools;
    for (const auto& g : nodes_) pools.push_back(g.elements());
    return enumerate(pools);
  }

  std::vector<Group> nodes_;
  std::vector<LimitArrow> arrows_;
  std::optional<std::vector<GroupElement>> given_;
  mutable std::vector<GroupElement> elems_;
  std::map<GroupElement, FormalWord> words_;
  std::string name_;
};

template <class T>
const T& as(const std::shared_ptr<const GroupImpl>& impl, const char* what) {
  auto* p = dynamic_cast<const T*>(impl.get());
  if (!p) throw Error(ErrorCode::invalid_argument, std::string("group is not ") + what);
  return *p;
}

std::string join_keys(const std::vector<Group>& groups) {
  std::vector<std::string> k;
  for (const auto& g : groups) k.push_back(g.key());
  return join(k, ";");
}

std::string list_key(const std::vector<long>& v) {
  std::vector<std::string> s;
  for (long x : v) s.push_back(std::to_string(x));
  return "[" + join(s, ",") + "]";
}

}  // namespace
}  // namespace detail

using detail::GroupImpl;

namespace {

void require_member(const GroupImpl& g, const GroupElement& a) {
  if (!g.owns(a)) throw Error(ErrorCode::group_mismatch, "element does not belong to " + g.name());
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupElement

Group GroupElement::group() const {
  if (!group_) throw Error(ErrorCode::group_mismatch, "element without a group");
  return Group(group_);
}

bool GroupElement::is_identity() const { return *this == group().identity(); }

std::size_t GroupElement::length() const { return group().word_length(*this); }

std::string GroupElement::to_string() const { return group().format(*this); }

GroupElement GroupElement::operator*(const GroupElement& b) const { return group().multiply(*this, b); }

GroupElement GroupElement::inverse() const { return group().invert(*this); }

GroupElement GroupElement::pow(long exponent) const {
  GroupElement base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  GroupElement result = group().identity();
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool GroupElement::operator==(const GroupElement& b) const {
  if (group_ != b.group_) {
    if (!group_ || !b.group_) return false;
    if (group_->key() != b.group_->key()) return false;
  }
  return code_ == b.code_ && parts_ == b.parts_;
}

bool GroupElement::operator<(const GroupElement& b) const {
  if (code_ != b.code_) return code_ < b.code_;
  return parts_ < b.parts_;
}

// ---------------------------------------------------------------------------
// Group

Group GroupImpl::wrap(std::shared_ptr<GroupImpl> impl, std::string key) {
  impl->finish(std::move(key));
  return Group(std::shared_ptr<const GroupImpl>(std::move(impl)));
}

Group::Group() : Group(trivial()) {}

Group Group::trivial() {
  static const Group t = finite_abelian({});
  return t;
}

Group Group::cyclic(long n) {
  if (n == 1) return trivial();
  return finite_abelian({n});
}

Group Group::finite_abelian(std::vector<long> invariant_factors) {
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] < 2) throw Error(ErrorCode::invalid_argument, "invariant factors must be >= 2");
    if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
      throw Error(ErrorCode::invalid_argument, "invariant factors must form a divisor chain");
  }
  std::string key = "A" + detail::list_key(invariant_factors);
  return GroupImpl::wrap(std::make_shared<detail::AbelianImpl>(std::move(invariant_factors)), key);
}

Group Group::finite_table(std::vector<std::vector<std::size_t>> table) {
  std::string key = "T[";
  for (const auto& row : table) {
    for (std::size_t v : row) key += std::to_string(v) + ",";
    key += ";";
  }
  key += "]";
  return GroupImpl::wrap(std::make_shared<detail::TableImpl>(std::move(table)), key);
}

Group Group::from_permutations(const std::vector<std::vector<std::size_t>>& generators) {
  using Perm = std::vector<std::size_t>;
  const std::size_t n = generators.empty() ? 0 : generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorCode::invalid_argument, "permutations of different degrees");
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != i) throw Error(ErrorCode::invalid_argument, "not a permutation");
  }
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [n](const Perm& p, const Perm& q) {  // p after q
    Perm r(n);
    for (std::size_t x = 0; x < n; ++x) r[x] = p[q[x]];
    return r;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : generators) {
      Perm h = compose(elems[i], g);
      if (index.emplace(h, elems.size()).second) elems.push_back(h);
    }
  std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
  return finite_table(std::move(table));
}

Group Group::free(std::size_t rank) {
  return GroupImpl::wrap(std::make_shared<detail::FreeImpl>(rank), "F" + std::to_string(rank));
}

Group Group::free_product_cyclic(std::vector<long> orders) {
  std::string key = "P" + detail::list_key(orders);
  return GroupImpl::wrap(std::make_shared<detail::FpcImpl>(std::move(orders)), key);
}

Group Group::direct_product(std::vector<Group> factors) {
  std::string key = "X(" + detail::join_keys(factors) + ")";
  return GroupImpl::wrap(std::make_shared<detail::ProductImpl>(std::move(factors)), key);
}

Group Group::limit(std::vector<Group> nodes, std::vector<LimitArrow> arrows,
                   std::optional<std::vector<GroupElement>> generators) {
  std::string key = "L(" + detail::join_keys(nodes) + "|";
  for (const auto& a : arrows) {
    key += std::to_string(a.source) + ">" + std::to_string(a.target) + ":";
    for (const auto& img : a.map.generator_images()) key += img.to_string() + ",";
    key += ";";
  }
  key += ")";
  return GroupImpl::wrap(
      std::make_shared<detail::LimitImpl>(std::move(nodes), std::move(arrows), std::move(generators)), key);
}

GroupKind Group::kind() const { return impl_->kind(); }
std::string Group::name() const { return impl_->name(); }
const std::string& Group::key() const { return impl_->key(); }
bool Group::is_finite() const { return impl_->finite(); }

std::size_t Group::order() const {
  if (!impl_->finite()) throw Error(ErrorCode::infinite_without_radius, name() + " is infinite");
  return impl_->order();
}

bool Group::is_trivial() const { return impl_->finite() && impl_->order() == 1; }
GroupElement Group::identity() const { return impl_->identity(); }
const std::vector<GroupElement>& Group::generators() const { return impl_->generators(); }

GroupElement Group::generator(std::size_t i) const {
  if (i >= generators().size())
    throw Error(ErrorCode::unknown_generator, "generator index " + std::to_string(i) + " out of range");
  return generators()[i];
}

std::vector<std::string> Group::generator_names() const {
  std::vector<std::string> out;
  for (const auto& g : generators()) out.push_back(impl_->format(g));
  return out;
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
  require_member(*impl_, a);
  require_member(*impl_, b);
  return impl_->multiply(a, b);
}

GroupElement Group::invert(const GroupElement& a) const {
  require_member(*impl_, a);
  return impl_->invert(a);
}

GroupElement Group::normalize(const FormalWord& word) const {
  GroupElement r = identity();
  for (const auto& [g, e] : word) r = multiply(r, generator(g).pow(e));
  return r;
}

FormalWord Group::letters(const GroupElement& a) const {
  require_member(*impl_, a);
  return impl_->letters(a);
}

std::size_t Group::word_length(const GroupElement& a) const {
  require_member(*impl_, a);
  return impl_->length(a);
}

std::vector<GroupElement> Group::elements() const { return impl_->elements(); }
std::vector<GroupElement> Group::ball(std::size_t radius) const { return impl_->ball(radius); }

std::string Group::format(const GroupElement& a) const {
  require_member(*impl_, a);
  return impl_->format(a);
}

GroupElement Group::parse(const std::string& input) const {
  const std::string text = detail::trim_all(input);
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty element");
  GroupElement r = identity();
  for (const auto& token : detail::split_top(text, '*')) {
    if (token.empty()) throw Error(ErrorCode::parse_error, "empty factor in '" + input + "'");
    std::string base = token;
    long exp = 1;
    auto pieces = detail::split_top(token, '^');
    if (pieces.size() == 2) {
      base = pieces[0];
      exp = detail::parse_long(pieces[1]);
    } else if (pieces.size() > 2) {
      throw Error(ErrorCode::parse_error, "bad factor '" + token + "'");
    }
    GroupElement x;
    if (base == "1") {
      x = identity();
    } else {
      auto atom = impl_->parse_atom(base);
      if (!atom) throw Error(ErrorCode::unknown_generator, "unknown generator '" + base + "' in " + name());
      x = *atom;
    }
    r = multiply(r, x.pow(exp));
  }
  return r;
}

const std::vector<long>& Group::cyclic_orders() const {
  if (kind() == GroupKind::finite_abelian)
    return detail::as<detail::AbelianImpl>(impl_, "finite abelian").factors();
  return detail::as<detail::FpcImpl>(impl_, "a free product of cyclics").orders();
}

std::size_t Group::rank() const { return detail::as<detail::FreeImpl>(impl_, "free").rank(); }

const std::vector<Group>& Group::factors() const {
  if (kind() == GroupKind::limit) return detail::as<detail::LimitImpl>(impl_, "a limit").nodes();
  return detail::as<detail::ProductImpl>(impl_, "a direct product").factors();
}

const std::vector<LimitArrow>& Group::limit_arrows() const {
  return detail::as<detail::LimitImpl>(impl_, "a limit").arrows();
}

const std::vector<std::vector<std::size_t>>& Group::table() const {
  return detail::as<detail::TableImpl>(impl_, "a table group").table();
}

GroupElement Group::abelian(std::vector<long> residues) const {
  return detail::as<detail::AbelianImpl>(impl_, "finite abelian").reduce(std::move(residues));
}

GroupElement Group::table_element(std::size_t index) const {
  return detail::as<detail::TableImpl>(impl_, "a table group").at(index);
}

GroupElement Group::tuple(std::vector<GroupElement> parts) const {
  if (kind() == GroupKind::limit) return detail::as<detail::LimitImpl>(impl_, "a limit").from_parts(parts);
  const auto& p = detail::as<detail::ProductImpl>(impl_, "a direct product");
  if (parts.size() != p.factors().size()) throw Error(ErrorCode::invalid_argument, "wrong tuple size");
  GroupElement r = identity();
  for (std::size_t i = 0; i < parts.size(); ++i) r = multiply(r, embed(i, parts[i]));
  return r;
}

GroupElement Group::embed(std::size_t factor, const GroupElement& a) const {
  const auto& p = detail::as<detail::ProductImpl>(impl_, "a direct product");
  if (factor >= p.factors().size()) throw Error(ErrorCode::invalid_argument, "factor index out of range");
  require_member(*p.factors()[factor].impl(), a);
  return p.embed(factor, a);
}

bool Group::operator==(const Group& other) const { return impl_ == other.impl_ || key() == other.key(); }

// ---------------------------------------------------------------------------
// Homomorphism

struct Homomorphism::Impl {
  enum class Mode { images, projection, composite };
  Mode mode = Mode::images;
  Group source;
  Group target;
  std::vector<GroupElement> images;
  std::size_t index = 0;
  std::vector<Homomorphism> chain;  // applied front to back
  std::map<GroupElement, GroupElement> table;
};

namespace {

/// Extends generator images along the Cayley graph of a finite source and
/// fails on the first inconsistent edge.
std::map<GroupElement, GroupElement> tabulate(const Group& source, const Group& target,
                                              const std::vector<GroupElement>& images) {
  std::map<GroupElement, GroupElement> f;
  f.emplace(source.identity(), target.identity());
  std::deque<GroupElement> queue{source.identity()};
  const auto& gens = source.generators();
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    const GroupElement fg = f.at(g);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      GroupElement h = g * gens[i];
      GroupElement v = fg * images[i];
      auto it = f.find(h);
      if (it == f.end()) {
        f.emplace(h, v);
        queue.push_back(h);
      } else if (it->second != v) {
        throw Error(ErrorCode::not_a_homomorphism,
                    "generator images violate a relation of " + source.name() + " (at " + h.to_string() + ")");
      }
    }
  }
  return f;
}

void check_relations(const Group& source, const Group& target, const std::vector<GroupElement>& images) {
  switch (source.kind()) {
    case GroupKind::free:
      return;
    case GroupKind::free_product_cyclic: {
      const auto& orders = source.cyclic_orders();
      for (std::size_t i = 0; i < orders.size(); ++i)
        if (orders[i] != 0 && !images[i].pow(orders[i]).is_identity())
          throw Error(ErrorCode::not_a_homomorphism,
                      "image of generator " + std::to_string(i + 1) + " does not have order dividing " +
                          std::to_string(orders[i]));
      return;
    }
    case GroupKind::direct_product: {
      std::size_t off = 0;
      std::vector<std::pair<std::size_t, std::size_t>> ranges;
      for (const auto& f : source.factors()) {
        std::size_t n = f.generators().size();
        std::vector<GroupElement> sub(images.begin() + static_cast<long>(off),
                                      images.begin() + static_cast<long>(off + n));
        Homomorphism::from_images(f, target, sub);
        ranges.emplace_back(off, off + n);
        off += n;
      }
      for (std::size_t a = 0; a < ranges.size(); ++a)
        for (std::size_t b = a + 1; b < ranges.size(); ++b)
          for (std::size_t i = ranges[a].first; i < ranges[a].second; ++i)
            for (std::size_t j = ranges[b].first; j < ranges[b].second; ++j)
              if (images[i] * images[j] != images[j] * images[i])
                throw Error(ErrorCode::not_a_homomorphism, "images of different factors do not commute");
      return;
    }
    default:
      throw Error(ErrorCode::unsupported_shape, "cannot validate homomorphisms out of " + source.name());
  }
}

}  // namespace

Homomorphism Homomorphism::from_images(Group source, Group target, std::vector<GroupElement> images) {
  if (images.size() != source.generators().size())
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(source.generators().size()) +
                                                 " generator images, got " + std::to_string(images.size()));
  for (const auto& x : images)
    if (!target.impl()->owns(x)) throw Error(ErrorCode::group_mismatch, "image outside " + target.name());
  auto impl = std::make_shared<Impl>();
  if (source.is_finite())
    impl->table = tabulate(source, target, images);
  else
    check_relations(source, target, images);
  impl->source = std::move(source);
  impl->target = std::move(target);
  impl->images = std::move(images);
  Homomorphism h;
  h.impl_ = std::move(impl);
  return h;
}

Homomorphism Homomorphism::from_images(const Group& source, const Group& target,
                                       const std::vector<std::string>& images) {
  std::vector<GroupElement> parsed;
  for (const auto& s : images) parsed.push_back(target.parse(s));
  return from_images(source, target, std::move(parsed));
}

Homomorphism Homomorphism::identity(const Group& group) {
  auto impl = std::make_shared<Impl>();
  impl->source = group;
  impl->target = group;
  impl->images = group.generators();
  Homomorphism h;
  h.impl_ = std::move(impl);
  return h;
}

Homomorphism Homomorphism::trivial(const Group& source, const Group& target) {
  auto impl = std::make_shared<Impl>();
  impl->source = source;
  impl->target = target;
  impl->images.assign(source.generators().size(), target.identity());
  Homomorphism h;
  h.impl_ = std::move(impl);
  return h;
}

Homomorphism Homomorphism::projection(const Group& source, std::size_t index) {
  const auto& f = source.factors();
  if (index >= f.size()) throw Error(ErrorCode::invalid_argument, "projection index out of range");
  auto impl = std::make_shared<Impl>();
  impl->mode = Impl::Mode::projection;
  impl->source = source;
  impl->target = f[index];
  impl->index = index;
  Homomorphism h;
  h.impl_ = std::move(impl);
  return h;
}

Homomorphism Homomorphism::compose(const Homomorphism& second, const Homomorphism& first) {
  if (first.target() != second.source())
    throw Error(ErrorCode::group_mismatch, "cannot compose: " + first.target().name() + " vs " +
                                               second.source().name());
  auto impl = std::make_shared<Impl>();
  impl->mode = Impl::Mode::composite;
  impl->source = first.source();
  impl->target = second.target();
  impl->chain = {first, second};
  Homomorphism h;
  h.impl_ = std::move(impl);
  return h;
}

const Group& Homomorphism::source() const {
  if (!impl_) throw Error(ErrorCode::invalid_argument, "empty homomorphism");
  return impl_->source;
}

const Group& Homomorphism::target() const {
  if (!impl_) throw Error(ErrorCode::invalid_argument, "empty homomorphism");
  return impl_->target;
}

GroupElement Homomorphism::apply(const GroupElement& a) const {
  const Group& src = source();
  if (!src.impl()->owns(a))
    throw Error(ErrorCode::group_mismatch, "element is not in " + src.name());
  switch (impl_->mode) {
    case Impl::Mode::projection:
      return a.parts()[impl_->index];
    case Impl::Mode::composite: {
      GroupElement x = a;
      for (const auto& h : impl_->chain) x = h.apply(x);
      return x;
    }
    case Impl::Mode::images:
      break;
  }
  if (!impl_->table.empty()) return impl_->table.at(a);
  GroupElement r = impl_->target.identity();
  for (const auto& [g, e] : src.letters(a)) r = r * impl_->images[g].pow(e);
  return r;
}

std::vector<GroupElement> Homomorphism::generator_images() const {
  if (impl_ && impl_->mode == Impl::Mode::images) return impl_->images;
  std::vector<GroupElement> out;
  for (const auto& g : source().generators()) out.push_back(apply(g));
  return out;
}

bool Homomorphism::has_images() const { return impl_ && impl_->mode == Impl::Mode::images; }

}  // namespace cgrad
