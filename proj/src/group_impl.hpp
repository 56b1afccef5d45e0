#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgrad/groups.hpp"

namespace cgrad::detail {

class GroupImpl : public std::enable_shared_from_this<GroupImpl> {
 public:
  explicit GroupImpl(GroupKind kind) : kind_(kind) {}
  virtual ~GroupImpl() = default;

  GroupKind kind() const { return kind_; }
  const std::string& key() const { return key_; }
  const std::vector<GroupElement>& generators() const { return gens_; }

  virtual bool finite() const = 0;
  virtual std::size_t order() const = 0;  // 0 when infinite
  virtual std::string name() const = 0;
  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement invert(const GroupElement& a) const = 0;
  virtual FormalWord letters(const GroupElement& a) const = 0;
  virtual std::size_t length(const GroupElement& a) const = 0;
  virtual std::vector<GroupElement> elements() const = 0;
  virtual std::vector<GroupElement> ball(std::size_t radius) const = 0;
  virtual std::string format(const GroupElement& a) const = 0;
  /// A single factor of a product expression, without exponent.
  virtual std::optional<GroupElement> parse_atom(const std::string& token) const = 0;

  GroupElement make(std::vector<long> code, std::vector<GroupElement> parts = {}) const;
  bool owns(const GroupElement& a) const;

  /// Called once after the shared pointer exists.
  void finish(std::string key);

  static Group wrap(std::shared_ptr<GroupImpl> impl, std::string key);

 protected:
  virtual std::vector<GroupElement> compute_generators() const = 0;
  virtual void after_generators() {}
  std::vector<GroupElement> gens_;

 private:
  GroupKind kind_;
  std::string key_;
};

/// Invariant factors of a finite abelian group given the multiset of its
/// element orders.
std::vector<long> invariants_from_orders(const std::vector<long>& orders);

std::string abelian_name(const std::vector<long>& invariants);

/// Split at top-level occurrences of `sep`, ignoring separators nested in
/// brackets or parentheses.
std::vector<std::string> split_top(const std::string& text, char sep);

}  // namespace cgrad::detail
