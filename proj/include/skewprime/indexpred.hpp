#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skewprime/verdict.hpp"

namespace skewprime {

/// Predicate over a single integer index variable.
///
/// The algebra is boolean combinations of comparisons with constants,
/// parity conditions, and finite sets.  It is closed under substitution of
/// affine maps i -> a*i + b with |a| <= 1, and satisfiability (with witness
/// extraction) is decided exactly.  That makes containment and equality of
/// the pattern ideals built on top of it exact decisions.
class IndexPred {
public:
  IndexPred() : IndexPred(always()) {}

  static IndexPred always();
  static IndexPred never();
  static IndexPred ge(std::int64_t c);
  static IndexPred le(std::int64_t c);
  static IndexPred eq(std::int64_t c);
  static IndexPred parity(bool even);
  static IndexPred in_set(std::set<std::int64_t> s);

  IndexPred operator&&(const IndexPred& o) const;
  IndexPred operator||(const IndexPred& o) const;
  IndexPred operator!() const;

  bool eval(std::int64_t i) const;

  /// Predicate j -> this(a*j + b).  Requires a in {-1, 0, 1}.
  IndexPred subst_affine(std::int64_t a, std::int64_t b) const;

  bool satisfiable(std::int64_t* witness = nullptr) const;
  /// True when at least `n` distinct integers satisfy the predicate (n <= 3).
  bool has_at_least(int n) const;
  bool implies(const IndexPred& o, std::int64_t* counterexample = nullptr) const;
  bool equivalent(const IndexPred& o) const;

  std::string str() const;
  Json to_json() const;
  static IndexPred from_json(const Json& j);

private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  explicit IndexPred(NodePtr n) : node_(std::move(n)) {}
  NodePtr node_;
};

/// Piecewise affine map on integer indices: finitely many branches, each an
/// affine map i -> a*i + b (a in {-1, 0, 1}) guarded by an IndexPred.
/// Branches apply first-match.  Constant branches (a == 0) are only injective
/// on singleton guards, which the injectivity check accounts for.
class IndexMap {
public:
  struct Branch {
    IndexPred guard;
    std::int64_t a = 1;
    std::int64_t b = 0;
  };

  IndexMap() : IndexMap(shift(0)) {}
  explicit IndexMap(std::vector<Branch> branches);

  static IndexMap shift(std::int64_t offset);

  std::int64_t apply(std::int64_t i) const;  // throws InvalidInput if no guard matches

  /// Composition (this ∘ inner): first inner, then this.
  IndexMap compose_after(const IndexMap& inner) const;

  /// Predicate "p(map(i))" restricted to where the map is defined.
  IndexPred preimage_pred(const IndexPred& p) const;

  /// Predicate describing { map(i) : dom(i) }.
  IndexPred image_pred(const IndexPred& dom) const;

  bool defined_on(const IndexPred& dom, std::int64_t* gap = nullptr) const;
  bool injective_on(const IndexPred& dom, std::int64_t* clash_value = nullptr) const;
  bool bijective_on(const IndexPred& dom) const;
  bool maps_into(const IndexPred& dom, std::int64_t* escape = nullptr) const;

  /// Exact pointwise equality with another map over `dom`.
  bool equal_on(const IndexMap& o, const IndexPred& dom,
                std::int64_t* counterexample = nullptr) const;

  const std::vector<Branch>& branches() const { return branches_; }

  std::string str() const;
  Json to_json() const;
  static IndexMap from_json(const Json& j);

private:
  std::vector<Branch> branches_;
  std::vector<IndexPred> effective_;  // guard_i and not guard_{<i}
};

}  // namespace skewprime
