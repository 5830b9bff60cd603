#include "skewprime/indexpred.hpp"

#include <algorithm>
#include <limits>

#include "skewprime/numeric.hpp"

namespace skewprime {

namespace {
constexpr std::size_t kDnfClauseLimit = 20000;
}

// ---------------------------------------------------------------------------
// Node representation

struct IndexPred::Node {
  enum class Kind { True, False, Ge, Le, Parity, InSet, NotInSet, And, Or, Not };
  Kind kind;
  std::int64_t c = 0;       // Ge/Le bound
  bool even = true;          // Parity
  std::set<std::int64_t> s;  // InSet / NotInSet
  NodePtr l, r;              // And/Or children, Not child in l

  static NodePtr mk(Kind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
  }
};

using Node = IndexPred::Node;
using Kind = Node::Kind;

IndexPred IndexPred::always() { return IndexPred(Node::mk(Kind::True)); }
IndexPred IndexPred::never() { return IndexPred(Node::mk(Kind::False)); }

IndexPred IndexPred::ge(std::int64_t c) {
  auto n = Node::mk(Kind::Ge);
  n->c = c;
  return IndexPred(n);
}

IndexPred IndexPred::le(std::int64_t c) {
  auto n = Node::mk(Kind::Le);
  n->c = c;
  return IndexPred(n);
}

IndexPred IndexPred::eq(std::int64_t c) { return in_set({c}); }

IndexPred IndexPred::parity(bool even) {
  auto n = Node::mk(Kind::Parity);
  n->even = even;
  return IndexPred(n);
}

IndexPred IndexPred::in_set(std::set<std::int64_t> s) {
  if (s.empty()) return never();
  auto n = Node::mk(Kind::InSet);
  n->s = std::move(s);
  return IndexPred(n);
}

IndexPred IndexPred::operator&&(const IndexPred& o) const {
  if (node_->kind == Kind::True) return o;
  if (o.node_->kind == Kind::True) return *this;
  if (node_->kind == Kind::False || o.node_->kind == Kind::False) return never();
  auto n = Node::mk(Kind::And);
  n->l = node_;
  n->r = o.node_;
  return IndexPred(n);
}

IndexPred IndexPred::operator||(const IndexPred& o) const {
  if (node_->kind == Kind::False) return o;
  if (o.node_->kind == Kind::False) return *this;
  if (node_->kind == Kind::True || o.node_->kind == Kind::True) return always();
  auto n = Node::mk(Kind::Or);
  n->l = node_;
  n->r = o.node_;
  return IndexPred(n);
}

IndexPred IndexPred::operator!() const {
  auto n = Node::mk(Kind::Not);
  n->l = node_;
  return IndexPred(n);
}

bool IndexPred::eval(std::int64_t i) const {
  struct Ev {
    static bool run(const Node& n, std::int64_t i) {
      switch (n.kind) {
        case Kind::True: return true;
        case Kind::False: return false;
        case Kind::Ge: return i >= n.c;
        case Kind::Le: return i <= n.c;
        case Kind::Parity: return ((i % 2 + 2) % 2 == 0) == n.even;
        case Kind::InSet: return n.s.count(i) > 0;
        case Kind::NotInSet: return n.s.count(i) == 0;
        case Kind::And: return run(*n.l, i) && run(*n.r, i);
        case Kind::Or: return run(*n.l, i) || run(*n.r, i);
        case Kind::Not: return !run(*n.l, i);
      }
      return false;
    }
  };
  return Ev::run(*node_, i);
}

IndexPred IndexPred::subst_affine(std::int64_t a, std::int64_t b) const {
  if (a != 1 && a != -1 && a != 0)
    fail(Errc::UnsupportedIdealClass, "index predicate substitution needs |a| <= 1");
  struct Su {
    static IndexPred run(const Node& n, std::int64_t a, std::int64_t b) {
      switch (n.kind) {
        case Kind::True: return always();
        case Kind::False: return never();
        case Kind::Ge:
          // a*i + b >= c
          if (a == 1) return ge(n.c - b);
          if (a == -1) return le(b - n.c);
          return b >= n.c ? always() : never();
        case Kind::Le:
          if (a == 1) return le(n.c - b);
          if (a == -1) return ge(b - n.c);
          return b <= n.c ? always() : never();
        case Kind::Parity: {
          bool b_even = ((b % 2 + 2) % 2) == 0;
          if (a == 0) return b_even == n.even ? always() : never();
          // |a| odd: a*i + b has the parity of i + b
          return parity(b_even ? n.even : !n.even);
        }
        case Kind::InSet:
        case Kind::NotInSet: {
          std::set<std::int64_t> t;
          if (a == 0) {
            bool member = n.s.count(b) > 0;
            bool want = (n.kind == Kind::InSet);
            return member == want ? always() : never();
          }
          for (auto v : n.s) t.insert(a == 1 ? v - b : b - v);
          IndexPred inside = in_set(std::move(t));
          return n.kind == Kind::InSet ? inside : !inside;
        }
        case Kind::And: return run(*n.l, a, b) && run(*n.r, a, b);
        case Kind::Or: return run(*n.l, a, b) || run(*n.r, a, b);
        case Kind::Not: return !run(*n.l, a, b);
      }
      return never();
    }
  };
  return Su::run(*node_, a, b);
}

// ---------------------------------------------------------------------------
// DNF + satisfiability

namespace {

// Atom in a conjunction after negation pushing.
struct Atom {
  Kind kind;  // Ge, Le, Parity, InSet, NotInSet, True, False
  std::int64_t c = 0;
  bool even = true;
  std::set<std::int64_t> s;
};

using Clause = std::vector<Atom>;  // conjunction
using Dnf = std::vector<Clause>;   // disjunction

Dnf to_dnf(const Node& n, bool negate) {
  switch (n.kind) {
    case Kind::True:
      return negate ? Dnf{} : Dnf{Clause{}};
    case Kind::False:
      return negate ? Dnf{Clause{}} : Dnf{};
    case Kind::Ge:
      if (negate) return {{Atom{Kind::Le, n.c - 1, true, {}}}};
      return {{Atom{Kind::Ge, n.c, true, {}}}};
    case Kind::Le:
      if (negate) return {{Atom{Kind::Ge, n.c + 1, true, {}}}};
      return {{Atom{Kind::Le, n.c, true, {}}}};
    case Kind::Parity:
      return {{Atom{Kind::Parity, 0, negate ? !n.even : n.even, {}}}};
    case Kind::InSet:
      return {{Atom{negate ? Kind::NotInSet : Kind::InSet, 0, true, n.s}}};
    case Kind::NotInSet:
      return {{Atom{negate ? Kind::InSet : Kind::NotInSet, 0, true, n.s}}};
    case Kind::Not:
      return to_dnf(*n.l, !negate);
    case Kind::And:
    case Kind::Or: {
      bool conj = (n.kind == Kind::And) != negate;
      Dnf a = to_dnf(*n.l, negate), b = to_dnf(*n.r, negate);
      if (!conj) {
        for (auto& cl : b) a.push_back(std::move(cl));
        if (a.size() > kDnfClauseLimit) fail(Errc::ResourceLimit, "predicate DNF too large");
        return a;
      }
      Dnf out;
      for (const auto& ca : a)
        for (const auto& cb : b) {
          Clause c = ca;
          c.insert(c.end(), cb.begin(), cb.end());
          out.push_back(std::move(c));
          if (out.size() > kDnfClauseLimit) fail(Errc::ResourceLimit, "predicate DNF too large");
        }
      return out;
    }
  }
  return {};
}

constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::min();

// Decide satisfiability of a conjunction of atoms, producing a witness.
bool clause_sat(const Clause& clause, std::int64_t* witness) {
  std::int64_t lo = kNoBound, hi = kNoBound;  // kNoBound = unbounded
  bool has_lo = false, has_hi = false;
  int parity = -1;  // -1 none, 0 even, 1 odd
  std::optional<std::set<std::int64_t>> include;
  std::set<std::int64_t> exclude;

  for (const auto& a : clause) {
    switch (a.kind) {
      case Kind::Ge:
        lo = has_lo ? std::max(lo, a.c) : a.c;
        has_lo = true;
        break;
      case Kind::Le:
        hi = has_hi ? std::min(hi, a.c) : a.c;
        has_hi = true;
        break;
      case Kind::Parity: {
        int want = a.even ? 0 : 1;
        if (parity != -1 && parity != want) return false;
        parity = want;
        break;
      }
      case Kind::InSet: {
        if (!include) {
          include = a.s;
        } else {
          std::set<std::int64_t> inter;
          std::set_intersection(include->begin(), include->end(), a.s.begin(), a.s.end(),
                                std::inserter(inter, inter.begin()));
          include = std::move(inter);
        }
        break;
      }
      case Kind::NotInSet:
        exclude.insert(a.s.begin(), a.s.end());
        break;
      default:
        break;
    }
  }

  auto admissible = [&](std::int64_t i) {
    if (has_lo && i < lo) return false;
    if (has_hi && i > hi) return false;
    if (parity != -1 && ((i % 2 + 2) % 2) != parity) return false;
    return exclude.count(i) == 0;
  };

  if (include) {
    for (auto i : *include)
      if (admissible(i)) {
        if (witness) *witness = i;
        return true;
      }
    return false;
  }

  // Interval scan: a window of 2*(|exclude| + 2) integers of the right parity
  // must contain an admissible point if one exists at all.
  std::int64_t tries = 2 * (std::int64_t)(exclude.size() + 2);
  if (has_lo && has_hi && hi - lo + 1 <= 2 * tries) {
    for (std::int64_t i = lo; i <= hi; ++i)
      if (admissible(i)) {
        if (witness) *witness = i;
        return true;
      }
    return false;
  }
  std::int64_t start;
  std::int64_t step;
  if (has_lo) {
    start = lo;
    step = 1;
  } else if (has_hi) {
    start = hi;
    step = -1;
  } else {
    start = 0;
    step = 1;
  }
  std::int64_t i = start;
  for (std::int64_t t = 0; t < tries + 2; ++t, i += step) {
    if (admissible(i)) {
      if (witness) *witness = i;
      return true;
    }
  }
  return false;
}

}  // namespace

bool IndexPred::satisfiable(std::int64_t* witness) const {
  Dnf d = to_dnf(*node_, false);
  for (const auto& cl : d)
    if (clause_sat(cl, witness)) return true;
  return false;
}

bool IndexPred::has_at_least(int n) const {
  IndexPred p = *this;
  for (int k = 0; k < n; ++k) {
    std::int64_t w;
    if (!p.satisfiable(&w)) return false;
    p = p && !in_set({w});
  }
  return true;
}

bool IndexPred::implies(const IndexPred& o, std::int64_t* counterexample) const {
  return !(*this && !o).satisfiable(counterexample);
}

bool IndexPred::equivalent(const IndexPred& o) const { return implies(o) && o.implies(*this); }

// ---------------------------------------------------------------------------
// Printing / serialization

std::string IndexPred::str() const {
  struct Pr {
    static std::string run(const Node& n) {
      switch (n.kind) {
        case Kind::True: return "true";
        case Kind::False: return "false";
        case Kind::Ge: return "i>=" + std::to_string(n.c);
        case Kind::Le: return "i<=" + std::to_string(n.c);
        case Kind::Parity: return n.even ? "even" : "odd";
        case Kind::InSet:
        case Kind::NotInSet: {
          std::string out = n.kind == Kind::InSet ? "i in {" : "i notin {";
          bool first = true;
          for (auto v : n.s) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
          }
          return out + "}";
        }
        case Kind::And: return "(" + run(*n.l) + " & " + run(*n.r) + ")";
        case Kind::Or: return "(" + run(*n.l) + " | " + run(*n.r) + ")";
        case Kind::Not: return "!" + run(*n.l);
      }
      return "?";
    }
  };
  return Pr::run(*node_);
}

Json IndexPred::to_json() const {
  structJ {
    static Json run(const Node& n) {
      Json j;
      switch (n.kind) {
        case Kind::True: j["op"] = "true"; break;
        case Kind::False: j["op"] = "false"; break;
        case Kind::Ge:
          j["op"] = "ge";
          j["c"] = n.c;
          break;
        case Kind::Le:
          j["op"] = "le";
          j["c"] = n.c;
          break;
        case Kind::Parity:
          j["op"] = "parity";
          j["even"] = n.even;
          break;
        case Kind::InSet:
        case Kind::NotInSet: {
          j["op"] = n.kind == Kind::InSet ? "in" : "notin";
          j["set"] = Json::array();
          for (auto v : n.s) j["set"].push_back(v);
          break;
        }
        case Kind::And:
        case Kind::Or:
          j["op"] = n.kind == Kind::And ? "and" : "or";
          j["args"] = Json::array({run(*n.l), run(*n.r)});
          break;
        case Kind::Not:
          j["op"] = "not";
          j["arg"] = run(*n.l);
          break;
      }
      return j;
    }
  };
  return J::run(*node_);
}

IndexPred IndexPred::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("op"))
    fail(Errc::SchemaViolation, "predicate: expected object with \"op\"");
  const std::string op = j.at("op").get<std::string>();
  if (op == "true") return always();
  if (op == "false") return never();
  if (op == "ge") return ge(j.at("c").get<std::int64_t>());
  if (op == "le") return le(j.at("c").get<std::int64_t>());
  if (op == "eq") return eq(j.at("c").get<std::int64_t>());
  if (op == "parity") return parity(j.at("even").get<bool>());
  if (op == "in" || op == "notin") {
    std::set<std::int64_t> s;
    for (const auto& v : j.at("set")) s.insert(v.get<std::int64_t>());
    IndexPred p = in_set(std::move(s));
    return op == "in" ? p : !p;
  }
  if (op == "and" || op == "or") {
    const auto& args = j.at("args");
    if (!args.is_array() || args.empty()) fail(Errc::SchemaViolation, "predicate: empty args");
    IndexPred acc = from_json(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i)
      acc = op == "and" ? (acc && from_json(args[i])) : (acc || from_json(args[i]));
    return acc;
  }
  if (op == "not") return !from_json(j.at("arg"));
  fail(Errc::SchemaViolation, "predicate: unknown op \"" + op + "\"");
}

// ---------------------------------------------------------------------------
// IndexMap

IndexMap::IndexMap(std::vector<Branch> branches) : branches_(std::move(branches)) {
  if (branches_.empty()) fail(Errc::InvalidInput, "index map needs at least one branch");
  IndexPred seen = IndexPred::never();
  for (auto& br : branches_) {
    if (br.a != 1 && br.a != -1 && br.a != 0)
      fail(Errc::InvalidInput, "index map branch slope must be -1, 0, or 1");
    effective_.push_back(br.guard && !seen);
    seen = seen || br.guard;
  }
}

IndexMap IndexMap::shift(std::int64_t offset) {
  return IndexMap({Branch{IndexPred::always(), 1, offset}});
}

std::int64_t IndexMap::apply(std::int64_t i) const {
  for (const auto& br : branches_)
    if (br.guard.eval(i)) return br.a * i + br.b;
  fail(Errc::InvalidInput, "index map undefined at " + std::to_string(i));
}

IndexMap IndexMap::compose_after(const IndexMap& inner) const {
  std::vector<Branch> out;
  for (std::size_t ii = 0; ii < inner.branches_.size(); ++ii) {
    const auto& bi = inner.branches_[ii];
    for (std::size_t oo = 0; oo < branches_.size(); ++oo) {
      const auto& bo = branches_[oo];
      Branch c;
      c.guard = inner.effective_[ii] && effective_[oo].subst_affine(bi.a, bi.b);
      c.a = bo.a * bi.a;
      c.b = bo.a * bi.b + bo.b;
      out.push_back(std::move(c));
    }
  }
  return IndexMap(std::move(out));
}

IndexPred IndexMap::preimage_pred(const IndexPred& p) const {
  IndexPred acc = IndexPred::never();
  for (std::size_t i = 0; i < branches_.size(); ++i)
    acc = acc || (effective_[i] && p.subst_affine(branches_[i].a, branches_[i].b));
  return acc;
}

IndexPred IndexMap::image_pred(const IndexPred& dom) const {
  IndexPred acc = IndexPred::never();
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    const auto& br = branches_[i];
    IndexPred src = dom && effective_[i];
    if (br.a == 0) {
      if (src.satisfiable()) acc = acc || IndexPred::eq(br.b);
    } else {
      // j = a*i + b  <=>  i = a*(j - b) = a*j - a*b
      acc = acc || src.subst_affine(br.a, br.a == 1 ? -br.b : br.b);
    }
  }
  return acc;
}

bool IndexMap::defined_on(const IndexPred& dom, std::int64_t* gap) const {
  IndexPred covered = IndexPred::never();
  for (const auto& br : branches_) covered = covered || br.guard;
  return dom.implies(covered, gap);
}

bool IndexMap::injective_on(const IndexPred& dom, std::int64_t* clash_value) const {
  std::vector<IndexPred> images;
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    const auto& br = branches_[i];
    IndexPred src = dom && effective_[i];
    if (br.a == 0) {
      // constant branch: injective only on at most one point
      if (src.has_at_least(2)) {
        if (clash_value) *clash_value = br.b;
        return false;
      }
      images.push_back(src.satisfiable() ? IndexPred::eq(br.b) : IndexPred::never());
    } else {
      images.push_back(src.subst_affine(br.a, br.a == 1 ? -br.b : br.b));
    }
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      std::int64_t w;
      if ((images[i] && images[j]).satisfiable(&w)) {
        if (clash_value) *clash_value = w;
        return false;
      }
    }
  return true;
}

bool IndexMap::bijective_on(const IndexPred& dom) const {
  if (!defined_on(dom)) return false;
  if (!injective_on(dom)) return false;
  if (!maps_into(dom)) return false;
  return dom.implies(image_pred(dom));
}

bool IndexMap::maps_into(const IndexPred& dom, std::int64_t* escape) const {
  return image_pred(dom).implies(dom, escape);
}

bool IndexMap::equal_on(const IndexMap& o, const IndexPred& dom,
                        std::int64_t* counterexample) const {
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    for (std::size_t j = 0; j < o.branches_.size(); ++j) {
      IndexPred region = dom && effective_[i] && o.effective_[j];
      const auto& b1 = branches_[i];
      const auto& b2 = o.branches_[j];
      if (b1.a == b2.a && b1.b == b2.b) continue;
      if (b1.a != b2.a) {
        // equality only at the single solution of (a1-a2) i = b2 - b1
        std::int64_t da = b1.a - b2.a, db = b2.b - b1.b;
        if (db % da == 0) region = region && !IndexPred::eq(db / da);
      }
      std::int64_t w;
      if (region.satisfiable(&w)) {
        if (counterexample) *counterexample = w;
        return false;
      }
    }
  }
  return true;
}

std::string IndexMap::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& br : branches_) {
    if (!first) out += "; ";
    first = false;
    std::string expr;
    if (br.a == 0) {
      expr = std::to_string(br.b);
    } else {
      expr = br.a == 1 ? "i" : "-i";
      if (br.b > 0) expr += "+" + std::to_string(br.b);
      if (br.b < 0) expr += std::to_string(br.b);
    }
    out += "i->" + expr + " if " + br.guard.str();
  }
  return out + "}";
}

Json IndexMap::to_json() const {
  Json arr = Json::array();
  for (const auto& br : branches_) {
    Json b;
    b["guard"] = br.guard.to_json();
    b["a"] = br.a;
    b["b"] = br.b;
    arr.push_back(std::move(b));
  }
  Json j;
  j["branches"] = std::move(arr);
  return j;
}

IndexMap IndexMap::from_json(const Json& j) {
  std::vector<Branch> bs;
  for (const auto& b : j.at("branches")) {
    Branch br;
    br.guard = IndexPred::from_json(b.at("guard"));
    br.a = b.at("a").get<std::int64_t>();
    br.b = b.at("b").get<std::int64_t>();
    bs.push_back(std::move(br));
  }
  return IndexMap(std::move(bs));
}

}  // namespace skewprime
