#include "skewprime/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "skewprime/numeric.hpp"

namespace skewprime {

namespace {

bool exponent_kind(MonoidKind k) { return k != MonoidKind::Free; }

std::int64_t exp_len(const std::vector<std::int64_t>& v) {
  std::int64_t n = 0;
  for (auto e : v) n += e < 0 ? -e : e;
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// MonoidSpec

MonoidSpec MonoidSpec::free_monoid(std::vector<std::string> alphabet) {
  if (alphabet.empty()) fail(Errc::InvalidInput, "free monoid needs an alphabet");
  return MonoidSpec{MonoidKind::Free, std::move(alphabet)};
}

MonoidSpec MonoidSpec::free_commutative(std::vector<std::string> alphabet) {
  if (alphabet.empty()) fail(Errc::InvalidInput, "free commutative monoid needs an alphabet");
  return MonoidSpec{MonoidKind::FreeComm, std::move(alphabet)};
}

MonoidSpec MonoidSpec::natural(std::string gen) { return MonoidSpec{MonoidKind::Natural, {gen}}; }

MonoidSpec MonoidSpec::integers(std::string gen) {
  return MonoidSpec{MonoidKind::Integers, {gen}};
}

MonoidSpec MonoidSpec::x2y2() { return MonoidSpec{MonoidKind::X2Y2, {"x", "y"}}; }

MonoidSpec MonoidSpec::heisenberg(bool z_invertible) {
  return MonoidSpec{z_invertible ? MonoidKind::HeisenbergZinv : MonoidKind::Heisenberg,
                    {"x", "y", "z"}};
}

bool MonoidSpec::commutative() const {
  switch (kind) {
    case MonoidKind::FreeComm:
    case MonoidKind::Natural:
    case MonoidKind::Integers:
    case MonoidKind::X2Y2:
      return true;
    case MonoidKind::Free:
      return alphabet.size() <= 1;
    default:
      return false;
  }
}

Json MonoidSpec::to_json() const {
  Json j;
  switch (kind) {
    case MonoidKind::Free: j["kind"] = "free"; break;
    case MonoidKind::FreeComm: j["kind"] = "free-commutative"; break;
    case MonoidKind::Natural: j["kind"] = "natural"; break;
    case MonoidKind::Integers: j["kind"] = "integers"; break;
    case MonoidKind::X2Y2: j["kind"] = "builtin-x2y2"; break;
    case MonoidKind::Heisenberg: j["kind"] = "builtin-heisenberg"; break;
    case MonoidKind::HeisenbergZinv: j["kind"] = "builtin-heisenberg-zinv"; break;
  }
  j["alphabet"] = alphabet;
  return j;
}

MonoidSpec MonoidSpec::from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  std::vector<std::string> alphabet;
  if (j.contains("alphabet")) alphabet = j.at("alphabet").get<std::vector<std::string>>();
  if (kind == "free") return free_monoid(alphabet);
  if (kind == "free-commutative") return free_commutative(alphabet);
  if (kind == "natural") return natural(alphabet.empty() ? "g" : alphabet[0]);
  if (kind == "integers") return integers(alphabet.empty() ? "g" : alphabet[0]);
  if (kind == "builtin-x2y2") return x2y2();
  if (kind == "builtin-heisenberg") return heisenberg(false);
  if (kind == "builtin-heisenberg-zinv") return heisenberg(true);
  fail(Errc::SchemaViolation, "unknown monoid kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// Word basics

std::int64_t Word::length() const {
  if (kind == MonoidKind::Free) return (std::int64_t)v.size();
  return exp_len(v);
}

bool Word::is_identity() const {
  if (kind == MonoidKind::Free) return v.empty();
  return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 0; });
}

bool Word::operator<(const Word& o) const {
  std::int64_t la = length(), lb = o.length();
  if (la != lb) return la < lb;
  if (kind == MonoidKind::Free) return v < o.v;
  // Exponent kinds: earlier generators first, so more x's compares smaller.
  for (std::size_t i = 0; i < v.size() && i < o.v.size(); ++i)
    if (v[i] != o.v[i]) return v[i] > o.v[i];
  return v.size() < o.v.size();
}

namespace {

std::size_t exp_rank(const MonoidSpec& spec) {
  switch (spec.kind) {
    case MonoidKind::FreeComm: return spec.alphabet.size();
    case MonoidKind::Natural:
    case MonoidKind::Integers: return 1;
    case MonoidKind::X2Y2: return 2;
    case MonoidKind::Heisenberg:
    case MonoidKind::HeisenbergZinv: return 3;
    default: return 0;
  }
}

void check_word(const MonoidSpec& spec, const Word& w) {
  if (w.kind != spec.kind) fail(Errc::InvalidWord, "word kind does not match monoid");
  if (spec.kind == MonoidKind::Free) {
    for (auto i : w.v)
      if (i < 0 || (std::size_t)i >= spec.alphabet.size())
        fail(Errc::InvalidWord, "letter index out of range");
    return;
  }
  if (w.v.size() != exp_rank(spec)) fail(Errc::InvalidWord, "exponent vector has wrong rank");
  switch (spec.kind) {
    case MonoidKind::FreeComm:
    case MonoidKind::Natural:
      for (auto e : w.v)
        if (e < 0) fail(Errc::InvalidWord, "negative exponent");
      break;
    case MonoidKind::X2Y2:
      if (w.v[0] < 0 || w.v[1] < 0 || w.v[1] > 1) fail(Errc::InvalidWord, "not an x2y2 normal form");
      break;
    case MonoidKind::Heisenberg:
      if (w.v[0] < 0 || w.v[1] < 0 || w.v[2] < 0)
        fail(Errc::InvalidWord, "negative exponent in heisenberg word");
      break;
    case MonoidKind::HeisenbergZinv:
      if (w.v[0] < 0 || w.v[1] < 0) fail(Errc::InvalidWord, "negative x/y exponent");
      break;
    default:
      break;
  }
}

}  // namespace

Word identity(const MonoidSpec& spec) {
  Word w;
  w.kind = spec.kind;
  if (exponent_kind(spec.kind)) w.v.assign(exp_rank(spec), 0);
  return w;
}

std::vector<Word> generators(const MonoidSpec& spec) {
  std::vector<Word> out;
  if (spec.kind == MonoidKind::Free) {
    for (std::size_t i = 0; i < spec.alphabet.size(); ++i)
      out.push_back(Word{spec.kind, {(std::int64_t)i}});
    return out;
  }
  std::size_t rank = exp_rank(spec);
  auto unit = [&](std::size_t pos, std::int64_t val) {
    Word w = identity(spec);
    w.v[pos] = val;
    return w;
  };
  switch (spec.kind) {
    case MonoidKind::Natural:
      out.push_back(unit(0, 1));
      break;
    case MonoidKind::Integers:
      out.push_back(unit(0, 1));
      out.push_back(unit(0, -1));
      break;
    case MonoidKind::HeisenbergZinv:
      for (std::size_t i = 0; i < rank; ++i) out.push_back(unit(i, 1));
      out.push_back(unit(2, -1));
      break;
    default:
      for (std::size_t i = 0; i < rank; ++i) out.push_back(unit(i, 1));
      break;
  }
  return out;
}

std::vector<std::string> generator_names(const MonoidSpec& spec) {
  std::vector<std::string> names;
  switch (spec.kind) {
    case MonoidKind::Integers:
      names = {spec.alphabet[0], spec.alphabet[0] + "^-1"};
      break;
    case MonoidKind::HeisenbergZinv:
      names = {"x", "y", "z", "z^-1"};
      break;
    default:
      names = spec.alphabet;
      break;
  }
  return names;
}

Word mul(const MonoidSpec& spec, const Word& a, const Word& b) {
  check_word(spec, a);
  check_word(spec, b);
  Word r = identity(spec);
  switch (spec.kind) {
    case MonoidKind::Free:
      r.v = a.v;
      r.v.insert(r.v.end(), b.v.begin(), b.v.end());
      return r;
    case MonoidKind::FreeComm:
    case MonoidKind::Natural:
    case MonoidKind::Integers:
      for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = a.v[i] + b.v[i];
      return r;
    case MonoidKind::X2Y2: {
      // (x^a y^e)(x^a' y^e'): commute, then y^2 -> x^2.
      std::int64_t xa = a.v[0] + b.v[0], ye = a.v[1] + b.v[1];
      if (ye >= 2) {
        xa += 2;
        ye -= 2;
      }
      r.v = {xa, ye};
      return r;
    }
    case MonoidKind::Heisenberg:
    case MonoidKind::HeisenbergZinv: {
      // y^b x^a = x^a y^b z^(a*b) since yx = xyz with z central.
      std::int64_t x = a.v[0] + b.v[0];
      std::int64_t y = a.v[1] + b.v[1];
      std::int64_t z = a.v[2] + b.v[2] + b.v[0] * a.v[1];
      r.v = {x, y, z};
      return r;
    }
  }
  return r;
}

Word word_pow(const MonoidSpec& spec, const Word& a, std::int64_t n) {
  Word r = identity(spec);
  for (std::int64_t i = 0; i < n; ++i) r = mul(spec, r, a);
  return r;
}

std::string word_str(const MonoidSpec& spec, const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  auto app = [&](const std::string& name, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += ".";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  if (spec.kind == MonoidKind::Free) {
    // run-length collapse for readability
    std::size_t i = 0;
    while (i < w.v.size()) {
      std::size_t j = i;
      while (j < w.v.size() && w.v[j] == w.v[i]) ++j;
      app(spec.alphabet[(std::size_t)w.v[i]], (std::int64_t)(j - i));
      i = j;
    }
    return out;
  }
  for (std::size_t i = 0; i < w.v.size(); ++i) app(spec.alphabet[i], w.v[i]);
  return out;
}

Word parse_word(const MonoidSpec& spec, const std::string& text) {
  Word w = identity(spec);
  if (text.empty() || text == "e" || text == "1") return w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t dot = text.find_first_of(".*", pos);
    std::string atom = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
    pos = dot == std::string::npos ? text.size() : dot + 1;
    if (atom.empty()) fail(Errc::InvalidWord, "empty atom in word \"" + text + "\"");
    std::string name = atom;
    std::int64_t exp = 1;
    if (auto caret = atom.find('^'); caret != std::string::npos) {
      name = atom.substr(0, caret);
      try {
        exp = std::stoll(atom.substr(caret + 1));
      } catch (const std::exception&) {
        fail(Errc::InvalidWord, "bad exponent in \"" + atom + "\"");
      }
    }
    auto it = std::find(spec.alphabet.begin(), spec.alphabet.end(), name);
    if (it == spec.alphabet.end()) fail(Errc::InvalidWord, "unknown generator \"" + name + "\"");
    std::size_t gi = (std::size_t)(it - spec.alphabet.begin());
    Word g = identity(spec);
    bool negative_ok = spec.kind == MonoidKind::Integers ||
                       (spec.kind == MonoidKind::HeisenbergZinv && gi == 2);
    if (exp < 0 && !negative_ok) fail(Errc::InvalidWord, "negative power not allowed here");
    if (spec.kind == MonoidKind::Free) {
      for (std::int64_t k = 0; k < exp; ++k) g.v.push_back((std::int64_t)gi);
      w = mul(spec, w, g);
    } else {
      g.v[gi] = exp;
      // normalize via repeated single-generator multiplication to honor relations
      Word step = identity(spec);
      step.v[gi] = exp < 0 ? -1 : 1;
      std::int64_t n = exp < 0 ? -exp : exp;
      for (std::int64_t k = 0; k < n; ++k) w = mul(spec, w, step);
    }
  }
  return w;
}

std::vector<Word> enumerate_words(const MonoidSpec& spec, std::int64_t maxlen) {
  std::vector<Word> out;
  switch (spec.kind) {
    case MonoidKind::Free: {
      std::vector<Word> frontier{identity(spec)};
      out.push_back(identity(spec));
      for (std::int64_t len = 1; len <= maxlen; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier)
          for (std::size_t i = 0; i < spec.alphabet.size(); ++i) {
            Word e = w;
            e.v.push_back((std::int64_t)i);
            next.push_back(e);
            out.push_back(std::move(e));
            if (out.size() > 2000000) fail(Errc::ResourceLimit, "word enumeration too large");
          }
        frontier = std::move(next);
      }
      break;
    }
    case MonoidKind::Natural:
      for (std::int64_t n = 0; n <= maxlen; ++n) out.push_back(Word{spec.kind, {n}});
      break;
    case MonoidKind::Integers:
      for (std::int64_t n = -maxlen; n <= maxlen; ++n) out.push_back(Word{spec.kind, {n}});
      break;
    case MonoidKind::FreeComm: {
      std::vector<std::int64_t> v(spec.alphabet.size(), 0);
      std::vector<Word> acc;
      struct Rec {
        static void run(std::vector<std::int64_t>& v, std::size_t pos, std::int64_t budget,
                        MonoidKind kind, std::vector<Word>& acc) {
          if (pos == v.size()) {
            acc.push_back(Word{kind, v});
            return;
          }
          for (std::int64_t e = 0; e <= budget; ++e) {
            v[pos] = e;
            run(v, pos + 1, budget - e, kind, acc);
          }
          v[pos] = 0;
        }
      };
      Rec::run(v, 0, maxlen, spec.kind, acc);
      out = std::move(acc);
      break;
    }
    case MonoidKind::X2Y2:
      for (std::int64_t a = 0; a <= maxlen; ++a)
        for (std::int64_t e = 0; e <= 1 && a + e <= maxlen; ++e)
          out.push_back(Word{spec.kind, {a, e}});
      break;
    case MonoidKind::Heisenberg:
      for (std::int64_t a = 0; a <= maxlen; ++a)
        for (std::int64_t b = 0; a + b <= maxlen; ++b)
          for (std::int64_t c = 0; a + b + c <= maxlen; ++c)
            out.push_back(Word{spec.kind, {a, b, c}});
      break;
    case MonoidKind::HeisenbergZinv:
      for (std::int64_t a = 0; a <= maxlen; ++a)
        for (std::int64_t b = 0; a + b <= maxlen; ++b)
          for (std::int64_t c = -(maxlen - a - b); a + b + (c < 0 ? -c : c) <= maxlen; ++c)
            out.push_back(Word{spec.kind, {a, b, c}});
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> letters_of(const MonoidSpec& spec, const Word& w) {
  check_word(spec, w);
  std::vector<std::size_t> letters;
  if (spec.kind == MonoidKind::Free) {
    for (auto i : w.v) letters.push_back((std::size_t)i);
    return letters;
  }
  // Exponent kinds: normal-form order is generator order; negative exponents
  // use the inverse generator (Integers: index 1; HeisenbergZinv z^-1: index 3).
  auto gens = generators(spec);
  for (std::size_t pos = 0; pos < w.v.size(); ++pos) {
    std::int64_t e = w.v[pos];
    std::size_t gi = pos;
    if (e < 0) {
      if (spec.kind == MonoidKind::Integers)
        gi = 1;
      else if (spec.kind == MonoidKind::HeisenbergZinv && pos == 2)
        gi = 3;
      else
        fail(Errc::InvalidWord, "negative exponent not expressible by generators");
    }
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) letters.push_back(gi);
  }
  return letters;
}

std::vector<std::pair<Word, Word>> unique_products(const MonoidSpec& spec,
                                                   const std::vector<Word>& X,
                                                   const std::vector<Word>& Y) {
  if (X.empty() || Y.empty()) fail(Errc::InvalidInput, "unique_products: empty set");
  std::map<Word, int> count;
  for (const auto& x : X)
    for (const auto& y : Y) ++count[mul(spec, x, y)];
  std::vector<std::pair<Word, Word>> out;
  for (const auto& x : X)
    for (const auto& y : Y)
      if (count[mul(spec, x, y)] == 1) out.emplace_back(x, y);
  return out;
}

namespace {

Json word_set_json(const MonoidSpec& spec, const std::vector<Word>& ws) {
  std::vector<std::string> names;
  for (const auto& w : ws) names.push_back(word_str(spec, w));
  std::sort(names.begin(), names.end());
  return Json(names);
}

}  // namespace

Verdict up_search(const MonoidSpec& spec, std::int64_t set_size_bound,
                  std::int64_t word_length_bound) {
  if (set_size_bound < 1 || word_length_bound < 1)
    fail(Errc::InvalidInput, "up_search: bounds must be >= 1");
  auto universe = enumerate_words(spec, word_length_bound);
  std::size_t n = universe.size();

  // All nonempty subsets of size <= bound, in deterministic order.
  std::vector<std::vector<Word>> subsets;
  std::vector<std::size_t> idx;
  struct Rec {
    static void run(std::size_t start, std::size_t n, std::int64_t left,
                    std::vector<std::size_t>& idx, const std::vector<Word>& universe,
                    std::vector<std::vector<Word>>& subsets) {
      if (!idx.empty()) {
        std::vector<Word> s;
        for (auto i : idx) s.push_back(universe[i]);
        subsets.push_back(std::move(s));
        if (subsets.size() > 200000) fail(Errc::ResourceLimit, "up_search: too many subsets");
      }
      if (left == 0) return;
      for (std::size_t i = start; i < n; ++i) {
        idx.push_back(i);
        run(i + 1, n, left - 1, idx, universe, subsets);
        idx.pop_back();
      }
    }
  };
  Rec::run(0, n, set_size_bound, idx, universe, subsets);

  if ((double)subsets.size() * (double)subsets.size() > 4e9)
    fail(Errc::ResourceLimit, "up_search: bounds too large");

  std::int64_t checked = 0;
  for (const auto& X : subsets)
    for (const auto& Y : subsets) {
      ++checked;
      if (unique_products(spec, X, Y).empty()) {
        Json witness;
        witness["X"] = word_set_json(spec, X);
        witness["Y"] = word_set_json(spec, Y);
        return Verdict::make_refuted("no unique product for this (X, Y)", witness);
      }
    }
  Json d;
  d["pairs_checked"] = checked;
  return Verdict::make_undecided(word_length_bound,
                                 "all bounded subset pairs have a unique product", d);
}

namespace {

// Membership of u in gG / Gg, exact per kind.
bool in_left_coset(const MonoidSpec& spec, const Word& g, const Word& u) {
  // u in gG: exists v with g*v = u
  switch (spec.kind) {
    case MonoidKind::Free: {
      if (u.v.size() < g.v.size()) return false;
      return std::equal(g.v.begin(), g.v.end(), u.v.begin());
    }
    case MonoidKind::FreeComm:
    case MonoidKind::Natural:
      for (std::size_t i = 0; i < g.v.size(); ++i)
        if (u.v[i] < g.v[i]) return false;
      return true;
    case MonoidKind::Integers:
      return true;
    case MonoidKind::X2Y2: {
      // g*v with v = x^p y^q: exponents add then reduce; search small q.
      for (std::int64_t q = 0; q <= 1; ++q) {
        std::int64_t ye = g.v[1] + q;
        std::int64_t carry = ye >= 2 ? 2 : 0;
        if (ye >= 2) ye -= 2;
        if (ye == u.v[1] && u.v[0] - g.v[0] - carry >= 0) return true;
      }
      return false;
    }
    case MonoidKind::Heisenberg:
    case MonoidKind::HeisenbergZinv: {
      // g = x^a y^b z^c, v = x^p y^q z^r: g*v = x^(a+p) y^(b+q) z^(c+r+p*b)
      std::int64_t p = u.v[0] - g.v[0];
      std::int64_t q = u.v[1] - g.v[1];
      if (p < 0 || q < 0) return false;
      std::int64_t r = u.v[2] - g.v[2] - p * g.v[1];
      return spec.kind == MonoidKind::HeisenbergZinv || r >= 0;
    }
  }
  return false;
}

bool in_right_coset(const MonoidSpec& spec, const Word& g, const Word& u) {
  // u in Gg: exists v with v*g = u
  switch (spec.kind) {
    case MonoidKind::Free: {
      if (u.v.size() < g.v.size()) return false;
      return std::equal(g.v.rbegin(), g.v.rend(), u.v.rbegin());
    }
    case MonoidKind::FreeComm:
    case MonoidKind::Natural:
    case MonoidKind::Integers:
    case MonoidKind::X2Y2:
      return in_left_coset(spec, g, u);
    case MonoidKind::Heisenberg:
    case MonoidKind::HeisenbergZinv: {
      // v*g = x^(p+a) y^(q+b) z^(r+c+a*q)
      std::int64_t p = u.v[0] - g.v[0];
      std::int64_t q = u.v[1] - g.v[1];
      if (p < 0 || q < 0) return false;
      std::int64_t r = u.v[2] - g.v[2] - g.v[0] * q;
      return spec.kind == MonoidKind::HeisenbergZinv || r >= 0;
    }
  }
  return false;
}

}  // namespace

Verdict side_ideal_compare(const MonoidSpec& spec, const Word& g, std::int64_t length_bound) {
  check_word(spec, g);
  if (spec.commutative())
    return Verdict::make_proven("commutative monoid: gG = Gg");
  std::int64_t checked = 0;
  for (const auto& h : enumerate_words(spec, length_bound)) {
    ++checked;
    Word gh = mul(spec, g, h);
    Word hg = mul(spec, h, g);
    if (!in_right_coset(spec, g, gh)) {
      Json w;
      w["product"] = word_str(spec, gh);
      w["reason"] = "g." + word_str(spec, h) + " has no representation w.g";
      return Verdict::make_refuted("gG is not contained in Gg", w);
    }
    if (!in_left_coset(spec, g, hg)) {
      Json w;
      w["product"] = word_str(spec, hg);
      w["reason"] = word_str(spec, h) + ".g has no representation g.w";
      return Verdict::make_refuted("Gg is not contained in gG", w);
    }
  }
  Json d;
  d["words_checked"] = checked;
  return Verdict::make_undecided(length_bound, "no side-ideal violation at bound", d);
}

Json word_to_json(const MonoidSpec& spec, const Word& w) { return Json(word_str(spec, w)); }

Word word_from_json(const MonoidSpec& spec, const Json& j) {
  if (!j.is_string()) fail(Errc::SchemaViolation, "word must be a string");
  return parse_word(spec, j.get<std::string>());
}

}  // namespace skewprime
