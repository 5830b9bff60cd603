#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewprime/verdict.hpp"

namespace skewprime {

/// Finitely presented monoids with confluent normal forms.  Every kind has a
/// terminating, confluent normal-form procedure; the builtin kinds carry
/// hand-verified rewrite systems.
enum class MonoidKind {
  Free,            // free monoid on the alphabet
  FreeComm,        // free commutative monoid on the alphabet
  Natural,         // (N, +), one generator
  Integers,        // (Z, +), generator and its inverse
  X2Y2,            // <x,y | xy=yx, y^2=x^2>
  Heisenberg,      // <x,y,z | z central, yx=xyz>, nonnegative exponents
  HeisenbergZinv,  // same with z invertible
};

struct MonoidSpec {
  MonoidKind kind = MonoidKind::Free;
  std::vector<std::string> alphabet;

  static MonoidSpec free_monoid(std::vector<std::string> alphabet);
  static MonoidSpec free_commutative(std::vector<std::string> alphabet);
  static MonoidSpec natural(std::string gen = "g");
  static MonoidSpec integers(std::string gen = "g");
  static MonoidSpec x2y2();
  static MonoidSpec heisenberg(bool z_invertible);

  bool commutative() const;
  Json to_json() const;
  static MonoidSpec from_json(const Json& j);
};

/// A monoid element in normal form.  The data layout depends on the kind:
/// a letter-index sequence for Free, an exponent vector otherwise
/// (Natural/Integers: [n]; X2Y2: [a, eps]; Heisenberg: [a, b, c]).
struct Word {
  MonoidKind kind = MonoidKind::Free;
  std::vector<std::int64_t> v;

  std::int64_t length() const;
  bool is_identity() const;
  bool operator==(const Word& o) const { return kind == o.kind && v == o.v; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const;  // length-lex, deterministic
};

Word identity(const MonoidSpec& spec);
/// Generator words.  For Integers this includes the inverse generator.
std::vector<Word> generators(const MonoidSpec& spec);
std::vector<std::string> generator_names(const MonoidSpec& spec);

Word mul(const MonoidSpec& spec, const Word& a, const Word& b);
Word word_pow(const MonoidSpec& spec, const Word& a, std::int64_t n);

std::string word_str(const MonoidSpec& spec, const Word& w);
Word parse_word(const MonoidSpec& spec, const std::string& text);

/// All normal forms of length <= maxlen, sorted in canonical word order.
std::vector<Word> enumerate_words(const MonoidSpec& spec, std::int64_t maxlen);

/// Letter decomposition of a normal form (generator indices into
/// generators(spec)), so actions can be composed along it.
std::vector<std::size_t> letters_of(const MonoidSpec& spec, const Word& w);

/// Pairs (x, y) in X x Y whose product is hit exactly once across X x Y.
std::vector<std::pair<Word, Word>> unique_products(const MonoidSpec& spec,
                                                   const std::vector<Word>& X,
                                                   const std::vector<Word>& Y);

/// Exhaustive unique-product search over all nonempty X, Y with
/// |X|, |Y| <= set_size_bound drawn from words of length <= word_length_bound.
/// Refuted carries a failing (X, Y); a clean sweep is Undecided at the bound,
/// because the property quantifies over all finite subsets.
Verdict up_search(const MonoidSpec& spec, std::int64_t set_size_bound,
                  std::int64_t word_length_bound);

/// Checks gh in Gg and hg in gG for every word h of length <= length_bound.
/// Refuted carries the failing product; commutative kinds are Proven exactly.
Verdict side_ideal_compare(const MonoidSpec& spec, const Word& g, std::int64_t length_bound);

Json word_to_json(const MonoidSpec& spec, const Word& w);
Word word_from_json(const MonoidSpec& spec, const Json& j);

}  // namespace skewprime
