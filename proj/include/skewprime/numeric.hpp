#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewprime {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Error codes shared across the library.  Every thrown error carries one,
/// so the CLI can map failures to the documented exit codes.
enum class Errc {
  InvalidWord,
  InvalidInput,
  ResourceLimit,
  UnsupportedIdealClass,
  NotAutomorphism,
  NotPrime,
  ZeroModule,
  SchemaViolation,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline std::int64_t div_floor(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline std::int64_t div_ceil(std::int64_t a, std::int64_t b) { return -div_floor(-a, b); }

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_i64(a, b) * b;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod <= 1) return 0;
  std::int64_t r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = (__int128)r * base % mod;
    base = (__int128)base * base % mod;
    exp >>= 1;
  }
  return r;
}

/// Multiplicative order of a modulo m; requires gcd(a, m) == 1.  ord(a, 1) == 1.
inline std::int64_t mult_order(std::int64_t a, std::int64_t m) {
  if (m <= 0) fail(Errc::InvalidInput, "mult_order: modulus must be positive");
  if (m == 1) return 1;
  a %= m;
  if (a < 0) a += m;
  if (gcd_i64(a, m) != 1) fail(Errc::InvalidInput, "mult_order: arguments not coprime");
  std::int64_t x = a % m, ord = 1;
  while (x != 1) {
    x = (__int128)x * a % m;
    if (++ord > m) fail(Errc::InvalidInput, "mult_order: no order found");
  }
  return ord;
}

/// Largest e with p^e dividing n (n >= 1).
inline std::int64_t p_adic_valuation(std::int64_t n, std::int64_t p) {
  std::int64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

inline bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Decomposes a prime power q = p^k; fails otherwise.
inline void prime_power_decompose(std::int64_t q, std::int64_t& p, std::int64_t& k) {
  if (q < 2) fail(Errc::InvalidInput, "not a prime power: " + std::to_string(q));
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      k = 0;
      while (q > 1) {
        if (q % d != 0) fail(Errc::InvalidInput, "not a prime power");
        q /= d;
        ++k;
      }
      return;
    }
  }
  p = q;
  k = 1;
}

inline std::vector<std::int64_t> divisors_of(std::int64_t n) {
  std::vector<std::int64_t> lo, hi;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
  return lo;
}

inline std::string rat_str(const Rat& r) { return r.str(); }

inline Rat rat_parse(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    fail(Errc::InvalidInput, "cannot parse rational: " + s);
  }
}

}  // namespace skewprime
