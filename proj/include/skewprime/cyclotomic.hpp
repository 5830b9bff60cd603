#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewprime/numeric.hpp"

namespace skewprime {

/// Dense polynomial over Q, used for cyclotomic arithmetic.
struct RatPoly {
  std::vector<Rat> c;  // c[i] is the coefficient of t^i; no trailing zeros

  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

  static RatPoly zero() { return RatPoly(); }
  static RatPoly constant(const Rat& r);
  static RatPoly monomial(std::size_t deg, const Rat& coeff);

  void trim();
  bool is_zero() const { return c.empty(); }
  std::int64_t degree() const { return (std::int64_t)c.size() - 1; }  // -1 for zero

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  bool operator==(const RatPoly& o) const { return c == o.c; }

  /// Division with remainder; the divisor must have invertible leading
  /// coefficient (any nonzero rational).  Returns quotient, sets rem.
  RatPoly divmod(const RatPoly& divisor, RatPoly* rem = nullptr) const;

  Rat eval(const Rat& x) const;
  std::string str(const std::string& var = "t") const;  // ascending degree
};

/// The r-th cyclotomic polynomial, computed by t^r - 1 = prod_{d | r} Phi_d.
/// Results are memoized; thread-safe for concurrent reads after warmup.
const RatPoly& cyclotomic(std::int64_t r);

/// Element of Q(zeta_m), stored as a rational coefficient vector in the
/// basis 1, zeta, ..., zeta^(phi(m)-1) modulo Phi_m.  Values that reduce to
/// rationals are canonicalized to conductor 1; mixed-conductor arithmetic
/// lifts both operands into Q(zeta_lcm).
class CycNum {
public:
  CycNum() : m_(1) {}
  explicit CycNum(const Rat& r);
  static CycNum zeta(std::int64_t m, std::int64_t k);  // zeta_m^k
  static CycNum from_coeffs(std::int64_t m, std::vector<Rat> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return m_ == 1; }
  Rat rational_value() const;  // requires is_rational()
  std::int64_t conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator-() const;
  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }
  bool less(const CycNum& o) const;  // deterministic total order

  std::string str() const;

private:
  std::int64_t m_;             // conductor
  std::vector<Rat> coeffs_;    // reduced mod Phi_m, no trailing zeros

  CycNum lift_to(std::int64_t M) const;
  void reduce();
};

}  // namespace skewprime
