#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vortex/rational.hpp"

namespace vortex {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

struct RationalInterval {
  Rational lo;
  Rational hi;
};

// Polynomial in pi with rational coefficients, kept in canonical form
// (no trailing zero coefficients). coeffs()[i] multiplies pi^i.
class PiPoly {
 public:
  PiPoly() = default;
  PiPoly(const Rational& c);  // NOLINT: rationals embed implicitly
  PiPoly(long c);             // NOLINT
  PiPoly(int c) : PiPoly(static_cast<long>(c)) {}  // NOLINT
  explicit PiPoly(std::vector<Rational> coeffs);

  static PiPoly pi();
  // c * pi^i
  static PiPoly monomial(const Rational& c, unsigned i);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // True when exactly one coefficient is nonzero.
  bool is_monomial() const;
  Rational constant_term() const { return coeff(0); }

  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  PiPoly& operator*=(const PiPoly& o);
  PiPoly& operator*=(const Rational& q);
  PiPoly& operator/=(const Rational& q);

  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
  friend PiPoly operator*(PiPoly a, const Rational& q) { return a *= q; }
  friend PiPoly operator*(const Rational& q, PiPoly a) { return a *= q; }
  friend PiPoly operator/(PiPoly a, const Rational& q) { return a /= q; }
  PiPoly operator-() const;

  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.coeffs_ == b.coeffs_; }

  PiPoly pow(unsigned e) const;

  // Exact division by q * pi^i. Throws PreconditionError when the divisor is
  // zero or the quotient would need a negative power of pi.
  PiPoly divide_by_monomial(const Rational& q, unsigned i) const;
  // Division by a PiPoly that is a monomial; anything else is rejected.
  PiPoly divide(const PiPoly& divisor) const;

  Sign sign() const;
  // Enclosure of the real value using a pi enclosure good to `digits` decimals.
  RationalInterval enclose(unsigned digits) const;
  // Decimal rendering with `digits` digits after the point, rounded to
  // nearest, ties away from zero (ties can only occur for rational values).
  std::string approx(unsigned digits) const;
  double to_double() const;

  // Ascending powers, e.g. "100 - 12·π + 3/2·π^2".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

int compare(const PiPoly& a, const PiPoly& b);  // sign of a - b as -1/0/1

inline bool operator<(const PiPoly& a, const PiPoly& b) { return compare(a, b) < 0; }
inline bool operator>(const PiPoly& a, const PiPoly& b) { return compare(a, b) > 0; }
inline bool operator<=(const PiPoly& a, const PiPoly& b) { return compare(a, b) <= 0; }
inline bool operator>=(const PiPoly& a, const PiPoly& b) { return compare(a, b) >= 0; }

PiPoly pp_add(const PiPoly& a, const PiPoly& b);
PiPoly pp_mul(const PiPoly& a, const PiPoly& b);
Sign pp_sign(const PiPoly& a);
std::string pp_approx(const PiPoly& a, unsigned decimal_digits);

// Rigorous rational enclosure of pi with width below 10^-digits. Results are
// cached; the cache is guarded by a mutex.
RationalInterval pi_enclosure(unsigned digits);

const char* sign_name(Sign s);

}  // namespace vortex
