#include "vortex/pipoly.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// 35 correct decimals of pi, truncated, and the next decimal rounded up.
const char* const kPiLo = "314159265358979323846264338327950288/100000000000000000000000000000000000";
const char* const kPiHi = "314159265358979323846264338327950289/100000000000000000000000000000000000";
constexpr unsigned kSeedDigits = 34;

// Bounds on arctan(1/x) for an integer x > 1 from the alternating series;
// each partial sum is off by at most the first omitted term.
RationalInterval arctan_inverse(unsigned long x, const Rational& eps) {
  Rational sum = 0;
  Integer xpow = x;
  Integer x2 = Integer(x) * x;
  for (unsigned long j = 0;; ++j) {
    Rational term(1, xpow * (2 * j + 1));
    term.canonicalize();
    if (term < eps) {
      return {sum - term, sum + term};
    }
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    xpow *= x2;
  }
}

Rational floor_to(const Rational& q, const Integer& scale) {
  Integer n = q.get_num() * scale;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), n.get_mpz_t(), q.get_den_mpz_t());
  Rational out(f, scale);
  out.canonicalize();
  return out;
}

Rational ceil_to(const Rational& q, const Integer& scale) {
  Integer n = q.get_num() * scale;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), n.get_mpz_t(), q.get_den_mpz_t());
  Rational out(c, scale);
  out.canonicalize();
  return out;
}

RationalInterval machin(unsigned digits) {
  Rational eps(1, pow10(digits + 3));
  auto a5 = arctan_inverse(5, eps);
  auto a239 = arctan_inverse(239, eps);
  Rational lo = 16 * a5.lo - 4 * a239.hi;
  Rational hi = 16 * a5.hi - 4 * a239.lo;
  Integer scale = pow10(digits + 2);
  Rational l = floor_to(lo, scale);
  Rational h = ceil_to(hi, scale);
  l.canonicalize();
  h.canonicalize();
  return {l, h};
}

RationalInterval seed_interval() {
  RationalInterval iv{Rational(kPiLo), Rational(kPiHi)};
  iv.lo.canonicalize();
  iv.hi.canonicalize();
  return iv;
}

struct PiCache {
  std::mutex mu;
  unsigned digits = kSeedDigits;
  RationalInterval best = seed_interval();
};

PiCache& pi_cache() {
  static PiCache cache;
  return cache;
}

Integer round_half_away(const Rational& y) {
  Rational a = abs(y) + Rational(1, 2);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return sgn(y) < 0 ? Integer(-f) : f;
}

std::string format_fixed(const Integer& m, unsigned digits) {
  std::string s = Integer(abs(m)).get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out;
  if (m < 0) out.push_back('-');
  out.append(s, 0, s.size() - digits);
  if (digits > 0) {
    out.push_back('.');
    out.append(s, s.size() - digits, std::string::npos);
  }
  return out;
}

}  // namespace

RationalInterval pi_enclosure(unsigned digits) {
  auto& cache = pi_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  if (digits > cache.digits) {
    cache.best = machin(digits);
    cache.digits = digits;
  }
  return cache.best;
}

PiPoly::PiPoly(const Rational& c) {
  if (c != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

PiPoly::PiPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

PiPoly::PiPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

PiPoly PiPoly::pi() { return monomial(1, 1); }

PiPoly PiPoly::monomial(const Rational& c, unsigned i) {
  PiPoly p;
  if (c != 0) {
    p.coeffs_.assign(i + 1, Rational(0));
    p.coeffs_[i] = c;
    p.coeffs_[i].canonicalize();
  }
  return p;
}

void PiPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PiPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

bool PiPoly::is_monomial() const {
  return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }) == 1;
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  PiPoly r;
  r.coeffs_ = std::move(out);
  r.normalize();
  return r;
}

PiPoly& PiPoly::operator*=(const PiPoly& o) { return *this = *this * o; }

PiPoly& PiPoly::operator*=(const Rational& q) {
  if (q == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= q;
  normalize();
  return *this;
}

PiPoly& PiPoly::operator/=(const Rational& q) {
  if (q == 0) throw PreconditionError("PiPoly division by zero");
  for (auto& c : coeffs_) c /= q;
  normalize();
  return *this;
}

PiPoly PiPoly::operator-() const {
  PiPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PiPoly PiPoly::pow(unsigned e) const {
  PiPoly result(1L);
  PiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

PiPoly PiPoly::divide_by_monomial(const Rational& q, unsigned i) const {
  if (q == 0) throw PreconditionError("PiPoly division by zero");
  for (std::size_t j = 0; j < std::min<std::size_t>(i, coeffs_.size()); ++j) {
    if (coeffs_[j] != 0) throw PreconditionError("quotient would contain a negative power of pi");
  }
  PiPoly r;
  if (coeffs_.size() > i) {
    r.coeffs_.assign(coeffs_.begin() + i, coeffs_.end());
    for (auto& c : r.coeffs_) c /= q;
  }
  return r;
}

PiPoly PiPoly::divide(const PiPoly& divisor) const {
  if (!divisor.is_monomial()) throw PreconditionError("division is only defined for monomial divisors q·π^i");
  auto i = static_cast<unsigned>(divisor.degree());
  return divide_by_monomial(divisor.coeffs_[i], i);
}

RationalInterval PiPoly::enclose(unsigned digits) const {
  RationalInterval p = pi_enclosure(digits);
  Rational lo = 0;
  Rational hi = 0;
  Rational plo = 1;
  Rational phi = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c > 0) {
      lo += c * plo;
      hi += c * phi;
    } else if (c < 0) {
      lo += c * phi;
      hi += c * plo;
    }
    plo *= p.lo;
    phi *= p.hi;
  }
  return {lo, hi};
}

Sign PiPoly::sign() const {
  if (is_zero()) return Sign::Zero;
  if (is_constant()) return coeffs_[0] > 0 ? Sign::Positive : Sign::Negative;
  for (unsigned digits = 20;; digits *= 2) {
    auto iv = enclose(digits);
    if (iv.lo > 0) return Sign::Positive;
    if (iv.hi < 0) return Sign::Negative;
  }
}

std::string PiPoly::approx(unsigned digits) const {
  Integer scale = pow10(digits);
  if (is_constant()) return format_fixed(round_half_away(constant_term() * scale), digits);
  for (unsigned d = digits + 10;; d *= 2) {
    auto iv = enclose(d);
    Integer a = round_half_away(iv.lo * scale);
    Integer b = round_half_away(iv.hi * scale);
    if (a == b) return format_fixed(a, digits);
  }
}

double PiPoly::to_double() const {
  if (is_constant()) return constant_term().get_d();
  for (unsigned d = 24;; d *= 2) {
    auto iv = enclose(d);
    if (sgn(iv.lo) == sgn(iv.hi) && sgn(iv.lo) != 0) {
      Rational width = iv.hi - iv.lo;
      if (width * Rational(1000000000000000000L) <= abs(iv.lo)) {
        Rational mid = (iv.lo + iv.hi) / 2;
        return mid.get_d();
      }
    }
  }
}

std::string PiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string term;
    if (i == 0) {
      term = to_short_string(mag);
    } else {
      if (mag != 1) term = to_short_string(mag) + "·";
      term += "π";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (first) {
      out = (c < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

int compare(const PiPoly& a, const PiPoly& b) { return static_cast<int>((a - b).sign()); }

PiPoly pp_add(const PiPoly& a, const PiPoly& b) { return a + b; }
PiPoly pp_mul(const PiPoly& a, const PiPoly& b) { return a * b; }
Sign pp_sign(const PiPoly& a) { return a.sign(); }
std::string pp_approx(const PiPoly& a, unsigned decimal_digits) {
  if (decimal_digits < 1) throw PreconditionError("pp_approx needs at least one digit");
  return a.approx(decimal_digits);
}

const char* sign_name(Sign s) {
  switch (s) {
    case Sign::Negative:
      return "Negative";
    case Sign::Zero:
      return "Zero";
    case Sign::Positive:
      return "Positive";
  }
  return "?";
}

}  // namespace vortex
