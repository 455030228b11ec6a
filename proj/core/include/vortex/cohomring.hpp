#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vortex/pipoly.hpp"

namespace vortex {

// Odd generators are a bit set over declaration indices (at most 64), even
// generators an exponent vector.
struct Monomial {
  std::uint64_t odd = 0;
  std::vector<int> even;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, PiPoly, MonomialLess>;

enum class EvenRule { Free, Truncated, Relation };

struct EvenGenerator {
  std::string name;
  int degree = 2;
  EvenRule rule = EvenRule::Free;
  // Truncated: g^head = 0. Relation: g^head = -sum_{k=1}^{head} c_k g^(head-k)
  // with coefficients[k-1] = c_k, a term map avoiding g.
  int head = 0;
  std::vector<TermMap> coefficients;

  friend bool operator==(const EvenGenerator&, const EvenGenerator&) = default;
};

class RingPresentation;
using PresentationPtr = std::shared_ptr<const RingPresentation>;

class RingPresentation {
 public:
  RingPresentation(std::vector<std::string> odd, std::vector<EvenGenerator> even, std::optional<int> top_degree);

  const std::vector<std::string>& odd_names() const { return odd_; }
  const std::vector<EvenGenerator>& even() const { return even_; }
  std::optional<int> top_degree() const { return top_; }
  std::optional<int> odd_index(std::string_view name) const;
  std::optional<int> even_index(std::string_view name) const;
  bool has_generator(std::string_view name) const;

  int degree(const Monomial& m) const;
  // Highest degree in which the ring can be nonzero, or nullopt if unbounded.
  std::optional<int> max_degree() const;

  friend bool operator==(const RingPresentation&, const RingPresentation&) = default;

 private:
  std::vector<std::string> odd_;
  std::vector<EvenGenerator> even_;
  std::optional<int> top_;
};

PresentationPtr make_presentation(std::vector<std::string> odd, std::vector<EvenGenerator> even,
                                  std::optional<int> top_degree = std::nullopt);
PresentationPtr exterior_ring(std::vector<std::string> names);
PresentationPtr truncated_polynomial_ring(std::string name, int truncation, int degree = 2);
PresentationPtr trivial_ring();
bool same_presentation(const PresentationPtr& a, const PresentationPtr& b);

class RingElement {
 public:
  explicit RingElement(PresentationPtr p);
  static RingElement scalar(PresentationPtr p, const PiPoly& c);
  static RingElement generator(PresentationPtr p, std::string_view name);
  // Product of the named generators in the given order.
  static RingElement product(PresentationPtr p, const std::vector<std::string>& names);

  const PresentationPtr& presentation() const { return pres_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PiPoly scalar_term() const;
  // Component of the given total degree.
  RingElement graded(int degree) const;
  std::optional<int> homogeneous_degree() const;
  // Coefficient of a product of generators written in canonical order.
  PiPoly coefficient(const Monomial& m) const;

  // Adds c * m, reducing m to normal form first.
  void add_term(const Monomial& m, const PiPoly& c);

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const PiPoly& c);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(RingElement a, const PiPoly& c) { return a *= c; }
  friend RingElement operator*(const PiPoly& c, RingElement a) { return a *= c; }
  RingElement operator-() const;
  friend bool operator==(const RingElement& a, const RingElement& b);

  RingElement pow(unsigned e) const;

  // Deterministic text, e.g. "3·π^2·eta^2·dx*1∧dx*3 - 1/2·θ".
  std::string to_string() const;

 private:
  PresentationPtr pres_;
  TermMap terms_;
};

RingElement ring_mul(const RingElement& a, const RingElement& b);

enum class Series { Exp, Log1p, Arctan, GeometricInverse };
RingElement formal_series(Series f, const RingElement& x);

// Copy of `a` in `target`, matching generators by name.
RingElement embed(const RingElement& a, const PresentationPtr& target);

PresentationPtr tensor_presentation(const PresentationPtr& p, const PresentationPtr& q);

// Adds the relation g^r = -sum_k c_k g^(r-k) to the even generator `name`.
// c[k-1] = c_k must live in `p`, avoid `name` and be homogeneous of degree
// k * deg(g).
PresentationPtr with_relation(const PresentationPtr& p, std::string_view name, const std::vector<RingElement>& c);

// Top class of a fibre: odd generators in orientation order, even generator
// exponents, and the value of the integral over that class.
struct FibreClass {
  std::vector<std::string> odd;
  std::vector<std::pair<std::string, int>> even;
  Rational value = 1;
};

// Integration over the fibre: a = gamma ∧ top + (lower fibre degree) maps to
// value * gamma. The result is expressed in `base` when given, otherwise in
// a's own presentation.
RingElement fibre_integrate(const RingElement& a, const FibreClass& fibre, const PresentationPtr& base = nullptr);
RingElement fibre_integrate(const RingElement& a, const std::vector<std::string>& top_monomial,
                            const PresentationPtr& base = nullptr);

// Sign (+1/-1) of merging the sorted odd set `left` with `right` placed after it.
int merge_sign(std::uint64_t left, std::uint64_t right);

namespace fault {
// Perturbs the quadratic coefficient of exp; used by the self-test to show
// that it catches a broken series engine.
void set_series_fault(bool on);
bool series_fault();
}  // namespace fault

}  // namespace vortex
