#include "vortex/fourier_mukai.hpp"

#include "vortex/errors.hpp"

namespace vortex {

namespace {

RingElement one(const PresentationPtr& p) { return RingElement::scalar(p, PiPoly(1L)); }

// dx*_j ∧ dx*_(m+j), 1-based j
RingElement dual_block(const PresentationPtr& p, int m, int j) {
  return RingElement::product(p, {dual_generator(j), dual_generator(m + j)});
}

RingElement torus_block(const PresentationPtr& p, int m, int j) {
  return RingElement::product(p, {torus_generator(j), torus_generator(m + j)});
}

}  // namespace

void AbelianVarietyData::validate() const {
  if (m < 1) throw PreconditionError("abelian variety needs m >= 1");
  if (static_cast<int>(deltas.size()) != m || static_cast<int>(lambdas.size()) != m) {
    throw PreconditionError("abelian variety needs m deltas and m lambdas");
  }
  for (auto d : deltas) {
    if (d < 1) throw PreconditionError("deltas must be positive integers");
  }
  for (const auto& l : lambdas) {
    if (l <= 0) throw PreconditionError("lambdas must be positive");
  }
}

std::string torus_generator(int index) { return "dx" + std::to_string(index); }
std::string dual_generator(int index) { return "dx*" + std::to_string(index); }

PresentationPtr torus_ring(int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * m; ++i) names.push_back(torus_generator(i));
  return exterior_ring(std::move(names));
}

PresentationPtr dual_torus_ring(int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * m; ++i) names.push_back(dual_generator(i));
  return exterior_ring(std::move(names));
}

std::vector<std::string> torus_orientation(int m) {
  std::vector<std::string> out;
  for (int j = 1; j <= m; ++j) {
    out.push_back(torus_generator(j));
    out.push_back(torus_generator(m + j));
  }
  return out;
}

std::vector<std::string> dual_orientation(int m) {
  std::vector<std::string> out;
  for (int j = 1; j <= m; ++j) {
    out.push_back(dual_generator(j));
    out.push_back(dual_generator(m + j));
  }
  return out;
}

long r_sections_abelian(const AbelianVarietyData& av) {
  long r = 1;
  for (auto d : av.deltas) r *= d;
  return r;
}

RingElement ch_transform(const AbelianVarietyData& av) {
  av.validate();
  auto p = dual_torus_ring(av.m);
  RingElement ch = one(p);
  for (int k = 1; k <= av.m; ++k) {
    ch = ch * (RingElement::scalar(p, PiPoly(Rational(av.deltas[k - 1]))) - dual_block(p, av.m, k));
  }
  return ch;
}

RingElement ch_transform_pushforward(const AbelianVarietyData& av) {
  av.validate();
  auto dual = dual_torus_ring(av.m);
  auto ring = tensor_presentation(torus_ring(av.m), dual);
  RingElement c1p(ring);
  for (int a = 1; a <= 2 * av.m; ++a) c1p += RingElement::product(ring, {torus_generator(a), dual_generator(a)});
  RingElement c1l(ring);
  for (int j = 1; j <= av.m; ++j) c1l += torus_block(ring, av.m, j) * PiPoly(Rational(av.deltas[j - 1]));
  RingElement integrand = formal_series(Series::Exp, c1p) * formal_series(Series::Exp, c1l);
  return fibre_integrate(integrand, torus_orientation(av.m), dual);
}

RingElement chern_from_character(const RingElement& ch) {
  PiPoly rank = ch.scalar_term();
  if (!rank.is_constant() || rank.constant_term().get_den() != 1 || rank.constant_term() <= 0) {
    throw PreconditionError("Chern character must have a positive integer rank");
  }
  const auto& p = ch.presentation();
  const int top = p->max_degree().value_or(0);
  RingElement x(p);
  Integer fact = 1;  // (j-1)!
  for (int j = 1; 2 * j <= top; ++j) {
    if (j > 1) fact *= (j - 1);
    RingElement chj = ch.graded(2 * j);
    if (chj.is_zero()) continue;
    Rational coef(j % 2 == 1 ? fact : Integer(-fact));
    x += chj * PiPoly(coef);
  }
  return formal_series(Series::Exp, x);
}

RingElement c1_transform(const AbelianVarietyData& av) {
  av.validate();
  auto p = dual_torus_ring(av.m);
  RingElement c1(p);
  for (int j = 1; j <= av.m; ++j) {
    long prod = 1;
    for (int i = 1; i <= av.m; ++i) {
      if (i != j) prod *= av.deltas[i - 1];
    }
    c1 -= dual_block(p, av.m, j) * PiPoly(Rational(prod));
  }
  return c1;
}

namespace {

// exp(sum_k sign(k) (r/k) (c1/r)^k)
RingElement closed_form_with(const AbelianVarietyData& av, int (*sign)(int)) {
  RingElement c1 = c1_transform(av);
  const auto& p = c1.presentation();
  const Rational r(r_sections_abelian(av));
  RingElement x(p);
  RingElement c1r = c1 * PiPoly(1 / r);
  RingElement power = c1r;
  for (int k = 1; k <= av.m; ++k) {
    x += power * PiPoly(Rational(sign(k)) * r / k);
    power = power * c1r;
  }
  return formal_series(Series::Exp, x);
}

int log_sign(int k) { return k % 2 == 1 ? 1 : -1; }
int printed_sign(int k) { return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1; }

}  // namespace

RingElement chern_closed_form(const AbelianVarietyData& av) { return closed_form_with(av, log_sign); }

RingElement chern_closed_form_printed(const AbelianVarietyData& av) { return closed_form_with(av, printed_sign); }

RingElement segre(const RingElement& c) {
  if (c.scalar_term() != PiPoly(1L)) throw PreconditionError("Segre class needs a total Chern class with scalar term 1");
  return formal_series(Series::GeometricInverse, c);
}

bool recursion_check(const AbelianVarietyData& av, int j) {
  if (av.m < 2) return true;  // no j in range
  if (j < 2 || j > av.m) throw PreconditionError("recursion_check needs 2 <= j <= m");
  RingElement ch = ch_transform(av);
  const Rational r(r_sections_abelian(av));
  return ch.graded(2 * j) == ch.graded(2) * ch.graded(2 * (j - 1)) * PiPoly(1 / (j * r));
}

bool recursion_check_printed(const AbelianVarietyData& av, int j) {
  if (av.m < 2) return true;
  if (j < 2 || j > av.m) throw PreconditionError("recursion_check needs 2 <= j <= m");
  RingElement ch = ch_transform(av);
  const Rational r(r_sections_abelian(av));
  Rational coef = 1 / (j * r);
  if (j % 2 == 1) coef = -coef;
  return ch.graded(2 * j) == ch.graded(2) * ch.graded(2 * (j - 1)) * PiPoly(coef);
}

bool power_formula_check(const AbelianVarietyData& av, int j) {
  if (j < 1 || j > av.m) throw PreconditionError("power_formula_check needs 1 <= j <= m");
  RingElement ch = ch_transform(av);
  const Rational r(r_sections_abelian(av));
  Rational coef = 1 / (Rational(factorial(j)) * power(r, j - 1));
  return ch.graded(2 * j) == ch.graded(2).pow(j) * PiPoly(coef);
}

RingElement fm_kahler_power(const AbelianVarietyData& av) {
  if (av.m < 1 || static_cast<int>(av.lambdas.size()) != av.m) throw PreconditionError("need m lambdas");
  auto dual = dual_torus_ring(av.m);
  auto ring = tensor_presentation(torus_ring(av.m), dual);
  RingElement c1p(ring);
  for (int a = 1; a <= 2 * av.m; ++a) c1p += RingElement::product(ring, {torus_generator(a), dual_generator(a)});
  RingElement omega(ring);
  for (int j = 1; j <= av.m; ++j) omega += torus_block(ring, av.m, j) * PiPoly(av.lambdas[j - 1]);
  RingElement power = omega.pow(av.m - 1) * PiPoly(Rational(1, factorial(av.m - 1)));
  return fibre_integrate(formal_series(Series::Exp, c1p) * power, torus_orientation(av.m), dual);
}

RingElement fm_kahler_power_closed(const AbelianVarietyData& av) {
  auto p = dual_torus_ring(av.m);
  RingElement out(p);
  for (int j = 1; j <= av.m; ++j) {
    Rational prod = 1;
    for (int i = 1; i <= av.m; ++i) {
      if (i != j) prod *= av.lambdas[i - 1];
    }
    out -= dual_block(p, av.m, j) * PiPoly(prod);
  }
  return out;
}

RingElement segre_pushforward(int l, const RingElement& segre_class, int r) {
  if (l < 0 || r < 1) throw PreconditionError("segre_pushforward needs l >= 0 and r >= 1");
  const int index = l - r + 1;
  if (index < 0) return RingElement(segre_class.presentation());
  return segre_class.graded(2 * index);
}

}  // namespace vortex
