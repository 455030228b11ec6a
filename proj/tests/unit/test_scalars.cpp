#include <gtest/gtest.h>

#include <random>

#include "support/printers.hpp"
#include "vortex/errors.hpp"
#include "vortex/pipoly.hpp"

using vortex::PiPoly;
using vortex::Rational;
using vortex::Sign;

namespace {

PiPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return PiPoly(v);
}

PiPoly random_poly(std::mt19937& eng) {
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> c;
  for (int i = len(eng); i > 0; --i) {
    Rational q(num(eng), den(eng));
    q.canonicalize();
    c.push_back(q);
  }
  return PiPoly(c);
}

}  // namespace

TEST(PiPoly, AdditionCancelsToCanonicalForm) {
  EXPECT_EQ(poly({1, 2}) + poly({3, -2}), PiPoly(4));
  EXPECT_EQ((poly({1, 2}) + poly({3, -2})).degree(), 0);
  EXPECT_EQ(PiPoly() + PiPoly::pi(), PiPoly::pi());
  EXPECT_EQ(PiPoly::pi() + PiPoly::pi(), PiPoly::monomial(2, 1));
}

TEST(PiPoly, Multiplication) {
  EXPECT_EQ(PiPoly::pi() * PiPoly::pi(), PiPoly::monomial(1, 2));
  EXPECT_EQ(poly({1, 1}) * poly({1, -1}), poly({1, 0, -1}));
  EXPECT_TRUE((PiPoly() * poly({3, 4})).is_zero());
}

TEST(PiPoly, SignExamples) {
  EXPECT_EQ(poly({-3, 1}).sign(), Sign::Positive);
  EXPECT_EQ(PiPoly().sign(), Sign::Zero);
  EXPECT_EQ(poly({22, -7}).sign(), Sign::Positive);
  EXPECT_EQ(poly({2, -2}).sign(), Sign::Negative);
  // 355/113 overshoots pi by less than 3e-7.
  EXPECT_EQ(PiPoly(std::vector<Rational>{Rational(355, 113), -1}).sign(), Sign::Positive);
}

TEST(PiPoly, SignNeedsRefinementBeyondSeed) {
  // Constant within 1e-40 of pi; the seeded 35-digit enclosure cannot decide.
  Rational near("3141592653589793238462643383279502884197/1000000000000000000000000000000000000000");
  near.canonicalize();
  EXPECT_EQ(PiPoly(std::vector<Rational>{near, -1}).sign(), Sign::Negative);
  Rational above("3141592653589793238462643383279502884198/1000000000000000000000000000000000000000");
  above.canonicalize();
  EXPECT_EQ(PiPoly(std::vector<Rational>{above, -1}).sign(), Sign::Positive);
}

TEST(PiPoly, ApproxExamples) {
  EXPECT_EQ(PiPoly::pi().approx(5), "3.14159");
  EXPECT_EQ(PiPoly(2).approx(3), "2.000");
  EXPECT_EQ(PiPoly::monomial(1, 2).approx(4), "9.8696");
  EXPECT_EQ(poly({2, -2}).approx(6), "-4.283185");
  EXPECT_EQ(PiPoly(Rational(1, 2)).approx(1), "0.5");
  EXPECT_EQ(PiPoly(Rational(-5, 8)).approx(2), "-0.63");  // tie rounds away from zero
  EXPECT_THROW(vortex::pp_approx(PiPoly::pi(), 0), vortex::PreconditionError);
}

TEST(PiPoly, PiEnclosureContainsKnownDigits) {
  Rational pi50("314159265358979323846264338327950288419716939937510/100000000000000000000000000000000000000000000000000");
  pi50.canonicalize();
  auto iv = vortex::pi_enclosure(45);
  EXPECT_LE(iv.lo, pi50 + Rational(1, 1000000));
  EXPECT_LT(iv.hi - iv.lo, Rational(mpz_class(1), mpz_class("1000000000000000000000000000000000000000000000")));
  EXPECT_LT(iv.lo, iv.hi);
  Rational lo_bound = pi50 - Rational(mpz_class(1), mpz_class("10000000000000000000000000000000000000000000000"));
  Rational hi_bound = pi50 + Rational(mpz_class(1), mpz_class("10000000000000000000000000000000000000000000000"));
  EXPECT_GE(iv.lo, lo_bound);
  EXPECT_LE(iv.hi, hi_bound);
}

TEST(PiPoly, MonomialDivision) {
  PiPoly p = poly({0, 4, 6});
  EXPECT_EQ(p.divide_by_monomial(2, 1), poly({2, 3}));
  EXPECT_EQ(p.divide(PiPoly::monomial(2, 1)), poly({2, 3}));
  EXPECT_THROW(poly({1, 1}).divide_by_monomial(1, 1), vortex::PreconditionError);
  EXPECT_THROW(p.divide(poly({1, 1})), vortex::PreconditionError);
}

TEST(PiPoly, ToString) {
  EXPECT_EQ(poly({100, -12}).to_string(), "100 - 12·π");
  EXPECT_EQ(PiPoly(std::vector<Rational>{0, 0, Rational(3, 2)}).to_string(), "3/2·π^2");
  EXPECT_EQ(poly({0, -1}).to_string(), "-π");
  EXPECT_EQ(PiPoly().to_string(), "0");
}

TEST(PiPolyProperty, RingAxioms) {
  std::mt19937 eng(7);
  for (int i = 0; i < 300; ++i) {
    PiPoly a = random_poly(eng), b = random_poly(eng), c = random_poly(eng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(PiPolyProperty, SignOfSquaresAndZero) {
  std::mt19937 eng(11);
  for (int i = 0; i < 300; ++i) {
    PiPoly a = random_poly(eng);
    EXPECT_EQ(a.sign() == Sign::Zero, a.is_zero());
    EXPECT_NE((a * a).sign(), Sign::Negative);
  }
}

TEST(PiPolyProperty, SignMatchesRenderedDecimal) {
  std::mt19937 eng(13);
  for (int i = 0; i < 300; ++i) {
    PiPoly a = random_poly(eng);
    std::string s = a.approx(8);
    bool all_zero = s.find_first_not_of("-0.") == std::string::npos;
    if (all_zero) continue;
    EXPECT_EQ(s[0] == '-', a.sign() == Sign::Negative) << a.to_string() << " -> " << s;
  }
}

TEST(Rational, ParseRejectsFloats) {
  EXPECT_EQ(vortex::parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(vortex::parse_rational("-7"), Rational(-7));
  EXPECT_THROW(vortex::parse_rational("1.5"), vortex::ParseError);
  EXPECT_THROW(vortex::parse_rational("1/0"), vortex::ParseError);
  EXPECT_THROW(vortex::parse_rational(""), vortex::ParseError);
  EXPECT_THROW(vortex::parse_rational("1e3"), vortex::ParseError);
  EXPECT_EQ(vortex::to_fraction_string(Rational(3)), "3/1");
}
