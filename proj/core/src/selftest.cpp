#include "vortex/selftest.hpp"

#include <cmath>
#include <functional>
#include <utility>

#include "vortex/errors.hpp"
#include "vortex/fourier_mukai.hpp"
#include "vortex/geometry.hpp"
#include "vortex/linalg.hpp"
#include "vortex/maps.hpp"
#include "vortex/metrics.hpp"
#include "vortex/moduli.hpp"

namespace vortex {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.suite = std::move(name); }

  void check(const std::string& what, const std::function<bool()>& f) {
    ++result_.checks;
    try {
      if (!f()) result_.failures.push_back(what);
    } catch (const std::exception& e) {
      result_.failures.push_back(what + " (threw: " + e.what() + ")");
    }
  }

  SelftestResult take() { return std::move(result_); }

 private:
  SelftestResult result_;
};

const PiPoly kPi = PiPoly::pi();

RingElement one(const PresentationPtr& p) { return RingElement::scalar(p, PiPoly(1)); }

AbelianVarietyData abelian(std::vector<long> deltas) {
  AbelianVarietyData a;
  a.m = static_cast<int>(deltas.size());
  a.deltas = std::move(deltas);
  a.lambdas.assign(a.m, Rational(1));
  return a;
}

// Delta vectors with m <= max_m and entries in 1..max_delta.
std::vector<std::vector<long>> delta_grid(int max_m, long max_delta) {
  std::vector<std::vector<long>> out;
  for (int m = 1; m <= max_m; ++m) {
    std::vector<long> d(m, 1);
    while (true) {
      out.push_back(d);
      int i = 0;
      while (i < m && d[i] == max_delta) d[i++] = 1;
      if (i == m) break;
      ++d[i];
    }
  }
  return out;
}

SigmaVector sigma_of(std::vector<long> v) {
  SigmaVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

PiPoly ps_volume(const PiPoly& sigma, int d) { return (kPi * sigma).pow(d) / Rational(factorial(d)); }

void scalars_suite(Suite& s) {
  s.check("(1 + pi)^2 expands", [] { return (PiPoly(1) + kPi).pow(2) == PiPoly(std::vector<Rational>{1, 2, 1}); });
  s.check("sign of 2 - 2 pi", [] { return pp_sign(PiPoly(2) - kPi * PiPoly(2)) == Sign::Negative; });
  s.check("355/113 exceeds pi", [] { return pp_sign(PiPoly(355) - kPi * PiPoly(113)) == Sign::Positive; });
  s.check("22/7 exceeds pi", [] { return compare(PiPoly(Rational(22, 7)), kPi) > 0; });
  s.check("rationals are canonical", [] { return to_short_string(parse_rational("6/4")) == "3/2"; });
  s.check("exact division", [] { return (kPi.pow(3) * PiPoly(4)).divide(kPi * PiPoly(2)) == kPi.pow(2) * PiPoly(2); });
  s.check("pi approximation", [] { return std::abs(kPi.to_double() - 3.14159265358979) < 1e-12; });
}

void cones_suite(Suite& s) {
  const WeightSystem square({{1, 0}, {0, 1}});
  s.check("interior of the positive quadrant", [&] {
    return in_cone_interior(square, IndexSet::all(2), sigma_of({1, 2})) &&
           !in_cone_interior(square, IndexSet::all(2), sigma_of({0, 2})) &&
           in_cone_closed(square, IndexSet::all(2), sigma_of({0, 2})) &&
           !in_cone_closed(square, IndexSet::all(2), sigma_of({-1, 2}));
  });
  const WeightSystem three({{1, 1, 0}, {0, 1, 1}});
  s.check("cone of (1,0), (1,1), (0,1)", [&] {
    return in_cone_interior(three, IndexSet::all(3), sigma_of({1, 3})) &&
           !in_cone_interior(three, IndexSet::of({0, 1}), sigma_of({1, 3})) &&
           in_cone_interior(three, IndexSet::of({1, 2}), sigma_of({1, 3}));
  });
  s.check("square decomposition", [&] {
    auto d = sigma_decomposition_square(square, sigma_of({3, 0}));
    return d && d->i_plus == IndexSet::of({0}) && d->i_zero == IndexSet::of({1});
  });
  s.check("minimal support has k elements", [&] { return minimal_support(three, sigma_of({1, 3})).size() == 2; });
  s.check("Smith invariants", [] {
    auto inv = smith_invariants({{Integer(2), Integer(0)}, {Integer(0), Integer(3)}});
    return inv.size() == 2 && inv[0] == 1 && inv[1] == 6;
  });
  s.check("lattice generation", [] {
    return generates_lattice(WeightSystem({{1, 1}}), IndexSet::all(2)) &&
           !generates_lattice(WeightSystem::unchecked({{2, 2}}), IndexSet::all(2));
  });
}

void cohomring_suite(Suite& s) {
  // x = a b + c d in an exterior algebra: x^2 = 2 abcd is the last nonzero power.
  const auto p = exterior_ring({"a", "b", "c", "d"});
  const auto x = RingElement::product(p, {"a", "b"}) + RingElement::product(p, {"c", "d"});
  s.check("odd generators anticommute", [&] {
    return RingElement::product(p, {"a", "b"}) == -RingElement::product(p, {"b", "a"});
  });
  s.check("exp against its truncated series", [&] {
    return formal_series(Series::Exp, x) == one(p) + x + x * x * PiPoly(Rational(1, 2));
  });
  s.check("exp inverts log1p", [&] {
    return formal_series(Series::Exp, formal_series(Series::Log1p, x)) == one(p) + x;
  });
  s.check("geometric inverse", [&] {
    return formal_series(Series::GeometricInverse, one(p) + x) * (one(p) + x) == one(p);
  });
  s.check("truncated polynomial ring", [] {
    auto q = truncated_polynomial_ring("eta", 3);
    auto e = RingElement::generator(q, "eta");
    return e.pow(3).is_zero() && !e.pow(2).is_zero();
  });
  s.check("fibre integration", [] {
    auto q = tensor_presentation(exterior_ring({"u", "v"}), truncated_polynomial_ring("g", 2));
    auto a = RingElement::generator(q, "g") * RingElement::product(q, {"u", "v"}) * PiPoly(5);
    auto base = truncated_polynomial_ring("g", 2);
    return fibre_integrate(a, std::vector<std::string>{"u", "v"}, base) ==
           RingElement::generator(base, "g") * PiPoly(5);
  });
}

void fourier_mukai_suite(Suite& s) {
  for (const auto& d : delta_grid(2, 3)) {
    const auto a = abelian(d);
    std::string tag = "delta =";
    for (long x : d) tag += " " + std::to_string(x);
    s.check("closed form matches the character, " + tag,
            [&] { return chern_closed_form(a) == chern_from_character(ch_transform(a)); });
    s.check("push-forward matches the product formula, " + tag,
            [&] { return ch_transform_pushforward(a) == ch_transform(a); });
    s.check("segre inverts c, " + tag, [&] {
      const auto c = chern_closed_form(a);
      return segre(c) * c == one(c.presentation());
    });
    s.check("recursion and power formula, " + tag, [&] {
      for (int j = 2; j <= a.m; ++j) {
        if (!recursion_check(a, j) || !power_formula_check(a, j)) return false;
      }
      return true;
    });
    s.check("Kähler power transform, " + tag, [&] { return fm_kahler_power(a) == fm_kahler_power_closed(a); });
  }
}

void geometry_suite(Suite& s) {
  s.check("projective space sections are binomials", [] {
    for (int m = 1; m <= 4; ++m) {
      for (long d = 0; d <= 6; ++d) {
        if (r_sections(ProjectiveSpace{m, 1}, Degree{d}) != binomial(m + d, d)) return false;
      }
    }
    return true;
  });
  s.check("Gr(m+1, 1) is projective space", [] {
    for (int m = 1; m <= 4; ++m) {
      for (long d = 0; d <= 6; ++d) {
        if (r_sections(Grassmannian{m + 1, 1, 1}, Degree{d}) != r_sections(ProjectiveSpace{m, 1}, Degree{d}))
          return false;
      }
    }
    return true;
  });
  s.check("Hirzebruch F0 is a product of lines", [] {
    return r_sections(Hirzebruch{0, 1, 1}, Bidegree{2, 3}) == 12;
  });
  s.check("volume of CP^2", [] { return volume(ProjectiveSpace{2, 2}) == Rational(2); });
  s.check("abelian sections", [] { return r_sections(AbelianVariety{2, {1, 1}}, Deltas{{2, 3}}) == 6; });
}

void moduli_suite(Suite& s) {
  s.check("CP^1, degree 3: projective space of dimension 3", [] {
    auto d = build_moduli(line_bundle_model(ProjectiveSpace{1, 1}, Degree{3}, 100, 1));
    return d.kind == ModuliKind::ProjectiveSpace && d.complex_dimension == 3 && d.sigma[0] == PiPoly(100) - kPi * PiPoly(6);
  });
  s.check("abelian surface: projective bundle of rank 8", [] {
    auto d = build_moduli(line_bundle_model(AbelianVariety{2, {1, 1}}, Deltas{{2, 4}}, 100, 1));
    return d.kind == ModuliKind::ProjectiveBundle && d.fibre_rank == 8 && d.complex_dimension == 9;
  });
  s.check("dimension formula", [] {
    const WeightSystem ws({{1, 1}});
    return moduli_dimension_glsm(ws, sigma_of({1}), {2, 3}) == 4 &&
           !moduli_dimension_glsm(ws, sigma_of({-1}), {2, 3});
  });
  s.check("negative sigma is empty", [] {
    auto d = build_moduli(line_bundle_model(ProjectiveSpace{1, 1}, Degree{1}, 2, 1));
    return d.verdict == Verdict::Empty;
  });
}

void metrics_suite(Suite& s) {
  for (long d = 1; d <= 5; ++d) {
    s.check("projective-space volume, degree " + std::to_string(d), [d] {
      auto m = line_bundle_model(ProjectiveSpace{1, 1}, Degree{d}, 100, 1);
      auto sigma = model_sigma(m)[0];
      return volume_moduli(m) == ps_volume(sigma, static_cast<int>(d));
    });
  }
  s.check("abelian-surface volume closed form", [] {
    auto m = line_bundle_model(AbelianVariety{2, {1, 1}}, Deltas{{1, 2}}, 100, 1);
    const PiPoly sigma = model_sigma(m)[0];
    const long r = 2;
    // pi Vol (pi sigma)^r / r! [tau sigma + 4 pi^2 r / e^4], Vol = 1.
    PiPoly want = kPi * ps_volume(sigma, r) * (sigma * PiPoly(100) + kPi.pow(2) * PiPoly(4 * r));
    return volume_moduli(m) * sigma == want;
  });
  s.check("elliptic-curve energy", [] {
    auto m = line_bundle_model(AbelianVariety{1, {1}}, Deltas{{3}}, 10, 1);
    const PiPoly want = kPi * PiPoly(10) * PiPoly(3) * PiPoly(2);
    return vortex_energy(m) == want && limit_energy(m) == want;
  });
  s.check("strong-coupling volume", [] {
    auto m = line_bundle_model(ProjectiveSpace{1, 1}, Degree{2}, 3, 1, 2);
    // (pi tau Vol)^(n r - 1) / (n r - 1)!
    return limit_volume(m) == ps_volume(PiPoly(3), 5);
  });
}

void maps_suite(Suite& s) {
  s.check("open-dense iff n > m", [] {
    for (int n = 2; n <= 5; ++n) {
      for (int m = 1; m <= 4; ++m) {
        auto t = ToricTarget::projective_space(n);
        auto data = section_data(t, ProjectiveSpace{m, 1}, {Degree{1}});
        if (embedding_open_dense(t, ProjectiveSpace{m, 1}, data) != (n > m)) return false;
      }
    }
    return true;
  });
  s.check("projective target has one unstable plane", [] {
    auto planes = unstable_planes(ToricTarget::projective_space(4, 2));
    return planes.size() == 1 && planes[0].dim == 0 && planes[0].allowed.empty();
  });
  s.check("degree-1 lines in CP^2", [] {
    return maps_volume_conjectural(ToricTarget::projective_space(2), ProjectiveSpace{1}, 1, 1) == kPi.pow(3) / Rational(6);
  });
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"scalars", scalars_suite}, {"cones", cones_suite},     {"cohomring", cohomring_suite},
      {"fourier_mukai", fourier_mukai_suite}, {"geometry", geometry_suite}, {"moduli", moduli_suite},
      {"metrics", metrics_suite}, {"maps", maps_suite}};
  return r;
}

}  // namespace

const std::vector<std::string>& selftest_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SelftestResult> run_selftest(const std::string& filter) {
  std::vector<SelftestResult> out;
  for (const auto& [name, fn] : registry()) {
    if (!filter.empty() && filter != name) continue;
    Suite s(name);
    fn(s);
    out.push_back(s.take());
  }
  if (out.empty()) throw PreconditionError("unknown self-test suite: " + filter);
  return out;
}

}  // namespace vortex
