#include "vortex/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void unsupported_pair(const ManifoldDescriptor& man, const BundleDescriptor& bun) {
  throw UnsupportedError("bundle " + bundle_label(bun) + " does not apply to " + manifold_label(man));
}

long pic_degree(const ManifoldDescriptor& man, const BundleDescriptor& bun) {
  if (const auto* d = std::get_if<Degree>(&bun)) return d->d;
  unsupported_pair(man, bun);
}

const std::vector<long>& deltas_of(const ManifoldDescriptor& man, const BundleDescriptor& bun) {
  const auto* d = std::get_if<Deltas>(&bun);
  if (!d) unsupported_pair(man, bun);
  if (static_cast<int>(d->deltas.size()) != complex_dimension(man)) {
    throw PreconditionError("abelian bundle needs one delta per complex dimension");
  }
  return d->deltas;
}

const BundleTableEntry& table_entry(const GenericSimplyConnected& g, const ManifoldDescriptor& man,
                                    const BundleDescriptor& bun) {
  const auto* t = std::get_if<TableIndex>(&bun);
  if (!t) unsupported_pair(man, bun);
  if (t->index < 0 || t->index >= static_cast<int>(g.entries.size())) {
    throw PreconditionError("bundle table index out of range");
  }
  return g.entries[t->index];
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw UnsupportedError("section count does not fit in a machine integer");
  return z.get_si();
}

// lambda^e for the Picard-rank-one family
Rational lam_pow(const Rational& lambda, int e) { return power(lambda, static_cast<unsigned long>(e)); }

long grassmannian_sections(const Grassmannian& g, long d) {
  Rational prod = 1;
  for (int i = 1; i <= g.k; ++i) {
    for (int j = g.k + 1; j <= g.n; ++j) prod *= Rational(d + j - i, j - i);
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw InconsistentModel("Grassmannian section count is not an integer");
  return to_long(prod.get_num());
}

}  // namespace

void validate(const ManifoldDescriptor& man) {
  std::visit(overloaded{
                 [](const ProjectiveSpace& p) {
                   if (p.m < 1) throw PreconditionError("projective space needs m >= 1");
                   if (p.lambda <= 0) throw PreconditionError("Kähler scale must be positive");
                 },
                 [](const Grassmannian& g) {
                   if (g.k < 1 || g.n <= g.k) throw PreconditionError("Grassmannian needs 1 <= k < n");
                   if (g.lambda <= 0) throw PreconditionError("Kähler scale must be positive");
                 },
                 [](const Hirzebruch& h) {
                   if (h.k < 0) throw PreconditionError("Hirzebruch index must be nonnegative");
                   if (h.lambda <= 0 || h.delta <= 0) throw PreconditionError("Kähler coefficients must be positive");
                   if (2 * h.lambda - h.k * h.delta <= 0) {
                     throw PreconditionError("Hirzebruch Kähler class has non-positive volume");
                   }
                 },
                 [](const AbelianVariety& a) {
                   if (a.m < 1) throw PreconditionError("abelian variety needs m >= 1");
                   if (static_cast<int>(a.lambdas.size()) != a.m) throw PreconditionError("need m lambdas");
                   for (const auto& l : a.lambdas) {
                     if (l <= 0) throw PreconditionError("lambdas must be positive");
                   }
                 },
                 [](const GenericPicZ& g) {
                   if (g.m < 1 || g.t < 1) throw PreconditionError("generic Pic=Z manifold needs m >= 1 and t >= 1");
                   if (g.lambda <= 0) throw PreconditionError("Kähler scale must be positive");
                 },
                 [](const GenericSimplyConnected& g) {
                   if (g.m < 1) throw PreconditionError("manifold needs m >= 1");
                   if (g.vol <= 0) throw PreconditionError("volume must be positive");
                   for (const auto& e : g.entries) {
                     if (e.r < 0) throw PreconditionError("section counts must be nonnegative");
                   }
                 },
             },
             man);
}

int complex_dimension(const ManifoldDescriptor& man) {
  return std::visit(overloaded{
                        [](const ProjectiveSpace& p) { return p.m; },
                        [](const Grassmannian& g) { return g.k * (g.n - g.k); },
                        [](const Hirzebruch&) { return 2; },
                        [](const AbelianVariety& a) { return a.m; },
                        [](const GenericPicZ& g) { return g.m; },
                        [](const GenericSimplyConnected& g) { return g.m; },
                    },
                    man);
}

bool simply_connected(const ManifoldDescriptor& man) { return !is_abelian(man); }
bool is_abelian(const ManifoldDescriptor& man) { return std::holds_alternative<AbelianVariety>(man); }

std::string manifold_label(const ManifoldDescriptor& man) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const ProjectiveSpace& p) { os << "CP^" << p.m; },
                 [&](const Grassmannian& g) { os << "Gr(" << g.n << "," << g.k << ")"; },
                 [&](const Hirzebruch& h) { os << "F_" << h.k; },
                 [&](const AbelianVariety& a) { os << "abelian variety of dimension " << a.m; },
                 [&](const GenericPicZ& g) { os << "Pic=Z manifold of dimension " << g.m; },
                 [&](const GenericSimplyConnected& g) { os << "simply connected manifold of dimension " << g.m; },
             },
             man);
  return os.str();
}

std::string bundle_label(const BundleDescriptor& bun) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Degree& d) { os << "O(" << d.d << ")"; },
                 [&](const Bidegree& b) { os << "L(" << b.a << "," << b.b << ")"; },
                 [&](const Deltas& d) {
                   os << "delta=(";
                   for (std::size_t i = 0; i < d.deltas.size(); ++i) os << (i ? "," : "") << d.deltas[i];
                   os << ")";
                 },
                 [&](const TableIndex& t) { os << "table[" << t.index << "]"; },
             },
             bun);
  return os.str();
}

long r_sections(const ManifoldDescriptor& man, const BundleDescriptor& bun) {
  return std::visit(
      overloaded{
          [&](const ProjectiveSpace& p) -> long {
            long d = pic_degree(man, bun);
            if (d < 0) return 0;
            return to_long(binomial(p.m + d, d));
          },
          [&](const Grassmannian& g) -> long {
            long d = pic_degree(man, bun);
            if (d < 0) return 0;
            return grassmannian_sections(g, d);
          },
          [&](const Hirzebruch& h) -> long {
            const auto* b = std::get_if<Bidegree>(&bun);
            if (!b) unsupported_pair(man, bun);
            if (b->a < 0) return 0;
            long total = 0;
            for (long l = 0; l <= b->a; ++l) total += std::max(0L, b->b - h.k * l + 1);
            return total;
          },
          [&](const AbelianVariety&) -> long {
            const auto& d = deltas_of(man, bun);
            bool any_negative = false, any_zero = false, all_zero = true;
            for (long x : d) {
              any_negative = any_negative || x < 0;
              any_zero = any_zero || x == 0;
              all_zero = all_zero && x == 0;
            }
            if (any_negative) return 0;
            if (all_zero) return 1;
            if (any_zero) throw UnsupportedError("sections of degenerate semipositive bundles are not supported");
            long r = 1;
            for (long x : d) r *= x;
            return r;
          },
          [&](const GenericPicZ& g) -> long {
            long d = pic_degree(man, bun);
            if (d < 0) return 0;
            if (d == 0) return 1;
            auto it = g.sections.find(d);
            if (it == g.sections.end()) {
              throw UnsupportedError("no section count supplied for degree " + std::to_string(d));
            }
            return it->second;
          },
          [&](const GenericSimplyConnected& g) -> long { return table_entry(g, man, bun).r; },
      },
      man);
}

long t_number(const ManifoldDescriptor& man) {
  if (std::holds_alternative<ProjectiveSpace>(man)) return 1;
  if (const auto* g = std::get_if<Grassmannian>(&man)) {
    const int dim = g->k * (g->n - g->k);
    Rational t(factorial(dim));
    for (int j = 1; j <= g->k; ++j) t *= Rational(factorial(j - 1), factorial(g->n - g->k + j - 1));
    t.canonicalize();
    return to_long(t.get_num());
  }
  if (const auto* g = std::get_if<GenericPicZ>(&man)) return g->t;
  throw UnsupportedError("t_M is defined for Pic=Z manifolds only, not " + manifold_label(man));
}

Rational volume(const ManifoldDescriptor& man) {
  validate(man);
  const int m = complex_dimension(man);
  return std::visit(overloaded{
                        [&](const ProjectiveSpace& p) -> Rational { return lam_pow(p.lambda, m) / Rational(factorial(m)); },
                        [&](const Grassmannian& g) -> Rational {
                          return lam_pow(g.lambda, m) * Rational(t_number(man)) / Rational(factorial(m));
                        },
                        [&](const Hirzebruch& h) -> Rational { return h.delta * (2 * h.lambda - h.k * h.delta) / 2; },
                        [&](const AbelianVariety& a) -> Rational {
                          Rational v = 1;
                          for (const auto& l : a.lambdas) v *= l;
                          return v;
                        },
                        [&](const GenericPicZ& g) -> Rational { return lam_pow(g.lambda, m) * Rational(g.t) / Rational(factorial(m)); },
                        [&](const GenericSimplyConnected& g) -> Rational { return g.vol; },
                    },
                    man);
}

IntersectionNumbers intersection_numbers(const ManifoldDescriptor& man, const BundleDescriptor& bun) {
  validate(man);
  const int m = complex_dimension(man);
  IntersectionNumbers out;
  auto pic = [&](const Rational& lambda, long t) {
    const Rational d(pic_degree(man, bun));
    out.c1_omega = d * lam_pow(lambda, m - 1) * t;
    out.c1_squared = m >= 2 ? d * d * lam_pow(lambda, m - 2) * t : Rational(0);
  };
  std::visit(overloaded{
                 [&](const ProjectiveSpace& p) { pic(p.lambda, 1); },
                 [&](const Grassmannian& g) { pic(g.lambda, t_number(man)); },
                 [&](const GenericPicZ& g) { pic(g.lambda, g.t); },
                 [&](const Hirzebruch& h) {
                   const auto* b = std::get_if<Bidegree>(&bun);
                   if (!b) unsupported_pair(man, bun);
                   const Rational a(b->a), bb(b->b);
                   // (aC + bF).(delta C + lambda F) with C^2 = -k, C.F = 1, F^2 = 0
                   out.c1_omega = a * h.lambda + bb * h.delta - a * h.k * h.delta;
                   out.c1_squared = 2 * a * bb - Rational(h.k) * a * a;
                 },
                 [&](const AbelianVariety& av) {
                   const auto& d = deltas_of(man, bun);
                   // omega^(m-1)/(m-1)! = sum_j prod_{i != j} lambda_i B_i..., B_j^2 = 0
                   Rational s1 = 0, s2 = 0;
                   for (int j = 0; j < m; ++j) {
                     Rational prod = 1;
                     for (int i = 0; i < m; ++i) {
                       if (i != j) prod *= av.lambdas[i];
                     }
                     s1 += Rational(d[j]) * prod;
                   }
                   for (int i = 0; i < m; ++i) {
                     for (int j = i + 1; j < m; ++j) {
                       Rational prod = 1;
                       for (int l = 0; l < m; ++l) {
                         if (l != i && l != j) prod *= av.lambdas[l];
                       }
                       s2 += Rational(d[i] * d[j]) * prod;
                     }
                   }
                   out.c1_omega = s1 * Rational(factorial(m - 1));
                   out.c1_squared = m >= 2 ? 2 * s2 * Rational(factorial(m - 2)) : Rational(0);
                 },
                 [&](const GenericSimplyConnected& g) {
                   const auto& e = table_entry(g, man, bun);
                   out.c1_omega = e.slope_vol * m * Rational(factorial(m - 1));
                   if (m >= 2) {
                     if (!e.c1_squared) throw UnsupportedError("table entry lacks int c1^2 ∧ omega^(m-2)");
                     out.c1_squared = *e.c1_squared;
                   }
                 },
             },
             man);
  return out;
}

VolumeSlope volume_and_slope(const ManifoldDescriptor& man, const BundleDescriptor& bun) {
  VolumeSlope vs;
  vs.vol = volume(man);
  const int m = complex_dimension(man);
  if (const auto* g = std::get_if<GenericSimplyConnected>(&man)) {
    vs.slope_vol = table_entry(*g, man, bun).slope_vol;
    return vs;
  }
  vs.slope_vol = intersection_numbers(man, bun).c1_omega / (Rational(m) * Rational(factorial(m - 1)));
  return vs;
}

bool is_trivial(const ManifoldDescriptor& man, const BundleDescriptor& bun) {
  return std::visit(overloaded{
                        [](const Degree& d) { return d.d == 0; },
                        [](const Bidegree& b) { return b.a == 0 && b.b == 0; },
                        [](const Deltas& d) {
                          return std::all_of(d.deltas.begin(), d.deltas.end(), [](long x) { return x == 0; });
                        },
                        [&](const TableIndex&) {
                          const auto* g = std::get_if<GenericSimplyConnected>(&man);
                          if (!g) unsupported_pair(man, bun);
                          return table_entry(*g, man, bun).trivial;
                        },
                    },
                    bun);
}

BundleDescriptor combine_bundles(const std::vector<long>& coeffs, const std::vector<BundleDescriptor>& principal) {
  if (coeffs.size() != principal.size() || principal.empty()) {
    throw PreconditionError("need one coefficient per principal bundle");
  }
  const auto kind = principal[0].index();
  for (const auto& p : principal) {
    if (p.index() != kind) throw InconsistentModel("principal bundles mix descriptor kinds");
  }
  if (std::holds_alternative<TableIndex>(principal[0])) {
    throw UnsupportedError("table bundles cannot be combined; list the line bundles explicitly");
  }
  if (std::holds_alternative<Degree>(principal[0])) {
    long d = 0;
    for (std::size_t a = 0; a < coeffs.size(); ++a) d += coeffs[a] * std::get<Degree>(principal[a]).d;
    return Degree{d};
  }
  if (std::holds_alternative<Bidegree>(principal[0])) {
    Bidegree out;
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
      out.a += coeffs[a] * std::get<Bidegree>(principal[a]).a;
      out.b += coeffs[a] * std::get<Bidegree>(principal[a]).b;
    }
    return out;
  }
  const std::size_t m = std::get<Deltas>(principal[0]).deltas.size();
  Deltas out{std::vector<long>(m, 0)};
  for (std::size_t a = 0; a < coeffs.size(); ++a) {
    const auto& d = std::get<Deltas>(principal[a]).deltas;
    if (d.size() != m) throw InconsistentModel("principal bundles have different delta lengths");
    for (std::size_t j = 0; j < m; ++j) out.deltas[j] += coeffs[a] * d[j];
  }
  return out;
}

bool same_bundle(const BundleDescriptor& a, const BundleDescriptor& b) {
  if (a.index() != b.index()) return false;
  return std::visit(overloaded{
                        [&](const Degree& x) { return x.d == std::get<Degree>(b).d; },
                        [&](const Bidegree& x) { return x.a == std::get<Bidegree>(b).a && x.b == std::get<Bidegree>(b).b; },
                        [&](const Deltas& x) { return x.deltas == std::get<Deltas>(b).deltas; },
                        [&](const TableIndex& x) { return x.index == std::get<TableIndex>(b).index; },
                    },
                    a);
}

AbelianVarietyData abelian_data(const ManifoldDescriptor& man, const BundleDescriptor& bun) {
  const auto* a = std::get_if<AbelianVariety>(&man);
  if (!a) throw UnsupportedError("not an abelian variety: " + manifold_label(man));
  AbelianVarietyData av;
  av.m = a->m;
  av.deltas = deltas_of(man, bun);
  av.lambdas = a->lambdas;
  av.validate();
  return av;
}

BaseCohomology base_cohomology(const ManifoldDescriptor& man) {
  validate(man);
  const int m = complex_dimension(man);
  auto pic = [&](const Rational& lambda, long t) {
    auto ring = truncated_polynomial_ring("h", m + 1);
    BaseCohomology b{ring, RingElement::generator(ring, "h") * PiPoly(lambda), FibreClass{}};
    b.fundamental.even = {{"h", m}};
    b.fundamental.value = Rational(t);
    return b;
  };
  return std::visit(
      overloaded{
          [&](const ProjectiveSpace& p) { return pic(p.lambda, 1); },
          [&](const Grassmannian& g) { return pic(g.lambda, t_number(man)); },
          [&](const GenericPicZ& g) { return pic(g.lambda, g.t); },
          [&](const Hirzebruch& h) {
            EvenGenerator c{"C", 2, EvenRule::Free, 0, {}};
            EvenGenerator f{"F", 2, EvenRule::Truncated, 2, {}};
            auto free = make_presentation({}, {c, f}, 4);
            // C^2 = -k C F, i.e. C^2 + (k F) C + 0 = 0
            auto ring = with_relation(free, "C", {RingElement::generator(free, "F") * PiPoly(Rational(h.k)), RingElement(free)});
            RingElement omega = RingElement::generator(ring, "F") * PiPoly(h.lambda) +
                                RingElement::generator(ring, "C") * PiPoly(h.delta);
            BaseCohomology b{ring, omega, FibreClass{}};
            b.fundamental.even = {{"C", 1}, {"F", 1}};
            return b;
          },
          [&](const AbelianVariety& a) {
            auto ring = torus_ring(a.m);
            RingElement omega(ring);
            for (int j = 1; j <= a.m; ++j) {
              omega += RingElement::product(ring, {torus_generator(j), torus_generator(a.m + j)}) * PiPoly(a.lambdas[j - 1]);
            }
            BaseCohomology b{ring, omega, FibreClass{}};
            b.fundamental.odd = torus_orientation(a.m);
            return b;
          },
          [&](const GenericSimplyConnected&) -> BaseCohomology {
            throw UnsupportedError("no cohomology ring is available for a table-described manifold");
          },
      },
      man);
}

RingElement c1_class(const ManifoldDescriptor& man, const BaseCohomology& base, const BundleDescriptor& bun) {
  const auto& ring = base.ring;
  if (std::holds_alternative<Hirzebruch>(man)) {
    const auto* b = std::get_if<Bidegree>(&bun);
    if (!b) unsupported_pair(man, bun);
    return RingElement::generator(ring, "C") * PiPoly(b->a) + RingElement::generator(ring, "F") * PiPoly(b->b);
  }
  if (const auto* a = std::get_if<AbelianVariety>(&man)) {
    const auto& d = deltas_of(man, bun);
    RingElement c(ring);
    for (int j = 1; j <= a->m; ++j) {
      c += RingElement::product(ring, {torus_generator(j), torus_generator(a->m + j)}) * PiPoly(d[j - 1]);
    }
    return c;
  }
  return RingElement::generator(ring, "h") * PiPoly(pic_degree(man, bun));
}

RingElement integrate_over_base(const RingElement& a, const BaseCohomology& base, const PresentationPtr& target) {
  return fibre_integrate(a, base.fundamental, target ? target : trivial_ring());
}

}  // namespace vortex
