#include "vortex/cones.hpp"

#include <algorithm>
#include <bit>

#include "vortex/errors.hpp"
#include "vortex/linalg.hpp"
#include "vortex/lp.hpp"

namespace vortex {

namespace {

void check_rectangular(const std::vector<std::vector<long>>& rows) {
  if (rows.empty() || rows[0].empty()) throw PreconditionError("weight matrix must be at least 1x1");
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw PreconditionError("weight matrix rows differ in length");
  }
  if (rows[0].size() > 32) throw PreconditionError("at most 32 weight columns are supported");
}

RatMatrix submatrix(const WeightSystem& ws, IndexSet i) {
  RatMatrix m(ws.k());
  for (int a = 0; a < ws.k(); ++a) {
    for (int j : i.members()) m[a].emplace_back(ws.q(a, j));
  }
  return m;
}

void check_length(const WeightSystem& ws, const SigmaVector& v) {
  if (static_cast<int>(v.size()) != ws.k()) throw PreconditionError("vector length differs from the torus rank k");
}

void check_members(const WeightSystem& ws, IndexSet i) {
  if (ws.n() < 32 && (i.bits() >> ws.n()) != 0) throw PreconditionError("index set exceeds the number of weights");
}

}  // namespace

WeightSystem::WeightSystem(std::vector<std::vector<long>> rows, Unchecked) : rows_(std::move(rows)) {
  check_rectangular(rows_);
}

WeightSystem::WeightSystem(std::vector<std::vector<long>> rows)
    : WeightSystem(std::move(rows), Unchecked{}) {
  if (subset_rank(*this, IndexSet::all(n())) != k()) {
    throw PreconditionError("weights do not span R^k (representation not effective)");
  }
}

WeightSystem WeightSystem::unchecked(std::vector<std::vector<long>> rows) {
  return WeightSystem(std::move(rows), Unchecked{});
}

std::vector<long> WeightSystem::column(int j) const {
  std::vector<long> c;
  for (const auto& r : rows_) c.push_back(r[j]);
  return c;
}

bool WeightSystem::all_weights_one() const {
  if (k() != 1) return false;
  for (long q : rows_[0]) {
    if (q != 1) return false;
  }
  return true;
}

IndexSet IndexSet::of(std::initializer_list<int> members) {
  std::uint32_t bits = 0;
  for (int j : members) bits |= 1U << j;
  return IndexSet(bits);
}

IndexSet IndexSet::all(int n) { return IndexSet(n >= 32 ? ~0U : ((1U << n) - 1U)); }

int IndexSet::size() const { return std::popcount(bits_); }

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int j : members()) {
    if (!first) s += ",";
    s += std::to_string(j + 1);
    first = false;
  }
  return s + "}";
}

bool lex_less(IndexSet a, IndexSet b) {
  auto x = a.members();
  auto y = b.members();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

void require_enumerable(int n) {
  if (n > kMaxEnumeration) {
    throw PreconditionError("subset enumeration is limited to n <= " + std::to_string(kMaxEnumeration));
  }
}

SigmaVector sigma_vector_inv(const std::vector<Rational>& tau, const Rational& inv_e2, const Rational& vol_m,
                             int m, const std::vector<Rational>& slope_vol) {
  if (tau.size() != slope_vol.size()) throw PreconditionError("tau and slope_vol lengths differ");
  if (vol_m <= 0) throw PreconditionError("vol_M must be positive");
  if (inv_e2 < 0) throw PreconditionError("e^2 must be positive");
  if (m < 1) throw PreconditionError("complex dimension must be positive");
  SigmaVector sigma;
  for (std::size_t a = 0; a < tau.size(); ++a) {
    sigma.push_back(PiPoly(std::vector<Rational>{tau[a] * vol_m, -2 * m * inv_e2 * slope_vol[a]}));
  }
  return sigma;
}

SigmaVector sigma_vector(const std::vector<Rational>& tau, const Rational& e2, const Rational& vol_m, int m,
                         const std::vector<Rational>& slope_vol) {
  if (e2 <= 0) throw PreconditionError("e^2 must be positive");
  return sigma_vector_inv(tau, 1 / e2, vol_m, m, slope_vol);
}

bool in_cone_interior(const WeightSystem& ws, IndexSet i, const SigmaVector& v) {
  check_length(ws, v);
  check_members(ws, i);
  if (i.empty()) throw PreconditionError("in_cone_interior needs a nonempty index set");
  // lambda_j = mu_j + t with mu_j >= 0, 0 <= t <= 1; v is interior iff max t > 0.
  const auto cols = i.members();
  const std::size_t nv = cols.size() + 2;  // mu..., t, slack
  LpProblem lp;
  for (int a = 0; a < ws.k(); ++a) {
    std::vector<Rational> row(nv, Rational(0));
    Rational s = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      row[c] = ws.q(a, cols[c]);
      s += ws.q(a, cols[c]);
    }
    row[cols.size()] = s;
    lp.a.push_back(std::move(row));
    lp.b.push_back(v[a]);
  }
  std::vector<Rational> bound(nv, Rational(0));
  bound[cols.size()] = 1;
  bound[cols.size() + 1] = 1;
  lp.a.push_back(std::move(bound));
  lp.b.emplace_back(1L);
  lp.c.assign(nv, Rational(0));
  lp.c[cols.size()] = 1;
  auto r = solve_lp(lp);
  return r.status == LpStatus::Optimal && r.value.sign() == Sign::Positive;
}

bool in_cone_closed(const WeightSystem& ws, IndexSet i, const SigmaVector& v) {
  check_length(ws, v);
  check_members(ws, i);
  if (i.empty()) throw PreconditionError("in_cone_closed needs a nonempty index set");
  return lp_feasible(submatrix(ws, i), v);
}

int subset_rank(const WeightSystem& ws, IndexSet i) {
  if (i.empty()) return 0;
  return rank(submatrix(ws, i));
}

bool is_simple(const WeightSystem& ws, IndexSet i_phi) { return subset_rank(ws, i_phi) == ws.k(); }

bool generates_lattice(const WeightSystem& ws, IndexSet i) {
  if (subset_rank(ws, i) != ws.k()) throw PreconditionError("generates_lattice needs weights spanning R^k");
  IntMatrix m(ws.k());
  for (int a = 0; a < ws.k(); ++a) {
    for (int j : i.members()) m[a].emplace_back(static_cast<long>(ws.q(a, j)));
  }
  auto inv = smith_invariants(std::move(m));
  for (const auto& d : inv) {
    if (d != 1) return false;
  }
  return static_cast<int>(inv.size()) == ws.k();
}

bool in_span(const WeightSystem& ws, IndexSet i, const SigmaVector& v) {
  check_length(ws, v);
  if (i.empty()) {
    for (const auto& x : v) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  return solve_linear(submatrix(ws, i), v).has_value();
}

bool check_c1(const WeightSystem& ws, const SigmaVector& sigma) {
  require_enumerable(ws.n());
  if (!in_cone_closed(ws, IndexSet::all(ws.n()), sigma)) return false;
  // The empty subset spans {0}, so sigma = 0 never passes.
  const std::uint32_t count = 1U << ws.n();
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    IndexSet i(bits);
    if (subset_rank(ws, i) < ws.k() && in_span(ws, i, sigma)) return false;
  }
  return true;
}

bool check_c2(const WeightSystem& ws) {
  require_enumerable(ws.n());
  const std::uint32_t count = 1U << ws.n();
  for (std::uint32_t bits = 1; bits < count; ++bits) {
    IndexSet i(bits);
    if (subset_rank(ws, i) == ws.k() && !generates_lattice(ws, i)) return false;
  }
  return true;
}

bool hk_is_stable(const WeightSystem& ws, IndexSet i_phi, const SigmaVector& sigma) {
  check_length(ws, sigma);
  if (i_phi.empty()) {
    for (const auto& x : sigma) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  return in_cone_interior(ws, i_phi, sigma);
}

std::optional<SquareDecomposition> sigma_decomposition_square(const WeightSystem& ws, const SigmaVector& sigma) {
  check_length(ws, sigma);
  if (ws.n() != ws.k()) throw PreconditionError("sigma_decomposition_square needs n = k");
  if (subset_rank(ws, IndexSet::all(ws.n())) != ws.k()) throw PreconditionError("weights are singular");
  auto x = solve_linear(submatrix(ws, IndexSet::all(ws.n())), sigma);
  SquareDecomposition d;
  d.coefficients = *x;
  for (int j = 0; j < ws.n(); ++j) {
    switch (d.coefficients[j].sign()) {
      case Sign::Negative:
        return std::nullopt;
      case Sign::Zero:
        d.i_zero = d.i_zero.with(j);
        break;
      case Sign::Positive:
        d.i_plus = d.i_plus.with(j);
        break;
    }
  }
  return d;
}

IndexSet minimal_support(const WeightSystem& ws, const SigmaVector& tau) {
  const int n = ws.n();
  const int k = ws.k();
  if (k > n) throw NotFound("no k-subset exists");
  std::vector<int> idx(k);
  for (int a = 0; a < k; ++a) idx[a] = a;
  for (;;) {
    IndexSet s;
    for (int j : idx) s = s.with(j);
    if (in_cone_interior(ws, s, tau)) return s;
    int a = k - 1;
    while (a >= 0 && idx[a] == n - k + a) --a;
    if (a < 0) break;
    ++idx[a];
    for (int b = a + 1; b < k; ++b) idx[b] = idx[b - 1] + 1;
  }
  throw NotFound("no k-subset has tau in its interior; (H1) fails");
}

PiPoly StabilityThreshold::e2_threshold() const {
  if (unbounded || pi_u_star <= 0) throw PreconditionError("no finite positive threshold");
  return PiPoly::monomial(1 / pi_u_star, 1);
}

StabilityThreshold stability_threshold(const WeightSystem& ws, const std::vector<Rational>& tau,
                                       const Rational& vol_m, int m, const std::vector<Rational>& slope_vol,
                                       IndexSet i) {
  if (static_cast<int>(tau.size()) != ws.k() || static_cast<int>(slope_vol.size()) != ws.k()) {
    throw PreconditionError("tau/slope_vol length differs from k");
  }
  SigmaVector base;
  for (const auto& t : tau) base.emplace_back(t * vol_m);
  if (i.empty() || !in_cone_interior(ws, i, base)) throw NoThreshold("tau·Vol M is not interior to the cone");
  // With s = pi*u: maximize s subject to sum lambda_j Q_j + s*(2m*slope) = tau*vol.
  // The sup over the closed cone equals the sup over the interior because the
  // starting point is interior.
  const auto cols = i.members();
  LpProblem lp;
  for (int a = 0; a < ws.k(); ++a) {
    std::vector<Rational> row;
    for (int j : cols) row.emplace_back(ws.q(a, j));
    row.push_back(2 * m * slope_vol[a]);
    lp.a.push_back(std::move(row));
    lp.b.push_back(base[a]);
  }
  lp.c.assign(cols.size() + 1, Rational(0));
  lp.c.back() = 1;
  auto r = solve_lp(lp);
  StabilityThreshold out;
  if (r.status == LpStatus::Unbounded) {
    out.unbounded = true;
  } else {
    out.pi_u_star = r.value.constant_term();
  }
  return out;
}

}  // namespace vortex
