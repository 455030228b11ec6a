#include "vortex/cohomring.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

std::atomic<bool> g_series_fault{false};

std::vector<int> odd_members(std::uint64_t bits) {
  std::vector<int> out;
  while (bits != 0) {
    int j = std::countr_zero(bits);
    out.push_back(j);
    bits &= bits - 1;
  }
  return out;
}

void require_same(const PresentationPtr& a, const PresentationPtr& b) {
  if (!same_presentation(a, b)) throw PreconditionError("ring elements belong to different presentations");
}

void add_reduced(TermMap& out, const RingPresentation& p, Monomial m, const PiPoly& c) {
  if (c.is_zero()) return;
  if (p.top_degree() && p.degree(m) > *p.top_degree()) return;
  const auto& even = p.even();
  for (std::size_t i = 0; i < even.size(); ++i) {
    const auto& g = even[i];
    if (g.rule == EvenRule::Truncated && m.even[i] >= g.head) return;
    if (g.rule == EvenRule::Relation && m.even[i] >= g.head) {
      Monomial base = m;
      base.even[i] -= g.head;
      for (int k = 1; k <= g.head; ++k) {
        for (const auto& [t, tc] : g.coefficients[k - 1]) {
          if ((base.odd & t.odd) != 0) continue;
          Monomial nm;
          nm.odd = base.odd | t.odd;
          nm.even = base.even;
          for (std::size_t e = 0; e < nm.even.size(); ++e) nm.even[e] += t.even[e];
          nm.even[i] += g.head - k;
          PiPoly nc = c * tc;
          if (merge_sign(base.odd, t.odd) > 0) nc = -nc;
          add_reduced(out, p, std::move(nm), nc);
        }
      }
      return;
    }
  }
  auto it = out.find(m);
  if (it == out.end()) {
    out.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

int permutation_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::string monomial_string(const RingPresentation& p, const Monomial& m) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < p.even().size(); ++i) {
    if (m.even[i] == 0) continue;
    std::string s = p.even()[i].name;
    if (m.even[i] > 1) s += "^" + std::to_string(m.even[i]);
    parts.push_back(std::move(s));
  }
  std::string odd;
  for (int j : odd_members(m.odd)) {
    if (!odd.empty()) odd += "∧";
    odd += p.odd_names()[j];
  }
  if (!odd.empty()) parts.push_back(std::move(odd));
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "·";
    out += s;
  }
  return out;
}

}  // namespace

int merge_sign(std::uint64_t left, std::uint64_t right) {
  int count = 0;
  for (int b : odd_members(right)) {
    std::uint64_t above = b >= 63 ? 0 : (left >> (b + 1));
    count += std::popcount(above);
  }
  return count % 2 == 0 ? 1 : -1;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.even != b.even) return a.even < b.even;
  if (a.odd == b.odd) return false;
  auto x = odd_members(a.odd);
  auto y = odd_members(b.odd);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

RingPresentation::RingPresentation(std::vector<std::string> odd, std::vector<EvenGenerator> even,
                                   std::optional<int> top_degree)
    : odd_(std::move(odd)), even_(std::move(even)), top_(top_degree) {
  if (odd_.size() > 64) throw PreconditionError("at most 64 odd generators are supported");
  std::set<std::string> seen;
  for (const auto& n : odd_) {
    if (!seen.insert(n).second) throw PreconditionError("duplicate generator name: " + n);
  }
  for (const auto& g : even_) {
    if (!seen.insert(g.name).second) throw PreconditionError("duplicate generator name: " + g.name);
    if (g.degree <= 0 || g.degree % 2 != 0) throw PreconditionError("even generator needs positive even degree");
    if (g.rule != EvenRule::Free && g.head < 1) throw PreconditionError("relation head must be positive");
    if (g.rule == EvenRule::Relation && static_cast<int>(g.coefficients.size()) != g.head) {
      throw PreconditionError("relation needs one coefficient per lower power");
    }
  }
}

std::optional<int> RingPresentation::odd_index(std::string_view name) const {
  for (std::size_t i = 0; i < odd_.size(); ++i) {
    if (odd_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> RingPresentation::even_index(std::string_view name) const {
  for (std::size_t i = 0; i < even_.size(); ++i) {
    if (even_[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool RingPresentation::has_generator(std::string_view name) const {
  return odd_index(name).has_value() || even_index(name).has_value();
}

int RingPresentation::degree(const Monomial& m) const {
  int d = std::popcount(m.odd);
  for (std::size_t i = 0; i < even_.size(); ++i) d += m.even[i] * even_[i].degree;
  return d;
}

std::optional<int> RingPresentation::max_degree() const {
  int bound = static_cast<int>(odd_.size());
  for (const auto& g : even_) {
    if (g.rule != EvenRule::Truncated) {
      if (!top_) return std::nullopt;
      bound = *top_;
      break;
    }
    bound += (g.head - 1) * g.degree;
  }
  if (top_) bound = std::min(bound, *top_);
  return bound;
}

PresentationPtr make_presentation(std::vector<std::string> odd, std::vector<EvenGenerator> even,
                                  std::optional<int> top_degree) {
  return std::make_shared<const RingPresentation>(std::move(odd), std::move(even), top_degree);
}

PresentationPtr exterior_ring(std::vector<std::string> names) {
  int top = static_cast<int>(names.size());
  return make_presentation(std::move(names), {}, top);
}

PresentationPtr truncated_polynomial_ring(std::string name, int truncation, int degree) {
  EvenGenerator g;
  g.name = std::move(name);
  g.degree = degree;
  g.rule = EvenRule::Truncated;
  g.head = truncation;
  return make_presentation({}, {g}, (truncation - 1) * degree);
}

PresentationPtr trivial_ring() { return make_presentation({}, {}, 0); }

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
  return a == b || (a && b && *a == *b);
}

RingElement::RingElement(PresentationPtr p) : pres_(std::move(p)) {
  if (!pres_) throw PreconditionError("null presentation");
}

RingElement RingElement::scalar(PresentationPtr p, const PiPoly& c) {
  RingElement e(std::move(p));
  Monomial one;
  one.even.assign(e.pres_->even().size(), 0);
  e.add_term(one, c);
  return e;
}

RingElement RingElement::generator(PresentationPtr p, std::string_view name) {
  RingElement e(std::move(p));
  Monomial m;
  m.even.assign(e.pres_->even().size(), 0);
  if (auto i = e.pres_->odd_index(name)) {
    m.odd = std::uint64_t{1} << *i;
  } else if (auto j = e.pres_->even_index(name)) {
    m.even[*j] = 1;
  } else {
    throw PreconditionError("unknown generator: " + std::string(name));
  }
  e.add_term(m, PiPoly(1L));
  return e;
}

RingElement RingElement::product(PresentationPtr p, const std::vector<std::string>& names) {
  RingElement e = scalar(p, PiPoly(1L));
  for (const auto& n : names) e = e * generator(p, n);
  return e;
}

PiPoly RingElement::scalar_term() const {
  Monomial one;
  one.even.assign(pres_->even().size(), 0);
  return coefficient(one);
}

PiPoly RingElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? PiPoly() : it->second;
}

RingElement RingElement::graded(int degree) const {
  RingElement out(pres_);
  for (const auto& [m, c] : terms_) {
    if (pres_->degree(m) == degree) out.terms_.emplace(m, c);
  }
  return out;
}

std::optional<int> RingElement::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int x = pres_->degree(m);
    if (d && *d != x) return std::nullopt;
    d = x;
  }
  return d;
}

void RingElement::add_term(const Monomial& m, const PiPoly& c) {
  if (m.even.size() != pres_->even().size()) throw PreconditionError("monomial does not match presentation");
  add_reduced(terms_, *pres_, m, c);
}

RingElement& RingElement::operator+=(const RingElement& o) {
  require_same(pres_, o.pres_);
  for (const auto& [m, c] : o.terms_) add_reduced(terms_, *pres_, m, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_same(pres_, o.pres_);
  for (const auto& [m, c] : o.terms_) add_reduced(terms_, *pres_, m, -c);
  return *this;
}

RingElement& RingElement::operator*=(const PiPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same(a.pres_, b.pres_);
  RingElement out(a.pres_);
  const auto& p = *a.pres_;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if ((ma.odd & mb.odd) != 0) continue;
      Monomial m;
      m.odd = ma.odd | mb.odd;
      m.even = ma.even;
      for (std::size_t i = 0; i < m.even.size(); ++i) m.even[i] += mb.even[i];
      PiPoly c = ca * cb;
      if (merge_sign(ma.odd, mb.odd) < 0) c = -c;
      add_reduced(out.terms_, p, std::move(m), c);
    }
  }
  return out;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return same_presentation(a.pres_, b.pres_) && a.terms_ == b.terms_;
}

RingElement RingElement::pow(unsigned e) const {
  RingElement result = scalar(pres_, PiPoly(1L));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<const Monomial*, const PiPoly*>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(&m, &c);
  std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    return pres_->degree(*x.first) < pres_->degree(*y.first);
  });
  std::string out;
  for (const auto& [m, c] : order) {
    std::string mono = monomial_string(*pres_, *m);
    bool negative = false;
    std::string coef;
    if (c->is_monomial()) {
      PiPoly mag = *c;
      if (c->coeffs()[static_cast<std::size_t>(c->degree())] < 0) {
        negative = true;
        mag = -mag;
      }
      coef = mag.to_string();
    } else {
      coef = "(" + c->to_string() + ")";
    }
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else {
      term = coef + "·" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) { return a * b; }

RingElement formal_series(Series f, const RingElement& x) {
  const auto& p = x.presentation();
  RingElement one = RingElement::scalar(p, PiPoly(1L));
  RingElement y = x;
  if (f == Series::GeometricInverse) {
    if (x.scalar_term() != PiPoly(1L)) throw NonNilpotent("geometric_inverse needs scalar term 1");
    y = x - one;
  } else if (!x.scalar_term().is_zero()) {
    throw NonNilpotent("series argument has a nonzero scalar term");
  }
  const int bound = p->max_degree().value_or(4096);
  RingElement result = f == Series::Exp || f == Series::GeometricInverse ? one : RingElement(p);
  RingElement power = y;
  Integer fact = 1;
  for (int k = 1; !power.is_zero(); ++k) {
    if (k > bound + 1) throw NonNilpotent("series did not terminate; argument is not nilpotent");
    Rational coef;
    switch (f) {
      case Series::Exp:
        fact *= k;
        coef = Rational(1, fact);
        if (k == 2 && fault::series_fault()) coef = Rational(1, 3);
        break;
      case Series::Log1p:
        coef = Rational(k % 2 == 1 ? 1 : -1, k);
        break;
      case Series::Arctan:
        coef = k % 2 == 0 ? Rational(0) : Rational(((k - 1) / 2) % 2 == 0 ? 1 : -1, k);
        break;
      case Series::GeometricInverse:
        coef = k % 2 == 0 ? 1 : -1;
        break;
    }
    coef.canonicalize();
    if (coef != 0) result += power * PiPoly(coef);
    power = power * y;
  }
  return result;
}

RingElement embed(const RingElement& a, const PresentationPtr& target) {
  const auto& src = *a.presentation();
  // Generators are looked up on first use, so unused ones need not exist in the target.
  std::vector<std::optional<RingElement>> odd_img(src.odd_names().size());
  std::vector<std::optional<RingElement>> even_img(src.even().size());
  RingElement out(target);
  for (const auto& [m, c] : a.terms()) {
    RingElement t = RingElement::scalar(target, c);
    for (int j : odd_members(m.odd)) {
      if (!odd_img[j]) odd_img[j] = RingElement::generator(target, src.odd_names()[j]);
      t = t * *odd_img[j];
    }
    for (std::size_t i = 0; i < m.even.size(); ++i) {
      if (m.even[i] == 0) continue;
      if (!even_img[i]) even_img[i] = RingElement::generator(target, src.even()[i].name);
      for (int e = 0; e < m.even[i]; ++e) t = t * *even_img[i];
    }
    out += t;
  }
  return out;
}

PresentationPtr tensor_presentation(const PresentationPtr& p, const PresentationPtr& q) {
  for (const auto& n : q->odd_names()) {
    if (p->has_generator(n)) throw PreconditionError("generator name collision: " + n);
  }
  for (const auto& g : q->even()) {
    if (p->has_generator(g.name)) throw PreconditionError("generator name collision: " + g.name);
  }
  const int shift = static_cast<int>(p->odd_names().size());
  if (shift + q->odd_names().size() > 64) throw PreconditionError("too many odd generators");
  const std::size_t pe = p->even().size();
  const std::size_t qe = q->even().size();

  std::vector<std::string> odd = p->odd_names();
  odd.insert(odd.end(), q->odd_names().begin(), q->odd_names().end());
  std::vector<EvenGenerator> even;
  for (auto g : p->even()) {
    for (auto& tm : g.coefficients) {
      TermMap moved;
      for (const auto& [m, c] : tm) {
        Monomial nm = m;
        nm.even.resize(pe + qe, 0);
        moved.emplace(std::move(nm), c);
      }
      tm = std::move(moved);
    }
    even.push_back(std::move(g));
  }
  for (auto g : q->even()) {
    for (auto& tm : g.coefficients) {
      TermMap moved;
      for (const auto& [m, c] : tm) {
        Monomial nm;
        nm.odd = m.odd << shift;
        nm.even.assign(pe, 0);
        nm.even.insert(nm.even.end(), m.even.begin(), m.even.end());
        moved.emplace(std::move(nm), c);
      }
      tm = std::move(moved);
    }
    even.push_back(std::move(g));
  }
  std::optional<int> top;
  if (p->top_degree() && q->top_degree()) top = *p->top_degree() + *q->top_degree();
  return make_presentation(std::move(odd), std::move(even), top);
}

PresentationPtr with_relation(const PresentationPtr& p, std::string_view name, const std::vector<RingElement>& c) {
  auto idx = p->even_index(name);
  if (!idx) throw PreconditionError("no even generator named " + std::string(name));
  auto even = p->even();
  auto& g = even[*idx];
  if (g.rule != EvenRule::Free) throw PreconditionError("generator already carries a relation");
  if (c.empty()) throw PreconditionError("relation needs at least one coefficient");
  g.rule = EvenRule::Relation;
  g.head = static_cast<int>(c.size());
  g.coefficients.clear();
  for (std::size_t k = 0; k < c.size(); ++k) {
    require_same(p, c[k].presentation());
    const int want = static_cast<int>(k + 1) * g.degree;
    for (const auto& [m, v] : c[k].terms()) {
      if (m.even[*idx] != 0) throw PreconditionError("relation coefficient involves its own head");
      if (p->degree(m) != want) throw PreconditionError("relation coefficient is not homogeneous of the right degree");
    }
    g.coefficients.push_back(c[k].terms());
  }
  return make_presentation(p->odd_names(), std::move(even), p->top_degree());
}

RingElement fibre_integrate(const RingElement& a, const FibreClass& fibre, const PresentationPtr& base) {
  const auto& p = *a.presentation();
  std::uint64_t mask = 0;
  std::vector<int> order;
  for (const auto& n : fibre.odd) {
    auto i = p.odd_index(n);
    if (!i) throw PreconditionError("malformed top monomial: " + n + " is not an odd generator");
    std::uint64_t bit = std::uint64_t{1} << *i;
    if ((mask & bit) != 0) throw PreconditionError("malformed top monomial: repeated " + n);
    mask |= bit;
    order.push_back(*i);
  }
  const int orientation = permutation_sign(order);
  std::vector<std::pair<int, int>> even_top;
  for (const auto& [n, e] : fibre.even) {
    auto i = p.even_index(n);
    if (!i) throw PreconditionError("malformed top monomial: " + n + " is not an even generator");
    even_top.emplace_back(*i, e);
  }

  RingElement local(a.presentation());
  for (const auto& [m, c] : a.terms()) {
    if ((m.odd & mask) != mask) continue;
    bool match = true;
    for (auto [i, e] : even_top) match = match && m.even[i] == e;
    if (!match) continue;
    Monomial rest = m;
    rest.odd = m.odd & ~mask;
    for (auto [i, e] : even_top) rest.even[i] = 0;
    PiPoly v = c * fibre.value;
    if (merge_sign(rest.odd, mask) * orientation < 0) v = -v;
    local.add_term(rest, v);
  }
  if (!base) return local;
  return embed(local, base);
}

RingElement fibre_integrate(const RingElement& a, const std::vector<std::string>& top_monomial,
                            const PresentationPtr& base) {
  FibreClass f;
  f.odd = top_monomial;
  return fibre_integrate(a, f, base);
}

namespace fault {
void set_series_fault(bool on) { g_series_fault.store(on); }
bool series_fault() { return g_series_fault.load(); }
}  // namespace fault

}  // namespace vortex
