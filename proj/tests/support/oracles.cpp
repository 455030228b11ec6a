#include "oracles.hpp"

#include <bit>
#include <functional>
#include <optional>

using vortex::PiPoly;
using vortex::Rational;
using vortex::Sign;

namespace oracle {

namespace {

std::vector<int> members(std::uint32_t s) {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j) {
    if ((s >> j) & 1U) out.push_back(j);
  }
  return out;
}

// Solve Q_B x = rhs for columns B assumed independent; nullopt if
// inconsistent. Plain Gauss-Jordan on an augmented matrix.
std::optional<Vec> solve_columns(const Matrix& q, const std::vector<int>& cols, const Vec& rhs) {
  const std::size_t k = q.size();
  const std::size_t nb = cols.size();
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(nb));
  Vec b = rhs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < nb; ++c) a[i][c] = q[i][cols[c]];
  }
  std::size_t row = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < nb; ++c) {
    std::size_t p = row;
    while (p < k && a[p][c] == 0) ++p;
    if (p == k) return std::nullopt;  // dependent columns; caller avoids this
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[row][c];
      for (std::size_t j = 0; j < nb; ++j) a[i][j] -= f * a[row][j];
      b[i] -= b[row] * f;
    }
    piv.push_back(row);
    ++row;
  }
  for (std::size_t i = row; i < k; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  Vec x(nb);
  for (std::size_t c = 0; c < nb; ++c) x[c] = b[piv[c]] / a[piv[c]][c];
  return x;
}

bool all_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

int rank_of(const Matrix& q, std::uint32_t subset) {
  const auto cols = members(subset);
  std::vector<std::vector<Rational>> a(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (int c : cols) a[i].emplace_back(q[i][c]);
  }
  int r = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

bool in_cone_closed(const Matrix& q, std::uint32_t subset, const Vec& v) {
  if (all_zero(v)) return true;
  for (std::uint32_t b = subset;; b = (b - 1) & subset) {
    if (b != 0 && rank_of(q, b) == std::popcount(b)) {
      auto x = solve_columns(q, members(b), v);
      if (x) {
        bool ok = true;
        for (const auto& c : *x) ok = ok && c.sign() != Sign::Negative;
        if (ok) return true;
      }
    }
    if (b == 0) break;
  }
  return false;
}

bool in_cone_interior(const Matrix& q, std::uint32_t subset, const Vec& v) {
  Vec s(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (int j : members(subset)) s[i] += PiPoly(q[i][j]);
  }
  if (all_zero(v) && all_zero(s)) return true;
  for (std::uint32_t b = subset;; b = (b - 1) & subset) {
    if (b != 0 && rank_of(q, b) == std::popcount(b)) {
      auto x0 = solve_columns(q, members(b), v);
      auto x1 = solve_columns(q, members(b), s);
      if (x0 && x1) {
        bool ok = true;
        for (std::size_t i = 0; i < x0->size() && ok; ++i) {
          Sign a = (*x0)[i].sign();
          Sign c = (*x1)[i].sign();
          ok = a == Sign::Positive || (a == Sign::Zero && c != Sign::Positive);
        }
        if (ok) return true;
      }
    }
    if (b == 0) break;
  }
  return false;
}

int brute_dimension(const Matrix& q, const Vec& sigma, const std::vector<long>& r) {
  const int n = static_cast<int>(q[0].size());
  int best = -1;
  bool found = false;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    bool realizable = true;
    long d = 0;
    for (int j : members(s)) {
      realizable = realizable && r[j] > 0;
      d += r[j];
    }
    if (!realizable || !in_cone_interior(q, s, sigma)) continue;
    int dim = static_cast<int>(d) - rank_of(q, s);
    if (!found || dim > best) best = dim;
    found = true;
  }
  return found ? best : -1;
}

long count_monomials(int variables, int degree) {
  std::function<long(int, int)> rec = [&](int vars, int left) -> long {
    if (vars == 1) return 1;
    long total = 0;
    for (int e = 0; e <= left; ++e) total += rec(vars - 1, left - e);
    return total;
  };
  if (degree < 0) return 0;
  return rec(variables, degree);
}

long count_rectangular_ssyt(int n, int k, int d) {
  if (d < 0) return 0;
  if (d == 0) return 1;
  // All weakly increasing rows of length d.
  std::vector<std::vector<int>> rows;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int lo) {
    if (static_cast<int>(cur.size()) == d) {
      rows.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      gen(v);
      cur.pop_back();
    }
  };
  gen(1);
  std::function<long(int, const std::vector<int>*)> stack = [&](int depth, const std::vector<int>* above) -> long {
    if (depth == k) return 1;
    long total = 0;
    for (const auto& row : rows) {
      bool ok = true;
      if (above) {
        for (int c = 0; c < d && ok; ++c) ok = row[c] > (*above)[c];
      }
      if (ok) total += stack(depth + 1, &row);
    }
    return total;
  };
  return stack(0, nullptr);
}

long count_hirzebruch_points(int k, long a, long b) {
  long total = 0;
  for (long y = 0; y <= a; ++y) {
    for (long x = 0; x <= b - k * y; ++x) ++total;
  }
  return total;
}

}  // namespace oracle
