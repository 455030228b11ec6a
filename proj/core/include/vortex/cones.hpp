#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vortex/pipoly.hpp"

namespace vortex {

// Integer weight matrix Q (k rows, n columns). Column j is the weight Q_j.
class WeightSystem {
 public:
  // Checks that the columns span R^k.
  explicit WeightSystem(std::vector<std::vector<long>> rows);
  // Skips the spanning check; for property tests over arbitrary matrices.
  static WeightSystem unchecked(std::vector<std::vector<long>> rows);

  int k() const { return static_cast<int>(rows_.size()); }
  int n() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
  long q(int a, int j) const { return rows_[a][j]; }
  std::vector<long> column(int j) const;
  const std::vector<std::vector<long>>& rows() const { return rows_; }
  bool all_weights_one() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  struct Unchecked {};
  WeightSystem(std::vector<std::vector<long>> rows, Unchecked);
  std::vector<std::vector<long>> rows_;
};

// Subset of {0, ..., n-1} stored as a bit mask. Indices are 0-based in the
// library; reports print them 1-based.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  static IndexSet of(std::initializer_list<int> members);
  static IndexSet all(int n);

  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool contains(int j) const { return (bits_ >> j) & 1U; }
  bool is_subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  IndexSet with(int j) const { return IndexSet(bits_ | (1U << j)); }
  std::vector<int> members() const;
  // "{1,3}" (1-based)
  std::string to_string() const;

  friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  // Lexicographic on the sorted member lists.
  friend bool lex_less(IndexSet a, IndexSet b);

 private:
  std::uint32_t bits_ = 0;
};

using SigmaVector = std::vector<PiPoly>;

// Largest n accepted by operations that enumerate subsets.
inline constexpr int kMaxEnumeration = 24;
void require_enumerable(int n);

SigmaVector sigma_vector(const std::vector<Rational>& tau, const Rational& e2, const Rational& vol_m, int m,
                         const std::vector<Rational>& slope_vol);
// Same with 1/e^2 given directly, so that 0 selects the strong-coupling limit.
SigmaVector sigma_vector_inv(const std::vector<Rational>& tau, const Rational& inv_e2, const Rational& vol_m,
                             int m, const std::vector<Rational>& slope_vol);

bool in_cone_interior(const WeightSystem& ws, IndexSet i, const SigmaVector& v);
bool in_cone_closed(const WeightSystem& ws, IndexSet i, const SigmaVector& v);
bool is_simple(const WeightSystem& ws, IndexSet i_phi);
int subset_rank(const WeightSystem& ws, IndexSet i);
bool generates_lattice(const WeightSystem& ws, IndexSet i);
bool in_span(const WeightSystem& ws, IndexSet i, const SigmaVector& v);
bool check_c1(const WeightSystem& ws, const SigmaVector& sigma);
bool check_c2(const WeightSystem& ws);
bool hk_is_stable(const WeightSystem& ws, IndexSet i_phi, const SigmaVector& sigma);

struct SquareDecomposition {
  std::vector<PiPoly> coefficients;
  IndexSet i_plus;
  IndexSet i_zero;
};
// nullopt means Infeasible (some coefficient negative).
std::optional<SquareDecomposition> sigma_decomposition_square(const WeightSystem& ws, const SigmaVector& sigma);

IndexSet minimal_support(const WeightSystem& ws, const SigmaVector& tau);

// sigma(u) = tau*vol - 2m*u*pi*slope with u = 1/e^2. The interior condition
// holds exactly for pi*u < pi_u_star, i.e. u < pi_u_star / pi and
// e^2 > pi / pi_u_star.
struct StabilityThreshold {
  bool unbounded = false;
  Rational pi_u_star;
  // pi / pi_u_star; only meaningful when bounded and pi_u_star > 0.
  PiPoly e2_threshold() const;
};
StabilityThreshold stability_threshold(const WeightSystem& ws, const std::vector<Rational>& tau,
                                       const Rational& vol_m, int m, const std::vector<Rational>& slope_vol,
                                       IndexSet i);

}  // namespace vortex
