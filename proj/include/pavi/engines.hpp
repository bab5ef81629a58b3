#pragma once

#include <vector>

#include "pavi/laurent_series.hpp"
#include "pavi/polynomial.hpp"

namespace pavi {

/// J_0..J_N, the fixed-point polynomials of all involutions:
/// J_n = p J_{n-1} + (n-1) J_{n-2}.
std::vector<Polynomial> j_table(int max_n);

/// Counts of F_k-avoiding involutions. `total[n]` is f_k(n, p) and
/// `by_first[n][t]` (1 <= t <= n, slot 0 unused) refines it by the first entry.
struct FTable {
  int k = 0;
  std::vector<Polynomial> total;
  std::vector<std::vector<Polynomial>> by_first;

  int max_n() const noexcept { return static_cast<int>(total.size()) - 1; }
};

/// Counts of A_k-avoiding involutions by length, first entry and fixed points.
/// `by_first[n][t]` is g_k(n; t) as a polynomial in p; `total[n]` sums it,
/// with total[0] = 1 for the empty involution. `reduced` is the F_{k-1} table
/// that seeds t = 1 and t = 2.
struct GTable {
  int k = 0;
  std::vector<Polynomial> total;
  std::vector<std::vector<Polynomial>> by_first;
  FTable reduced;

  int max_n() const noexcept { return static_cast<int>(total.size()) - 1; }
};

/// Throws Error(InvalidK) for k < 3.
FTable f_engine(int k, int max_n);

/// sum_{j<=k-2} J_j x^j + x^{k-1} ((k-1) J_{k-2} x + J_{k-1}) / (1 - (k-1) x^2),
/// known through x^max_n.
PolySeries f_closed_series(int k, int max_n);

/// First-entry recurrence for A_k, refined by fixed points.
GTable g_engine(int k, int max_n);

/// Coefficient list of sum_t g_k(n; t) v^{t-1}; entry i multiplies v^i.
std::vector<Polynomial> g_polynomial_in_v(const GTable& table, int n);

/// G_k(n; v, p) at a rational v, p kept symbolic. G_k(0; v, p) = 1.
Polynomial g_at_v(const GTable& table, int n, const BigRational& v);

/// Right-hand side of the recurrence expressing G_k(n; v, p) through
/// G_k(n-2; v, p), G_k(n-2; 1, p), G_k(n-4; 1, p) and f_{k-1}. Valid for
/// k <= n <= max_n and v not in {0, 1}; every (1 - v) denominator is evaluated.
Polynomial g_recurrence_rhs(const GTable& table, int n, const BigRational& v);

/// The closed-form generating function of A_k-avoiding involutions by length
/// (x) and fixed points (p), assembled over Laurent series with kernel
/// 1 / sqrt(1 - 2(k-1) x^2 + (k-3)^2 x^4). Known through x^max_n.
/// Throws Error(NegativePowerResidue) or Error(NonIntegralCoefficient) if the
/// assembled series is not a counting series.
PolySeries theorem1_series(int k, int max_n);

/// 1 - 2(k-1) x^2 + (k-3)^2 x^4, known through x^max_n.
RationalSeries theorem1_kernel(int k, int max_n);

namespace detail {
/// f_engine without the k >= 3 guard; the A_3 engine needs F_2.
FTable f_engine_unchecked(int k, int max_n);
}  // namespace detail

}  // namespace pavi
