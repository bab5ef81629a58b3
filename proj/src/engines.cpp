#include "pavi/engines.hpp"

#include <string>

#include "pavi/error.hpp"

namespace pavi {

namespace {

void require_k(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidK, "k must be at least 3, got " + std::to_string(k));
}

void require_n(int max_n) {
  if (max_n < 0) throw Error(ErrorCode::LimitExceeded, "negative order " + std::to_string(max_n));
}

BigRational rational_pow(const BigRational& base, int e) {
  BigRational out = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return e < 0 ? BigRational(1) / out : out;
}

// Sum_j polys[j] x^(j + shift), known modulo x^order.
PolySeries poly_terms(const std::vector<Polynomial>& polys, int shift, int order) {
  return PolySeries(shift, polys, order);
}

}  // namespace

std::vector<Polynomial> j_table(int max_n) {
  require_n(max_n);
  std::vector<Polynomial> j;
  j.reserve(static_cast<std::size_t>(max_n) + 1);
  j.emplace_back(1);
  if (max_n >= 1) j.push_back(Polynomial::p());
  for (int n = 2; n <= max_n; ++n) {
    j.push_back(Polynomial::p() * j[static_cast<std::size_t>(n - 1)] +
                BigRational(n - 1) * j[static_cast<std::size_t>(n - 2)]);
  }
  return j;
}

namespace detail {

FTable f_engine_unchecked(int k, int max_n) {
  require_n(max_n);
  const auto J = j_table(max_n);
  FTable out;
  out.k = k;
  out.total.resize(static_cast<std::size_t>(max_n) + 1);
  out.by_first.resize(static_cast<std::size_t>(max_n) + 1);
  out.total[0] = 1;
  out.by_first[0].resize(1);
  for (int n = 1; n <= max_n; ++n) {
    auto& row = out.by_first[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n) + 1);
    if (n < k) {
      // Nothing of length n avoids patterns longer than n.
      row[1] = Polynomial::p() * J[static_cast<std::size_t>(n - 1)];
      for (int t = 2; t <= n; ++t) row[static_cast<std::size_t>(t)] = J[static_cast<std::size_t>(n - 2)];
    } else {
      // An avoider has first entry t >= n+2-k, and removing the 2-cycle (1 t)
      // leaves an arbitrary avoider of length n-2.
      for (int t = n + 2 - k; t <= n; ++t) {
        row[static_cast<std::size_t>(t)] = out.total[static_cast<std::size_t>(n - 2)];
      }
    }
    Polynomial sum;
    for (int t = 1; t <= n; ++t) sum += row[static_cast<std::size_t>(t)];
    out.total[static_cast<std::size_t>(n)] = std::move(sum);
  }
  return out;
}

}  // namespace detail

FTable f_engine(int k, int max_n) {
  require_k(k);
  return detail::f_engine_unchecked(k, max_n);
}

PolySeries f_closed_series(int k, int max_n) {
  require_k(k);
  require_n(max_n);
  const int order = max_n + 1;
  const auto J = j_table(k - 1);

  const PolySeries head = poly_terms({J.begin(), J.begin() + (k - 1)}, 0, order);
  const PolySeries denom = to_poly_series(
      RationalSeries::from_coefficients({BigRational(1), BigRational(0), BigRational(1 - k)}, order));
  const PolySeries numer = poly_terms(
      {J[static_cast<std::size_t>(k - 1)], BigRational(k - 1) * J[static_cast<std::size_t>(k - 2)]}, k - 1,
      order);
  return (head + numer * series_inverse(denom)).truncated(order);
}

GTable g_engine(int k, int max_n) {
  require_k(k);
  require_n(max_n);
  const auto J = j_table(max_n);
  GTable out;
  out.k = k;
  out.reduced = detail::f_engine_unchecked(k - 1, max_n);
  const auto& f = out.reduced.total;
  out.total.resize(static_cast<std::size_t>(max_n) + 1);
  out.by_first.resize(static_cast<std::size_t>(max_n) + 1);
  out.total[0] = 1;
  out.by_first[0].resize(1);

  const auto at = [](const std::vector<Polynomial>& v, int i) -> const Polynomial& {
    return v[static_cast<std::size_t>(i)];
  };
  for (int n = 1; n <= max_n; ++n) {
    auto& row = out.by_first[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n) + 1);
    if (n < k) {
      row[1] = Polynomial::p() * at(J, n - 1);
      for (int t = 2; t <= n; ++t) row[static_cast<std::size_t>(t)] = at(J, n - 2);
    } else {
      const auto& prev = out.by_first[static_cast<std::size_t>(n - 2)];
      // t = 1 is a fixed point followed by an F_{k-1} avoider; t = 2 is the
      // 2-cycle (1 2) followed by one.
      row[1] = Polynomial::p() * at(f, n - 1);
      row[2] = at(f, n - 2);
      Polynomial below;  // sum_{j=1}^{t-2} g(n-2; j)
      for (int t = 3; t <= n; ++t) {
        below += prev[static_cast<std::size_t>(t - 2)];
        if (t >= n + 2 - k) {
          row[static_cast<std::size_t>(t)] = at(out.total, n - 2);
        } else {
          row[static_cast<std::size_t>(t)] =
              BigRational(k - 2) * prev[static_cast<std::size_t>(t - 1)] + below;
        }
      }
    }
    Polynomial sum;
    for (int t = 1; t <= n; ++t) sum += row[static_cast<std::size_t>(t)];
    out.total[static_cast<std::size_t>(n)] = std::move(sum);
  }
  return out;
}

std::vector<Polynomial> g_polynomial_in_v(const GTable& table, int n) {
  if (n < 0 || n > table.max_n()) {
    throw Error(ErrorCode::LimitExceeded, "n = " + std::to_string(n) + " outside the table");
  }
  const auto& row = table.by_first[static_cast<std::size_t>(n)];
  return {row.begin() + 1, row.end()};
}

Polynomial g_at_v(const GTable& table, int n, const BigRational& v) {
  if (n == 0) return 1;
  const auto coeffs = g_polynomial_in_v(table, n);
  Polynomial acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Polynomial g_recurrence_rhs(const GTable& table, int n, const BigRational& v) {
  const int k = table.k;
  if (n < k || n > table.max_n()) {
    throw Error(ErrorCode::LimitExceeded, "recurrence needs k <= n <= " + std::to_string(table.max_n()));
  }
  if (v == 0 || v == 1) throw Error(ErrorCode::InvalidK, "sample point v must avoid 0 and 1");
  const auto& f = table.reduced.total;
  const auto f_at = [&](int m) { return f[static_cast<std::size_t>(m)]; };
  // G_k(m; 1, p) is the total; at m = -1 (only reached for k = 3, where its
  // coefficient vanishes) it is taken as 0.
  const auto total = [&](int m) { return m < 0 ? Polynomial() : table.total[static_cast<std::size_t>(m)]; };

  const BigRational one_minus_v = BigRational(1) - v;
  const Polynomial p = Polynomial::p();
  Polynomial rhs = p * f_at(n - 1) + v * f_at(n - 2) - BigRational(k - 2) * v * (p * f_at(n - 3));
  rhs += (v * v / one_minus_v + BigRational(k - 2) * v) * g_at_v(table, n - 2, v);
  rhs -= rational_pow(v, n) / one_minus_v * total(n - 2);
  const BigRational tail =
      rational_pow(v, n - 1) / one_minus_v * (BigRational(k - 2) + (v - rational_pow(v, 3 - k)) / one_minus_v);
  rhs += tail * total(n - 4);
  return rhs;
}

RationalSeries theorem1_kernel(int k, int max_n) {
  const BigRational k1 = k - 1;
  const BigRational k3 = k - 3;
  return RationalSeries::from_coefficients({1, 0, -2 * k1, 0, k3 * k3}, max_n + 1);
}

PolySeries theorem1_series(int k, int max_n) {
  require_k(k);
  require_n(max_n);
  const int order = max_n + 1;
  // Two extra terms absorb the x^{k-4} = x^{-1} prefactor at k = 3.
  const int work = order + 2;
  const auto J = j_table(k - 2);
  const Polynomial p = Polynomial::p();
  const auto& j2 = J[static_cast<std::size_t>(k - 2)];
  const auto& j3 = J[static_cast<std::size_t>(k - 3)];

  const PolySeries u0 = to_poly_series(series_sqrt_recip(theorem1_kernel(k, work - 1)));

  const PolySeries head = poly_terms({J.begin(), J.begin() + (k - 2)}, 0, work);

  // p + (p(k-3) x^2 - 2x - p) u0
  const PolySeries a_inner = poly_terms({-p, Polynomial(-2), BigRational(k - 3) * p}, 0, work);
  const PolySeries a_term = poly_terms({p}, 0, work) + a_inner * u0;

  // x + p - ((k-3) x^3 - (k-1) p x^2 + x + p) u0
  const PolySeries b_inner = poly_terms({p, Polynomial(1), BigRational(1 - k) * p, Polynomial(k - 3)}, 0, work);
  const PolySeries b_term = poly_terms({p, Polynomial(1)}, 0, work) - b_inner * u0;

  const PolySeries second = (a_term * poly_terms({j2}, 0, work)).shifted(k - 3) * BigRational(-1, 2);
  const PolySeries third = (b_term * poly_terms({j3}, 0, work)).shifted(k - 4) * BigRational(-1, 2);

  const PolySeries sum = (head + second + third).truncated(order);
  for (int e = sum.valuation(); e < 0; ++e) {
    if (!sum.coefficient(e).is_zero()) {
      throw Error(ErrorCode::NegativePowerResidue,
                  "x^" + std::to_string(e) + " has coefficient " + sum.coefficient(e).to_string());
    }
  }
  std::vector<Polynomial> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order));
  for (int e = 0; e < order; ++e) {
    Polynomial c = sum.coefficient(e);
    if (!c.is_counting()) {
      throw Error(ErrorCode::NonIntegralCoefficient, "x^" + std::to_string(e) + ": " + c.to_string());
    }
    coeffs.push_back(std::move(c));
  }
  return PolySeries::from_coefficients(std::move(coeffs), order);
}

}  // namespace pavi
