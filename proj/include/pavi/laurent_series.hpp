#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pavi/error.hpp"
#include "pavi/polynomial.hpp"

namespace pavi {

inline bool is_zero(const BigRational& c) { return c == 0; }
inline bool is_zero(const Polynomial& c) { return c.is_zero(); }

/// The rational value of a coefficient that must be a nonzero constant.
inline BigRational unit_value(const BigRational& c) { return c; }
inline BigRational unit_value(const Polynomial& c) {
  if (!c.is_constant()) {
    throw Error(ErrorCode::ZeroLeadingCoefficient, "leading coefficient " + c.to_string() + " is not a unit");
  }
  return c.coefficient(0);
}

/// Truncated Laurent series in x, known modulo x^order. Coefficients are
/// stored densely for exponents valuation()..order()-1; the declared
/// valuation may sit below the first nonzero term.
template <class Coeff>
class LaurentSeries {
 public:
  /// The zero series known through x^(order-1).
  explicit LaurentSeries(int order = 0) : valuation_(order), order_(order) {}

  LaurentSeries(int valuation, std::vector<Coeff> coeffs, int order)
      : valuation_(valuation), coeffs_(std::move(coeffs)), order_(order) {
    normalize();
  }

  static LaurentSeries monomial(Coeff c, int exponent, int order) {
    return LaurentSeries(exponent, std::vector<Coeff>{std::move(c)}, order);
  }

  /// a0 + a1 x + ... from a coefficient list.
  static LaurentSeries from_coefficients(std::vector<Coeff> coeffs, int order) {
    return LaurentSeries(0, std::move(coeffs), order);
  }

  int valuation() const noexcept { return valuation_; }
  int order() const noexcept { return order_; }

  /// Exponent of the first nonzero coefficient, if any.
  std::optional<int> leading_exponent() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!is_zero(coeffs_[i])) return valuation_ + static_cast<int>(i);
    }
    return std::nullopt;
  }

  /// Coefficient of x^e; exponents at or above order() are unknown.
  Coeff coefficient(int e) const {
    if (e >= order_) {
      throw Error(ErrorCode::LimitExceeded,
                  "x^" + std::to_string(e) + " beyond truncation order " + std::to_string(order_));
    }
    if (e < valuation_) return Coeff{};
    return coeffs_[static_cast<std::size_t>(e - valuation_)];
  }

  LaurentSeries truncated(int order) const {
    LaurentSeries out = *this;
    out.order_ = std::min(order_, order);
    out.normalize();
    return out;
  }

  /// Multiply by x^m.
  LaurentSeries shifted(int m) const {
    return LaurentSeries(valuation_ + m, coeffs_, order_ + m);
  }

  template <class F>
  auto map(F&& f) const -> LaurentSeries<decltype(f(std::declval<const Coeff&>()))> {
    using Out = decltype(f(std::declval<const Coeff&>()));
    std::vector<Out> mapped;
    mapped.reserve(coeffs_.size());
    for (const auto& c : coeffs_) mapped.push_back(f(c));
    return LaurentSeries<Out>(valuation_, std::move(mapped), order_);
  }

  LaurentSeries& operator*=(const BigRational& s) {
    for (auto& c : coeffs_) c = c * s;
    return *this;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    return combine(a, b, 1);
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return combine(a, b, -1);
  }
  friend LaurentSeries operator*(LaurentSeries a, const BigRational& s) { return a *= s; }

  /// Cauchy product. Valuations add; the result is known up to
  /// min(order(a) + val(b), order(b) + val(a)).
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int val = a.valuation_ + b.valuation_;
    const int order = std::min(a.order_ + b.valuation_, b.order_ + a.valuation_);
    const int len = std::max(0, order - val);
    std::vector<Coeff> c(static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < a.coeffs_.size() && static_cast<int>(i) < len; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<int>(i + j) < len; ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return LaurentSeries(val, std::move(c), order);
  }

  /// Exact equality of the known coefficients up to the smaller order.
  bool agrees_with(const LaurentSeries& o) const {
    const int top = std::min(order_, o.order_);
    const int low = std::min(valuation_, o.valuation_);
    for (int e = low; e < top; ++e) {
      if (!(coefficient(e) == o.coefficient(e))) return false;
    }
    return true;
  }

 private:
  static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, int sign) {
    const int val = std::min(a.valuation_, b.valuation_);
    const int order = std::min(a.order_, b.order_);
    std::vector<Coeff> c(static_cast<std::size_t>(std::max(0, order - val)));
    for (int e = val; e < order; ++e) {
      auto& slot = c[static_cast<std::size_t>(e - val)];
      slot = a.coefficient(e);
      if (sign > 0) {
        slot += b.coefficient(e);
      } else {
        slot -= b.coefficient(e);
      }
    }
    return LaurentSeries(val, std::move(c), order);
  }

  // Keeps valuation_ + coeffs_.size() == order_.
  void normalize() {
    if (valuation_ > order_) valuation_ = order_;
    coeffs_.resize(static_cast<std::size_t>(order_ - valuation_));
  }

  int valuation_;
  std::vector<Coeff> coeffs_;
  int order_;
};

using RationalSeries = LaurentSeries<BigRational>;
using PolySeries = LaurentSeries<Polynomial>;

/// Lift rational coefficients to constant polynomials.
inline PolySeries to_poly_series(const RationalSeries& s) {
  return s.map([](const BigRational& c) { return Polynomial(c); });
}

/// Substitute a value for the marker in every coefficient.
inline RationalSeries evaluate_marker(const PolySeries& s, const BigRational& at) {
  return s.map([&](const Polynomial& c) { return c.evaluate(at); });
}

/// Multiplicative inverse. The leading coefficient must be a nonzero unit;
/// otherwise Error(ZeroLeadingCoefficient).
template <class Coeff>
LaurentSeries<Coeff> series_inverse(const LaurentSeries<Coeff>& a) {
  const auto lead = a.leading_exponent();
  if (!lead) throw Error(ErrorCode::ZeroLeadingCoefficient, "series has no nonzero term");
  const int v = *lead;
  const int precision = a.order() - v;
  const BigRational inv0 = BigRational(1) / unit_value(a.coefficient(v));
  std::vector<Coeff> b(static_cast<std::size_t>(precision));
  if (precision > 0) b[0] = Coeff(inv0);
  for (int n = 1; n < precision; ++n) {
    Coeff acc{};
    for (int j = 1; j <= n; ++j) acc += a.coefficient(v + j) * b[static_cast<std::size_t>(n - j)];
    b[static_cast<std::size_t>(n)] = acc * BigRational(-inv0);
  }
  return LaurentSeries<Coeff>(-v, std::move(b), precision - v);
}

namespace detail {
template <class Coeff>
void require_power_series(const LaurentSeries<Coeff>& a, const char* what) {
  const auto lead = a.leading_exponent();
  if (lead && *lead < 0) {
    throw Error(ErrorCode::BadConstantTerm, std::string(what) + " of a series with negative powers");
  }
}
}  // namespace detail

/// s with s^2 * a = 1, for a with constant term 1. Coefficients come from
/// a s' = -a' s / 2, i.e. n s_n = -sum_{j>=1} a_j s_{n-j} (n - j/2).
template <class Coeff>
LaurentSeries<Coeff> series_sqrt_recip(const LaurentSeries<Coeff>& a) {
  detail::require_power_series(a, "reciprocal square root");
  if (a.order() <= 0 || !(a.coefficient(0) == Coeff(BigRational(1)))) {
    throw Error(ErrorCode::BadConstantTerm, "reciprocal square root needs constant term 1");
  }
  const int precision = a.order();
  std::vector<Coeff> s(static_cast<std::size_t>(precision));
  s[0] = Coeff(BigRational(1));
  for (int n = 1; n < precision; ++n) {
    Coeff acc{};
    for (int j = 1; j <= n; ++j) {
      const auto& aj = a.coefficient(j);
      if (is_zero(aj)) continue;
      acc += aj * s[static_cast<std::size_t>(n - j)] * BigRational(2 * n - j, 2);
    }
    s[static_cast<std::size_t>(n)] = acc * BigRational(-1, n);
  }
  return LaurentSeries<Coeff>::from_coefficients(std::move(s), precision);
}

/// exp(a) for a with zero constant term: n b_n = sum_{j=1}^n j a_j b_{n-j}.
template <class Coeff>
LaurentSeries<Coeff> series_exp(const LaurentSeries<Coeff>& a) {
  detail::require_power_series(a, "exponential");
  if (a.order() > 0 && !is_zero(a.coefficient(0))) {
    throw Error(ErrorCode::BadConstantTerm, "exponential needs constant term 0");
  }
  const int precision = std::max(0, a.order());
  std::vector<Coeff> b(static_cast<std::size_t>(precision));
  if (precision > 0) b[0] = Coeff(BigRational(1));
  for (int n = 1; n < precision; ++n) {
    Coeff acc{};
    for (int j = 1; j <= n; ++j) {
      const auto& aj = a.coefficient(j);
      if (is_zero(aj)) continue;
      acc += aj * b[static_cast<std::size_t>(n - j)] * BigRational(j);
    }
    b[static_cast<std::size_t>(n)] = acc * BigRational(1, n);
  }
  return LaurentSeries<Coeff>::from_coefficients(std::move(b), precision);
}

}  // namespace pavi
