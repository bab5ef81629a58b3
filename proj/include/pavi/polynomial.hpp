#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pavi {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                                  boost::multiprecision::et_off>;

/// Univariate polynomial with exact rational coefficients. Used with the
/// fixed-point marker p, and with v when checking first-entry refinements.
/// Coefficient i multiplies p^i; trailing zeros are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(BigRational constant);  // NOLINT: scalars promote
  Polynomial(int constant) : Polynomial(BigRational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<BigRational> coefficients);

  static Polynomial monomial(BigRational coefficient, int power);
  /// The marker itself.
  static Polynomial p() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
  BigRational coefficient(int power) const;

  /// True when every coefficient is a nonnegative integer.
  bool is_counting() const;

  BigRational evaluate(const BigRational& at) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= BigRational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
  friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(Polynomial a, int s) { return a *= BigRational(s); }
  friend Polynomial operator*(int s, Polynomial a) { return a *= BigRational(s); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form such as "p^3 + 3p".
  std::string to_string(char var = 'p') const;

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

/// "3", "-2" or "7/5".
std::string rational_to_string(const BigRational& r);

}  // namespace pavi
