#include <gtest/gtest.h>

#include "pavi/error.hpp"
#include "pavi/laurent_series.hpp"
#include "pavi/polynomial.hpp"
#include "pavi/series_json.hpp"

namespace pavi {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::LimitExceeded;
}

RationalSeries poly_series(std::vector<int> c, int order) {
  std::vector<BigRational> coeffs(c.begin(), c.end());
  return RationalSeries::from_coefficients(std::move(coeffs), order);
}

RationalSeries one(int order) { return RationalSeries::monomial(1, 0, order); }

TEST(Polynomial, Arithmetic) {
  const Polynomial p = Polynomial::p();
  const Polynomial a = p * p * p + 3 * p;
  EXPECT_EQ(a.to_string(), "p^3 + 3p");
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.evaluate(2), BigRational(14));
  EXPECT_EQ((p + 1) * (p - 1), p * p - 1);
  EXPECT_TRUE(a.is_counting());
  EXPECT_FALSE((p - 1).is_counting());
  EXPECT_FALSE(Polynomial(BigRational(1, 2)).is_counting());
  EXPECT_EQ(Polynomial(BigRational(-7, 5)).to_string(), "-7/5");
  EXPECT_EQ(rational_to_string(BigRational(6, 4)), "3/2");
}

TEST(LaurentSeries, OrderPropagation) {
  // x^-2 (1 + x + ...) known through x^3 times a series known through x^4.
  const auto a = RationalSeries(-2, {1, 1, 0, 0, 0, 0}, 4);
  const auto b = poly_series({1, 2, 3, 4, 5}, 5);
  const auto c = a * b;
  EXPECT_EQ(c.valuation(), -2);
  EXPECT_EQ(c.order(), 3);  // min(4 + 0, 5 - 2)
  EXPECT_EQ(c.coefficient(-2), BigRational(1));
  EXPECT_EQ(c.coefficient(-1), BigRational(3));
  EXPECT_EQ(code_of([&] { c.coefficient(3); }), ErrorCode::LimitExceeded);
  EXPECT_EQ((a + b).order(), 4);
  EXPECT_EQ(a.shifted(2).leading_exponent(), 0);
}

TEST(LaurentSeries, Inverse) {
  const auto a = poly_series({1, -1}, 20);  // 1 - x
  const auto inv = series_inverse(a);
  for (int e = 0; e < 20; ++e) EXPECT_EQ(inv.coefficient(e), BigRational(1));
  EXPECT_TRUE((a * inv).agrees_with(one(20)));

  const auto b = RationalSeries(-1, {2, 1}, 10);  // 2/x + 1
  const auto binv = series_inverse(b);
  EXPECT_EQ(binv.leading_exponent(), 1);
  EXPECT_EQ(binv.coefficient(1), BigRational(1, 2));
  EXPECT_TRUE((b * binv).agrees_with(one(std::min(b.order(), binv.order()))));

  EXPECT_EQ(code_of([] { series_inverse(RationalSeries(5)); }), ErrorCode::ZeroLeadingCoefficient);
}

TEST(LaurentSeries, ReciprocalSquareRoot) {
  // 1/sqrt(1 - 4x) has central binomial coefficients.
  const auto s = series_sqrt_recip(poly_series({1, -4}, 12));
  const std::vector<int> central = {1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620, 184756, 705432};
  for (int e = 0; e < 12; ++e) EXPECT_EQ(s.coefficient(e), BigRational(central[static_cast<std::size_t>(e)]));

  for (int k = 3; k <= 5; ++k) {
    const auto a = poly_series({1, 0, -2 * (k - 1), 0, (k - 3) * (k - 3)}, 65);
    const auto r = series_sqrt_recip(a);
    EXPECT_TRUE((r * r * a).agrees_with(one(65))) << "k=" << k;
  }
  EXPECT_EQ(code_of([] { series_sqrt_recip(poly_series({2, 1}, 5)); }), ErrorCode::BadConstantTerm);
  EXPECT_EQ(code_of([] { series_sqrt_recip(RationalSeries(-1, {1, 1}, 5)); }), ErrorCode::BadConstantTerm);
}

TEST(LaurentSeries, Exponential) {
  const auto e = series_exp(poly_series({0, 1}, 15));
  BigRational factorial = 1;
  for (int n = 0; n < 15; ++n) {
    if (n > 0) factorial *= n;
    EXPECT_EQ(e.coefficient(n), BigRational(1) / factorial);
  }
  const auto back = series_exp(poly_series({0, -1}, 15));
  EXPECT_TRUE((e * back).agrees_with(one(15)));
  EXPECT_EQ(code_of([] { series_exp(poly_series({1, 1}, 5)); }), ErrorCode::BadConstantTerm);
}

TEST(LaurentSeries, PolynomialCoefficients) {
  // exp(p x) = sum p^n x^n / n!
  PolySeries s = PolySeries::monomial(Polynomial::p(), 1, 8);
  const auto e = series_exp(s);
  EXPECT_EQ(e.coefficient(3), Polynomial::monomial(BigRational(1, 6), 3));
  EXPECT_EQ(evaluate_marker(e, 0).coefficient(3), BigRational(0));
}

TEST(SeriesJson, Shapes) {
  const Polynomial a = Polynomial::p() * Polynomial::p() + 2;
  EXPECT_EQ(to_json(a).dump(), R"({"0":"2","2":"1"})");
  const auto s = poly_series({1, 0, 3}, 3);
  EXPECT_EQ(to_json(s).dump(), R"([{"coefficient":"1","power":0},{"coefficient":"3","power":2}])");
  EXPECT_EQ(to_json(to_poly_series(poly_series({0, 5}, 2))).dump(),
            R"([{"coefficient":{"0":"5"},"power":1}])");
}

}  // namespace
}  // namespace pavi
