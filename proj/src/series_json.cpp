#include "pavi/series_json.hpp"

namespace pavi {

nlohmann::json to_json(const Polynomial& poly) {
  auto out = nlohmann::json::object();
  for (int i = 0; i <= poly.degree(); ++i) {
    const BigRational c = poly.coefficient(i);
    if (c != 0) out[std::to_string(i)] = rational_to_string(c);
  }
  return out;
}

namespace {

template <class Coeff, class F>
nlohmann::json terms(const LaurentSeries<Coeff>& s, F&& encode) {
  auto out = nlohmann::json::array();
  for (int e = s.valuation(); e < s.order(); ++e) {
    const Coeff c = s.coefficient(e);
    if (is_zero(c)) continue;
    out.push_back({{"power", e}, {"coefficient", encode(c)}});
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const PolySeries& series) {
  return terms(series, [](const Polynomial& c) { return to_json(c); });
}

nlohmann::json to_json(const RationalSeries& series) {
  return terms(series, [](const BigRational& c) { return nlohmann::json(rational_to_string(c)); });
}

}  // namespace pavi
