#include "overpart/series_io.hpp"

#include "overpart/errors.hpp"

namespace overpart {

nlohmann::json series_to_json(const QSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int e = s.min_exp(); e < s.order(); ++e) {
    const auto& c = s.coeff(e);
    if (c.is_zero()) continue;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [z, v] : c.terms()) terms.push_back({{"z", z}, {"c", v.get_str()}});
    coeffs.push_back({{"q", e}, {"terms", std::move(terms)}});
  }
  return {{"min_exp", s.min_exp()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

QSeries series_from_json(const nlohmann::json& j) {
  try {
    const int min_exp = j.at("min_exp").get<int>();
    const int order = j.at("order").get<int>();
    if (min_exp > order) throw ParseError("series JSON: min_exp exceeds order");
    std::vector<ZLaurentPoly> coeffs(static_cast<std::size_t>(order - min_exp));
    for (const auto& entry : j.at("coeffs")) {
      const int q = entry.at("q").get<int>();
      if (q < min_exp || q >= order) throw ParseError("series JSON: q exponent outside [min_exp, order)");
      std::vector<ZLaurentPoly::Term> terms;
      for (const auto& term : entry.at("terms")) {
        BigInt c;
        if (c.set_str(term.at("c").get<std::string>(), 10) != 0) {
          throw ParseError("series JSON: bad decimal coefficient");
        }
        terms.emplace_back(term.at("z").get<int>(), std::move(c));
      }
      coeffs[static_cast<std::size_t>(q - min_exp)] += ZLaurentPoly::from_terms(std::move(terms));
    }
    return QSeries(min_exp, order, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("series JSON: ") + e.what());
  }
}

}  // namespace overpart
