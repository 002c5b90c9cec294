#include "rsos/json_io.hpp"

#include <stdexcept>

namespace rsos {

nlohmann::json to_json(const QSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) arr.push_back({e.quarters, c.str()});
  if (s.is_exact()) return arr;
  return {{"terms", arr}, {"truncation", s.truncation()->quarters}};
}

QSeries qseries_from_json(const nlohmann::json& j) {
  const nlohmann::json* arr = &j;
  std::optional<QExponent> trunc;
  if (j.is_object()) {
    arr = &j.at("terms");
    trunc = QExponent(j.at("truncation").get<std::int64_t>());
  }
  if (!arr->is_array()) throw std::invalid_argument("series JSON must be an array of pairs");
  QSeries::Terms terms;
  std::optional<QExponent> prev;
  for (const auto& pair : *arr) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("series term must be [quarters, coefficient]");
    QExponent e(pair[0].get<std::int64_t>());
    if (prev && !(*prev < e)) throw std::invalid_argument("series terms must be strictly increasing");
    prev = e;
    BigInt c(pair[1].get<std::string>());
    if (c == 0) throw std::invalid_argument("series JSON holds a zero coefficient");
    terms.emplace(e, std::move(c));
  }
  return QSeries(std::move(terms), trunc);
}

}  // namespace rsos
