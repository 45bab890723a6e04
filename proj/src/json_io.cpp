#include "allsat/json_io.hpp"

#include <stdexcept>

namespace allsat {

nlohmann::json to_json(const Row& row) {
  return {{"symbols", row.tokens()}, {"count", row.cardinality().str()}};
}

Row row_from_json(const nlohmann::json& j) {
  std::string text;
  for (const auto& tok : j.at("symbols")) text += tok.get<std::string>() + ' ';
  Row row = Row::parse(text);
  if (j.contains("count") && j.at("count").get<std::string>() != row.cardinality().str())
    throw std::invalid_argument("row JSON: count does not match symbols");
  return row;
}

}  // namespace allsat
