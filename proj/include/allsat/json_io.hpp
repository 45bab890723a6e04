#ifndef ALLSAT_JSON_IO_HPP
#define ALLSAT_JSON_IO_HPP

#include <json.hpp>

#include "allsat/row.hpp"

namespace allsat {

/// {"symbols":["2","m1",...],"count":"84"}
nlohmann::json to_json(const Row& row);
/// Inverse of to_json; the count field, when present, must match.
Row row_from_json(const nlohmann::json& j);

}  // namespace allsat

#endif  // ALLSAT_JSON_IO_HPP
