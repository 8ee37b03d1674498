#pragma once

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>

#include "szf/rational_series.hpp"
#include "szf/staircase.hpp"
#include "szf/zeta.hpp"

namespace szf {

/// Document violates a schema; what() carries a JSON-pointer-style path.
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what) {}
};

/// {"numerator": [decimal strings, index = power of t],
///  "denominator": [positive integers, one per factor (1+dt)]}
nlohmann::json zeta_to_json(const RationalSeries& f);
RationalSeries zeta_from_json(const nlohmann::json& doc);

/// {"vars": 2, "generators": [[a, b], ...]}
nlohmann::json monomial_to_json(const MonomialIdeal2D& ideal);
MonomialIdeal2D monomial_from_json(const nlohmann::json& doc);

/// {"ambient_dim": n, "coefficients": [decimal strings]}
nlohmann::json segre_to_json(const SegreClassData& data);
SegreClassData segre_from_json(const nlohmann::json& doc);

}  // namespace szf
