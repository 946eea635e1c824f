#pragma once

// JSON encodings of modules, shapes, tower specs and m values.
//
//   module: {"p": 2, "n": 2, "sigma": [[1, 1], [0, 1]]}
//   shape:  {"free_ranks": [y_0, ..., y_n], "exceptional": {"m": 1, "dim": 3}}
//   spec:   {"variant": "brauer_rowen", "p": 2, "n": 3, "t": 0 | "-inf"}
//           {"variant": "function_field", "p": 2, "n": 3,
//            "base": {"cyclotomic": 8} | {"finite_field": 13}}
//           {"variant": "local_cyclotomic", "p": 2, "n": 2, "q": 5}
//           {"variant": "local_kummer", "p": 3, "n": 1, "l": 7}
//           {"variant": "biquadratic", "a": 17, "d": -1}

#include <string>

#include <json.hpp>

#include "cyclo/galois_module.hpp"
#include "cyclo/m_invariant.hpp"

namespace cyclo {

/// Malformed input throws InvalidArgument naming the offending field.
GModule module_from_json(const nlohmann::json& j);
nlohmann::json module_to_json(const GModule& m);

Theorem1Shape shape_from_json(const nlohmann::json& j);
nlohmann::json shape_to_json(const Theorem1Shape& s);

TowerSpec tower_from_json(const nlohmann::json& j);
nlohmann::json tower_to_json(const TowerSpec& spec);

/// Finite values as numbers, the rest as their string form.
nlohmann::json mvalue_to_json(const MValue& m);

/// Reads and parses a file; throws InvalidArgument on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

}  // namespace cyclo
