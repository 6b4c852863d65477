#pragma once

#include "bilindisc/bilinear.hpp"
#include "bilindisc/sparse3.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace bilindisc {

// On-disk system description. Rationals are always strings ("p/q" or "p").
//
//   {"kind": "bilinear", "n": 1, "m": 1,
//    "equations": [{"coeffs": [["1", "0"], ["0", "1"]]}, ...]}
//   coeffs[i][j] = a^(k)_{i,j}
//
//   {"kind": "three-player",
//    "a": {"a0": .., "a1": .., "a2": .., "a4": ..},
//    "b": {"b0": .., "b1": .., "b3": .., "b4": ..},
//    "c": {"c0": .., "c2": .., "c3": .., "c4": ..}}
using SystemFile = std::variant<BilinearSystem, ThreePlayerSystem>;

// Raise ParseError on malformed documents, shape mismatches or non-exact
// numbers.
SystemFile system_from_json(const nlohmann::json& doc);
SystemFile parse_system(std::string_view text);
SystemFile load_system(const std::string& path);

// Numeric systems only; symbolic coefficients raise WrongShapeError.
nlohmann::json system_to_json(const SystemFile& sys);
std::string serialize_system(const SystemFile& sys);

}  // namespace bilindisc
