#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hyperlattice/bruhat.hpp"
#include "hyperlattice/types.hpp"
#include "json.hpp"

// Serialization: kind-tagged JSON objects {"kind", "n", "entries"} with
// row-major nested arrays (outermost index i, then j, then k), and the plain
// .latin text format (one row of symbols per line).
namespace hyperlattice {

using ParsedObject = std::variant<Matrix, LatinSquare, Hypermatrix, CornerGrid3>;

nlohmann::json to_json(const Matrix& m);        // kind "matrix"
nlohmann::json to_json(const LatinSquare& l);   // kind "latin"
nlohmann::json to_json(const Hypermatrix& a);   // kind "hypermatrix"
nlohmann::json to_json(const CornerGrid3& c);   // kind "corner_sum", indices [0..n]

// Dispatches on the "kind" tag; throws std::invalid_argument on malformed
// input or failed validation.
ParsedObject from_json(const nlohmann::json& j);

std::string write_latin_text(const LatinSquare& l);
LatinSquare read_latin_text(const std::string& text);

// T-block witnesses as JSON lists of corner coordinates.
nlohmann::json to_json(const TBlock3D& t);
nlohmann::json to_json(const std::vector<TBlock3D>& blocks);
std::vector<TBlock3D> tblocks_from_json(const nlohmann::json& j);

}  // namespace hyperlattice
