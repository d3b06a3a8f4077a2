#pragma once

#include <string>

#include "json.hpp"

#include "biquad/field.hpp"
#include "biquad/poly.hpp"

namespace biquad {

using json = nlohmann::ordered_json;

// Field elements serialize as strings ("num/den" or residue) and, for
// quadratic extensions, as {"x": ..., "y": ...} objects.
json elem_to_json(const Field& F, const Elem& e);
Elem elem_from_json(const Field& F, const json& j);

json field_to_json(const Field& F);
Field field_from_json(const json& j);

// Compact descriptor used by the --field flag: "Q", "F<p>", "Fp:<p>",
// or "QuadExt:<scalar base>:<d>".
Field parse_field_desc(const std::string& desc);

json biquad_to_json(const BiquadPoly& P);
BiquadPoly biquad_from_json(const Field& F, const json& j);

json quartic_to_json(const QuarticPoly& P);
QuarticPoly quartic_from_json(const Field& F, const json& j);

// Exact rational from a JSON string or integer token.
mpq_class rational_from_json(const json& j);

}  // namespace biquad
