#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "liecoh/ce_complex.hpp"

namespace liecoh {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(std::string_view text, std::string_view source = "<input>");
Json read_json_file(const std::string& path);

/// {"dim", "basis", "brackets": [{"x","y","value":{name: scalar}}], "real_structure": rows}
LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& g);

/// {"span": [[scalar, ...], ...]}
Subspace subspace_from_json(const Json& j, std::size_t ambient);
/// `span{e, h}`, `span{e+f, 2*h}`, `span{}`; coefficients may be parenthesised: `(1+i)*h`.
Subspace parse_span_expression(std::string_view text, const LieAlgebra& g);
/// `2*e-f` style linear combination of basis names.
Vector parse_element(std::string_view text, const LieAlgebra& g);

/// {"dim_M": m, "action": {name: rows}}; missing names act by zero.
Representation representation_from_json(const Json& j, AlgebraPtr g);
Json representation_to_json(const Representation& r);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, std::string_view where);
Json vector_to_json(std::span<const Scalar> v);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, std::string_view where);

/// Serialises with sorted keys and two-space indentation, newline-terminated.
std::string dump_json(const Json& j);

}  // namespace liecoh
