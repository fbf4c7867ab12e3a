#pragma once

#include <string>

#include <json.hpp>

#include "bidisk/bipoly.hpp"
#include "bidisk/config.hpp"
#include "bidisk/roots.hpp"

namespace bidisk {

using json = nlohmann::json;

// Polynomial format: {"bidegree":[n1,n2],"coeffs":[[[re,im],...],...]}.
// Numeric parsing accepts numbers or rational strings; exact parsing accepts
// integers or rational strings. Errors are InputError with a location.
// Errors are InputError with line and column.
json parse_json(const std::string& text);
BiPoly<cplx> parse_poly(const std::string& text);
BiPoly<GaussRat> parse_poly_exact(const std::string& text);
BiPoly<cplx> poly_from_json(const json& j);
BiPoly<GaussRat> poly_exact_from_json(const json& j);

json to_json(const BiPoly<cplx>& p);
json to_json(const BiPoly<GaussRat>& p);
json to_json(const UniPoly<cplx>& q);
json to_json(const Tolerances& t);
json to_json(cplx x);
json to_json(const std::vector<CircleRoot>& roots);

std::string read_file(const std::string& path);

}  // namespace bidisk
