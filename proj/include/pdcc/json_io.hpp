/* json_io.hpp
 *
 * Canonical JSON serialization of operator matrices. The emitted text is
 * byte-stable: fixed field order, terms in canonical descending order,
 * coefficients as int64 where they fit and decimal strings otherwise.
 */
#pragma once

#include <string>

#include "json.hpp"
#include "pdcc/opmatrix.hpp"

namespace pdcc {

// [num, den] with int64 entries where they fit, decimal strings otherwise.
nlohmann::ordered_json rational_to_json(const Q& c);
// Term list [[[num,den],[e1..en]], ...] in canonical descending order.
nlohmann::ordered_json poly_to_json(const Poly& p);
// {"m": m, "c": [poly...]}
nlohmann::ordered_json module_element_to_json(const ModuleElement& e);

nlohmann::ordered_json opmatrix_to_json(const OpMatrix& A);
OpMatrix opmatrix_from_json(const nlohmann::json& j);

// Canonical text form (compact dump + trailing newline).
std::string opmatrix_to_string(const OpMatrix& A);
OpMatrix opmatrix_from_string(const std::string& text);

void save_opmatrix(const std::string& path, const OpMatrix& A);
OpMatrix load_opmatrix(const std::string& path);

}  // namespace pdcc
