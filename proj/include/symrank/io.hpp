#pragma once

/**
 * @file io.hpp
 * @brief JSON interchange for field specs, certificates and codes.
 *
 * Elements are written in the field's text format ("[c1,c0]", nested for
 * towers); polynomials as "a0 + a1*x^q + ...".
 */

#include <json.hpp>

#include "symrank/multtensor.hpp"
#include "symrank/symcodes.hpp"

namespace symrank {

using json = nlohmann::ordered_json;

json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const json& j);

json to_json(const DecompositionCertificate& cert);
DecompositionCertificate certificate_from_json(const json& j);

json to_json(const SymCode& code);
SymCode code_from_json(const json& j);

json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace symrank
