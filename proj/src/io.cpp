#include "symrank/io.hpp"

#include <fstream>

namespace symrank {

namespace {

std::vector<std::string> elems_to_strings(const Field& F, const std::vector<Elem>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(F.format(x));
  return out;
}

std::vector<Elem> elems_from_json(const Field& F, const json& j) {
  std::vector<Elem> out;
  for (const auto& e : j) out.push_back(e.is_string() ? F.parse(e.get<std::string>()) : F.from_int(e.get<std::int64_t>()));
  return out;
}

Field field_from(const json& j) {
  if (!j.contains("field")) throw Error(ErrorKind::ParseError, "missing \"field\"");
  return Field(field_spec_from_json(j.at("field")));
}

}  // namespace

json to_json(const FieldSpec& spec) {
  json j{{"p", spec.p}, {"tower", spec.tower}};
  if (spec.base_level >= 0) j["base_level"] = spec.base_level;
  return j;
}

FieldSpec field_spec_from_json(const json& j) {
  try {
    FieldSpec s;
    s.p = j.at("p").get<std::uint32_t>();
    s.tower = j.at("tower").get<std::vector<std::vector<std::uint32_t>>>();
    s.base_level = j.value("base_level", -1);
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field spec: ") + e.what());
  }
}

json matrix_to_json(const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(a(i, k).v);
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw Error(ErrorKind::ParseError, "ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) a(i, k) = Elem{j.at(i).at(k).get<std::uint32_t>()};
  }
  return a;
}

json to_json(const DecompositionCertificate& cert) {
  const Field& F = cert.field;
  return json{{"type", "certificate"},
              {"q", F.q()},
              {"m", F.m()},
              {"R", cert.R()},
              {"field", to_json(F.spec())},
              {"xi", F.format(cert.xi)},
              {"alphas", elems_to_strings(F, cert.alphas)},
              {"scalars", elems_to_strings(F, cert.scalars)},
              {"coefficients", matrix_to_json(cert.coefficients)}};
}

DecompositionCertificate certificate_from_json(const json& j) {
  try {
    DecompositionCertificate c;
    c.field = field_from(j);
    c.xi = c.field.parse(j.at("xi").get<std::string>());
    c.alphas = elems_from_json(c.field, j.at("alphas"));
    c.scalars = j.contains("scalars") ? elems_from_json(c.field, j.at("scalars"))
                                      : std::vector<Elem>(c.alphas.size(), c.field.one());
    c.coefficients = matrix_from_json(j.at("coefficients"));
    if (c.coefficients.rows() == 0) c.coefficients = Matrix(c.field.m(), c.alphas.size());
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("certificate: ") + e.what());
  }
}

json to_json(const SymCode& code) {
  const Field& F = code.field();
  json gens = json::array();
  for (const auto& f : code.polys()) gens.push_back(format(f));
  return json{{"type", "code"},
              {"q", F.q()},
              {"m", F.m()},
              {"k", code.dimension()},
              {"field", to_json(F.spec())},
              {"basis", elems_to_strings(F, code.basis().elems())},
              {"generators", gens}};
}

SymCode code_from_json(const json& j) {
  try {
    const Field F = field_from(j);
    const OrderedBasis B = j.contains("basis") ? OrderedBasis(F, elems_from_json(F, j.at("basis"))) : F.native_basis();
    std::vector<LinearizedPoly> polys;
    for (const auto& g : j.at("generators")) polys.push_back(parse_linpoly(F, g.get<std::string>()));
    return SymCode::from_polys(F, B, std::move(polys));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("code: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace symrank
