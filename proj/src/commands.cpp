#include "symrank/commands.hpp"

#include <iomanip>
#include <iostream>

#include "symrank/decomp.hpp"
#include "symrank/io.hpp"
#include "symrank/reference.hpp"
#include "symrank/reproduce.hpp"
#include "symrank/search.hpp"
#include "symrank/symcodes.hpp"

namespace symrank {

namespace {

std::string spec_text(const FieldSpec& s) { return "p=" + std::to_string(s.p) + " tower=" + to_json(s).at("tower").dump(); }

void print_certificate(const DecompositionCertificate& c, std::ostream& out) {
  const Field& F = c.field;
  out << "field: q=" << F.q() << " m=" << F.m() << ' ' << spec_text(F.spec()) << '\n';
  out << "xi: " << F.format(c.xi) << '\n';
  out << "R: " << c.R() << '\n';
  for (std::size_t j = 0; j < c.R(); ++j) {
    out << "term " << j + 1 << ": alpha=" << F.format(c.alphas[j]) << " c=" << F.format(c.scalars[j]) << '\n';
  }
  out << "coefficients (row i gives xi^i x):\n" << format_digits(c.coefficients);
}

json certificate_report(const DecompositionCertificate& c) {
  json j = to_json(c);
  j["verified"] = static_cast<bool>(verify_certificate(c));
  return j;
}

void emit_certificate(const GlobalOptions& g, const DecompositionCertificate& c, const std::optional<std::string>& output,
                      std::ostream& out) {
  if (output) write_json_file(*output, to_json(c));
  if (g.json) {
    out << certificate_report(c).dump(2) << '\n';
  } else {
    print_certificate(c, out);
    out << "verified: " << (verify_certificate(c) ? "yes" : "no") << '\n';
  }
}

DecompositionCertificate construct_default(const GlobalOptions& g, std::uint32_t q, std::uint32_t m,
                                           const std::optional<std::string>& poly_file) {
  std::optional<Field> field;
  if (poly_file) {
    field.emplace(field_spec_from_json(read_json_file(*poly_file)), g.cap);
  } else {
    if (m == 4) {
      for (const auto& row : table4())
        if (row.q == q) return m4_construct_from_table(q);
    }
    field.emplace(default_spec(q, m), g.cap);
  }
  const Field& F = *field;
  switch (F.m()) {
    case 1: return m1_construct(F);
    case 2: return m2_construct(F);
    case 3: return m3_construct(F);
    default: break;
  }
  // No closed form: search powers of a primitive element upwards from the known lower bound.
  const std::size_t top = F.m() * (F.m() + 1) / 2;
  for (std::size_t R = cmd_known(F.q(), F.m()).lo; R <= top; ++R) {
    SearchOptions o;
    o.R = R;
    o.strategy = Strategy::Powers;
    o.budget = std::uint64_t{1} << 24;
    o.workers = g.workers;
    auto res = search(F, o);
    if (res.certificate) return *res.certificate;
  }
  throw Error(ErrorKind::CapExceeded, "no decomposition found within the search budget");
}

Matrix slice_matrix(const DecompositionCertificate& c, std::size_t i, const OrderedBasis& B, const OrderedBasis& dual) {
  return to_gram(LinearizedPoly::monomial(c.field, c.field.pow(c.xi, static_cast<std::int64_t>(i)), 0), B, dual).matrix;
}

void print_matrix_block(const std::string& title, const Matrix& a, std::ostream& out) {
  out << title << '\n' << format_digits(a) << '\n';
}

}  // namespace

int cmd_construct(const GlobalOptions& g, std::uint32_t q, std::uint32_t m, const std::optional<std::string>& poly_file,
                  const std::optional<std::string>& output, std::ostream& out) {
  const auto cert = construct_default(g, q, m, poly_file);
  emit_certificate(g, cert, output, out);
  return verify_certificate(cert) ? kExitOk : kExitError;
}

int cmd_search(const GlobalOptions& g, const SearchArgs& a, std::ostream& out) {
  const Field F(a.poly_file ? field_spec_from_json(read_json_file(*a.poly_file)) : default_spec(a.q, a.m), g.cap);
  SearchOptions o;
  o.R = a.R;
  o.strategy = parse_strategy(a.strategy);
  o.budget = a.budget;
  o.seed = g.seed;
  o.workers = g.workers;
  o.hint = a.hint;
  const auto res = search(F, o);
  const int code = res.status == SearchStatus::Found       ? kExitOk
                   : res.status == SearchStatus::Exhausted ? kExitNo
                                                           : kExitBudget;
  if (g.json) {
    json j{{"q", F.q()}, {"m", F.m()}, {"R", a.R}, {"strategy", a.strategy}, {"status", to_string(res.status)},
           {"classes", res.candidates.size()}};
    if (res.certificate) j["certificate"] = certificate_report(*res.certificate);
    out << j.dump(2) << '\n';
    if (res.certificate && a.output) write_json_file(*a.output, to_json(*res.certificate));
    return code;
  }
  out << "search q=" << F.q() << " m=" << F.m() << " R=" << a.R << " strategy=" << a.strategy
      << " classes=" << res.candidates.size() << '\n';
  out << "status: " << to_string(res.status) << '\n';
  if (res.certificate) emit_certificate(g, *res.certificate, a.output, out);
  return code;
}

int cmd_verify(const GlobalOptions& g, const std::string& path, std::ostream& out) {
  const auto cert = certificate_from_json(read_json_file(path));
  const auto check = verify_certificate(cert);
  if (g.json) {
    json j{{"valid", check.valid}, {"R", cert.R()}};
    if (!check.valid) j["reason"] = check.reason;
    if (check.failing_generator) j["failing_generator"] = *check.failing_generator;
    out << j.dump(2) << '\n';
  } else if (check) {
    out << "valid: R=" << cert.R() << " q=" << cert.field.q() << " m=" << cert.field.m() << '\n';
  } else {
    out << "invalid: " << check.reason << '\n';
  }
  return check ? kExitOk : kExitError;
}

int cmd_ftable(const GlobalOptions& g, std::uint32_t m, std::uint32_t qmax, std::ostream& out) {
  if (m != 3) throw Error(ErrorKind::MalformedSpec, "the determinant polynomial is defined for m = 3 only");
  json rows = json::array();
  bool ok = true;
  if (!g.json) out << std::left << std::setw(5) << "q" << std::setw(16) << "leading term" << std::setw(16) << "reference" << "status\n";
  for (std::uint32_t q = 2; q <= qmax; ++q) {
    try {
      prime_power(q);
    } catch (const Error&) {
      continue;
    }
    const UniPoly f = reduce_mod_field_poly(m3_fT(q), q, 3);
    const auto d = f.degree();
    const std::uint32_t lc = f.leading();
    const std::string term = d < 0 ? "0" : (lc == 1 ? "" : std::to_string(lc)) + "T^" + std::to_string(d);
    std::string ref = "-", status = "-";
    for (const auto& r : table2()) {
      if (r.q != q) continue;
      ref = (r.coeff == 1 ? "" : std::to_string(r.coeff)) + "T^" + std::to_string(r.exponent);
      status = ref == term ? "PASS" : "FAIL";
      ok = ok && status == "PASS";
    }
    rows.push_back({{"q", q}, {"coeff", lc}, {"degree", d}, {"reference", ref}, {"status", status}});
    if (!g.json) out << std::setw(5) << q << std::setw(16) << term << std::setw(16) << ref << status << '\n';
  }
  if (g.json) out << json{{"m", m}, {"rows", rows}, {"ok", ok}}.dump(2) << '\n';
  return ok ? kExitOk : kExitMismatch;
}

int cmd_export(const GlobalOptions& g, const std::string& format, const std::optional<std::string>& cert_path,
               std::uint32_t q, std::uint32_t m, std::ostream& out) {
  if (format != "json" && format != "matrices") throw Error(ErrorKind::ParseError, "unknown export format \"" + format + "\"");
  const auto cert = cert_path ? certificate_from_json(read_json_file(*cert_path)) : construct_default(g, q, m, std::nullopt);
  const Field& F = cert.field;
  const OrderedBasis B = F.native_basis();
  const OrderedBasis dual = F.trace_dual_basis(B);
  const auto terms = cert.terms();
  if (format == "json" || g.json) {
    json j = certificate_report(cert);
    json slice = json::array(), ones = json::array();
    for (std::size_t i = 0; i < F.m(); ++i) slice.push_back(matrix_to_json(slice_matrix(cert, i, B, dual)));
    for (const auto& t : terms) ones.push_back(matrix_to_json(to_gram(t, B, dual).matrix));
    j["basis"] = json::array();
    for (auto b : B.elems()) j["basis"].push_back(F.format(b));
    j["slice"] = slice;
    j["rank_one"] = ones;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "# basis: native; columns are coordinates of f(b*_j)\n";
  for (std::size_t i = 0; i < F.m(); ++i) print_matrix_block("X" + std::to_string(i + 1), slice_matrix(cert, i, B, dual), out);
  for (std::size_t j = 0; j < terms.size(); ++j) print_matrix_block("A" + std::to_string(j + 1), to_gram(terms[j], B, dual).matrix, out);
  print_matrix_block("coefficients", cert.coefficients, out);
  return kExitOk;
}

int cmd_known(const GlobalOptions& g, std::uint32_t q, std::uint32_t m, std::ostream& out) {
  const auto k = cmd_known(q, m);
  if (g.json) {
    json j{{"q", q}, {"m", m}, {"lo", k.lo}, {"rules", k.rules}};
    j["hi"] = k.hi ? json(*k.hi) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "mu_" << q << "^sym(" << m << ") = " << format(k) << '\n';
    for (const auto& r : k.rules) out << "  " << r << '\n';
  }
  return kExitOk;
}

int cmd_reproduce(const GlobalOptions& g, const std::string& target, std::ostream& out) {
  const auto rep = reproduce(target);
  if (g.json) {
    json cells = json::array();
    for (const auto& c : rep.cells)
      cells.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    out << json{{"target", rep.target}, {"cells", cells}, {"notes", rep.notes}, {"ok", rep.ok()}}.dump(2) << '\n';
  } else {
    for (const auto& c : rep.cells) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (c.pass) {
        out << ": " << c.computed << '\n';
      } else {
        out << ": expected " << c.expected << ", computed " << c.computed << '\n';
      }
    }
    for (const auto& n : rep.notes) out << "note: " << n << '\n';
  }
  if (const auto* f = rep.first_failure()) {
    std::cerr << "mismatch in " << rep.target << " at " << f->name << ": expected " << f->expected << ", computed "
              << f->computed << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_code_build_sqmd(const GlobalOptions& g, std::uint32_t q, std::uint32_t m, std::size_t d,
                        const std::optional<std::string>& output, std::ostream& out) {
  const Field F(default_spec(q, m), g.cap);
  const auto code = build_sqmd(F, d);
  const json j = to_json(code);
  if (output) write_json_file(*output, j);
  if (g.json || !output) {
    out << j.dump(2) << '\n';
  } else {
    out << "code q=" << q << " m=" << m << " d=" << d << " k=" << code.dimension() << " written to " << *output << '\n';
  }
  return kExitOk;
}

int cmd_code_mindist(const GlobalOptions& g, const std::string& path, std::ostream& out) {
  const auto code = code_from_json(read_json_file(path));
  const auto d = min_distance(code, g.cap, g.workers);
  if (g.json) {
    out << json{{"k", code.dimension()}, {"d", d}}.dump(2) << '\n';
  } else {
    out << "d = " << d << '\n';
  }
  return kExitOk;
}

int cmd_code_mrd(const GlobalOptions& g, const std::string& path, std::ostream& out) {
  const auto code = code_from_json(read_json_file(path));
  const auto p = params(code, g.cap, g.workers);
  const auto bound = singleton_bound(p.m, p.d);
  const bool mrd = p.k == bound;
  if (g.json) {
    out << json{{"m", p.m}, {"k", p.k}, {"d", p.d}, {"bound", bound}, {"mrd", mrd}}.dump(2) << '\n';
  } else {
    out << "[" << p.m << ", " << p.k << ", " << p.d << "] bound " << bound << (mrd ? " MRD" : " not MRD") << '\n';
  }
  return mrd ? kExitOk : kExitNo;
}

int cmd_code_strk(const GlobalOptions& g, const std::string& path, std::size_t rmax, std::uint64_t budget,
                  std::ostream& out) {
  const auto code = code_from_json(read_json_file(path));
  const auto r = strk_exact(code, rmax, budget, g.workers);
  const int exit = r.status == StrkStatus::Exact ? kExitOk : r.status == StrkStatus::ExceedsRmax ? kExitNo : kExitBudget;
  if (g.json) {
    json w = json::array();
    for (const auto& a : r.witness) w.push_back(matrix_to_json(a));
    json j{{"status", to_string(r.status)}, {"lower", r.lower}, {"witness", w}};
    j["value"] = r.value ? json(*r.value) : json(nullptr);
    out << j.dump(2) << '\n';
    return exit;
  }
  out << "status: " << to_string(r.status) << '\n';
  if (r.value) out << "strk " << (r.status == StrkStatus::Exact ? "= " : "<= ") << *r.value << '\n';
  out << "every R < " << r.lower << " ruled out\n";
  for (std::size_t j = 0; j < r.witness.size(); ++j) print_matrix_block("W" + std::to_string(j + 1), r.witness[j], out);
  return exit;
}

}  // namespace symrank
