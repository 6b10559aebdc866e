#include "pdcc/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace pdcc {

namespace {

nlohmann::ordered_json coeff_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return nlohmann::ordered_json(static_cast<std::int64_t>(z.get_si()));
  return nlohmann::ordered_json(z.get_str());
}

mpz_class coeff_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("coefficient must be integer or decimal string");
}

}  // namespace

nlohmann::ordered_json rational_to_json(const Q& c) {
  auto coeff = nlohmann::ordered_json::array();
  coeff.push_back(coeff_to_json(c.get_num()));
  coeff.push_back(coeff_to_json(c.get_den()));
  return coeff;
}

nlohmann::ordered_json poly_to_json(const Poly& p) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [ex, co] : p.terms) {
    auto exps = nlohmann::ordered_json::array();
    for (int i = 0; i < p.n; i++) exps.push_back(int(ex.e[i]));
    terms.push_back(nlohmann::ordered_json::array({rational_to_json(co), exps}));
  }
  return terms;
}

nlohmann::ordered_json module_element_to_json(const ModuleElement& e) {
  nlohmann::ordered_json j;
  j["m"] = e.m;
  auto c = nlohmann::ordered_json::array();
  for (const Poly& p : e.c) c.push_back(poly_to_json(p));
  j["c"] = c;
  return j;
}

nlohmann::ordered_json opmatrix_to_json(const OpMatrix& A) {
  nlohmann::ordered_json j;
  j["n"] = A.n;
  j["rows"] = A.rows;
  j["cols"] = A.cols;
  auto entries = nlohmann::ordered_json::array();
  for (int r = 0; r < A.rows; r++) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < A.cols; c++) row.push_back(poly_to_json(A.entry[r][c]));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

OpMatrix opmatrix_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  if (n < 0 || n > Exponent::kMaxVars) throw std::invalid_argument("bad variable count");
  OpMatrix A(n, rows, cols);
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows) throw std::invalid_argument("row count mismatch");
  for (int r = 0; r < rows; r++) {
    const auto& row = entries.at(r);
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("column count mismatch");
    for (int c = 0; c < cols; c++) {
      Poly p(n);
      for (const auto& term : row.at(c)) {
        const auto& coeff = term.at(0);
        mpz_class num = coeff_from_json(coeff.at(0));
        mpz_class den = coeff_from_json(coeff.at(1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        const auto& exps = term.at(1);
        if (static_cast<int>(exps.size()) != n) throw std::invalid_argument("exponent arity mismatch");
        Exponent ex(n);
        for (int i = 0; i < n; i++) ex.set(i, exps.at(i).get<int>());
        Q co(num, den);
        co.canonicalize();
        if (co == 0) continue;
        poly_add_scaled(p, co, ex, Poly::constant(n, 1));
      }
      A.entry[r][c] = std::move(p);
    }
  }
  return A;
}

std::string opmatrix_to_string(const OpMatrix& A) {
  return opmatrix_to_json(A).dump() + "\n";
}

OpMatrix opmatrix_from_string(const std::string& text) {
  return opmatrix_from_json(nlohmann::json::parse(text));
}

void save_opmatrix(const std::string& path, const OpMatrix& A) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << opmatrix_to_string(A);
}

OpMatrix load_opmatrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return opmatrix_from_string(text);
}

}  // namespace pdcc
