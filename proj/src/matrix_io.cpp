#include "qnf/matrix_io.hpp"

#include <regex>

#include "json.hpp"

#include "qnf/errors.hpp"
#include "qnf/residue.hpp"

namespace qnf {

namespace {

using nlohmann::json;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_rational parse_coefficient(const json& v, const std::string& where) {
  if (!v.is_string()) throw FormatError(where + ": coefficients must be strings");
  static const std::regex shape(R"(^-?[0-9]+(/[0-9]+)?$)");
  const auto text = v.get<std::string>();
  if (!std::regex_match(text, shape)) throw FormatError(where + ": bad coefficient \"" + text + "\"");
  const auto slash = text.find('/');
  if (slash == std::string::npos) return cpp_rational(cpp_int(text));
  const cpp_int den(text.substr(slash + 1));
  if (den == 0) throw FormatError(where + ": zero denominator");
  return cpp_rational(cpp_int(text.substr(0, slash)), den);
}

}  // namespace

MatrixFile read_matrix_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("top level must be an object");
  if (!doc.contains("version") || doc["version"] != 1) throw FormatError("expected version 1");
  if (!doc.contains("p") || !doc["p"].is_number_unsigned()) throw FormatError("missing prime p");
  const auto p64 = doc["p"].get<std::uint64_t>();
  if (p64 > 1000) throw UnsupportedPrime("p = " + std::to_string(p64) + " is not supported");
  MatrixFile f;
  f.p = static_cast<unsigned>(p64);
  require_supported_prime(f.p);

  const auto& rows = doc.contains("entries") ? doc["entries"] : json();
  if (!rows.is_array() || rows.size() != f.p) throw FormatError("entries must be a p x p array");
  for (std::size_t i = 0; i < f.p; ++i) {
    if (!rows[i].is_array() || rows[i].size() != f.p) throw FormatError("entries must be a p x p array");
    for (std::size_t j = 0; j < f.p; ++j) {
      const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      const auto& e = rows[i][j];
      if (!e.is_object() || !e.contains("num") || !e.contains("chi")) throw FormatError(where + ": needs num and chi");
      if (!e["num"].is_array() || e["num"].size() != f.p - 1) {
        throw FormatError(where + ": num needs " + std::to_string(f.p - 1) + " coefficients");
      }
      if (!e["chi"].is_number_unsigned()) throw FormatError(where + ": chi must be a non-negative integer");
      RationalEntry r;
      r.chi_exp = e["chi"].get<std::size_t>();
      bool integral = true;
      for (const auto& c : e["num"]) {
        r.coeffs.push_back(parse_coefficient(c, where));
        integral = integral && boost::multiprecision::denominator(r.coeffs.back()) == 1;
      }
      if (!integral) {
        f.warnings.push_back(where + " has fractional coefficients");
      } else if (r.chi_exp > 0) {
        std::vector<BigInt> num;
        for (const auto& c : r.coeffs) num.emplace_back(boost::multiprecision::numerator(c));
        if (parity(CycloInt(f.p, std::move(num))).value() == 0) {
          f.warnings.push_back(where + " is not in canonical form; re-canonicalized");
        }
      }
      f.entries.push_back(std::move(r));
    }
  }
  return f;
}

UMatrix to_umatrix(const MatrixFile& f) { return ring_matrix_from_rationals(f.p, f.entries); }

std::string write_matrix_file(const UMatrix& m) {
  const unsigned p = m.prime();
  json rows = json::array();
  for (unsigned i = 0; i < p; ++i) {
    json row = json::array();
    for (unsigned j = 0; j < p; ++j) {
      const CycloFrac e = m.entry(i, j);
      json num = json::array();
      for (const auto& c : e.num().coeffs()) num.push_back(c.to_string());
      row.push_back({{"num", num}, {"chi", e.chi_exp()}});
    }
    rows.push_back(std::move(row));
  }
  json doc;
  doc["version"] = 1;
  doc["p"] = p;
  doc["entries"] = std::move(rows);
  return doc.dump(1) + "\n";
}

}  // namespace qnf
