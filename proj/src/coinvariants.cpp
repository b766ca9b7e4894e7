#include "green/coinvariants.hpp"

#include <sstream>

#include "green/error.hpp"
#include "green/io.hpp"
#include "green/springer_datum.hpp"

namespace green {

std::vector<Rational> GradedMultiplicity::coefficients(int max_degree) const {
  std::vector<Rational> out;
  for (int i = 0; i <= max_degree; ++i) out.push_back(coefficient(i));
  return out;
}

GradedMultiplicity graded_multiplicity(const WeylDatum& weyl, const ClassFunction& f, bool declared_character) {
  if (f.size() != weyl.classes.size())
    throw std::invalid_argument("graded_multiplicity: class function has " + std::to_string(f.size()) +
                                " entries, datum has " + std::to_string(weyl.classes.size()) + " classes");
  RationalFunction sum;
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c] == 0) continue;
    const Rational weight = Rational(Integer(weyl.classes[c].size) * Integer(f[c]));
    sum += RationalFunction(LaurentPoly(weight), weyl.classes[c].refl_charpoly);
  }
  LaurentPoly invariants(1);
  for (int deg : weyl.degrees) invariants *= LaurentPoly(1) - LaurentPoly::t_power(deg);
  sum *= RationalFunction(invariants * Rational(1, weyl.order));

  LaurentPoly poly;
  try {
    poly = rf_to_poly(sum);
  } catch (const NotPolynomial&) {
    throw NotPolynomial("Molien sum for " + weyl.name + " is not a polynomial: " + sum.to_string() +
                        " (corrupt datum?)");
  }
  const int d = weyl.flag_dimension();
  if (!poly.is_zero() &&
      (!poly.has_only_even_exponents() || poly.min_exponent() < 0 || poly.max_exponent() > 2 * d))
    throw NotPolynomial("Molien sum " + poly.to_string() + " is not a polynomial in t of degree <= " +
                        std::to_string(d));
  if (declared_character && (!poly.has_integer_coefficients() || !poly.has_nonnegative_coefficients()))
    throw NegativeCoefficient("graded multiplicity " + poly.to_string() + " of a declared character in " +
                              weyl.name + " has a negative or fractional coefficient");
  return GradedMultiplicity(std::move(poly));
}

GradedMultiplicity fake_degree(const WeylDatum& weyl, std::size_t chi) {
  return graded_multiplicity(weyl, weyl.irreducibles.at(chi).values);
}

GradedMultiplicity ext_dimension_table(const WeylDatum& weyl, std::size_t chi, std::size_t psi) {
  return graded_multiplicity(weyl, product_character(weyl, chi, psi, false));
}

bool complementary_degree_check(const WeylDatum& weyl, std::size_t chi) {
  const auto twisted = graded_multiplicity(weyl, product_character(weyl, chi, weyl.trivial_index, true));
  const auto plain = fake_degree(weyl, chi);
  return twisted.poly() == plain.poly().bar().shifted(2 * weyl.flag_dimension());
}

OmegaMatrix build_omega(const WeylDatum& weyl, const SpringerDatum& springer) {
  if (auto bad = validate(springer, &weyl, weyl.flag_dimension()); !bad.empty())
    throw ValidationError(std::move(bad));
  const std::size_t n = weyl.irreducibles.size();
  const int d = weyl.flag_dimension();
  OmegaMatrix omega{Matrix<LaurentPoly>(n, n), weyl.irreducible_labels(), d, weyl.name};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto m = graded_multiplicity(weyl, product_character(weyl, i, j, true));
      omega.entries(i, j) = m.poly().shifted(-4 * d);
      omega.entries(j, i) = omega.entries(i, j);
    }
  return omega;
}

std::vector<std::string> check_omega(const OmegaMatrix& omega) {
  std::vector<std::string> bad;
  const auto& m = omega.entries;
  const int d = omega.flag_dimension;
  if (!m.is_square() || m.rows() != omega.labels.size()) {
    bad.push_back("omega matrix shape does not match its " + std::to_string(omega.labels.size()) + " labels");
    return bad;
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string where = "omega[" + omega.labels[i] + ", " + omega.labels[j] + "]";
      if (j > i && !(m(i, j) == m(j, i))) bad.push_back(where + " != its transpose entry (not symmetric)");
      const LaurentPoly scaled = m(i, j).shifted(4 * d);
      if (scaled.is_zero()) continue;
      if (!scaled.has_only_even_exponents() || !scaled.has_integer_coefficients() ||
          !scaled.has_nonnegative_coefficients() || scaled.min_exponent() < 0 || scaled.max_exponent() > 2 * d)
        bad.push_back(where + " = " + m(i, j).to_string() +
                      ": t^{2d} times it is not a nonnegative integer polynomial of degree <= d");
    }
  return bad;
}

nlohmann::json to_json(const OmegaMatrix& omega) {
  nlohmann::json j;
  j["schema"] = "green-omega/1";
  j["group"] = omega.group_name;
  j["labels"] = omega.labels;
  j["d"] = omega.flag_dimension;
  j["entries"] = nlohmann::json::array();
  for (std::size_t i = 0; i < omega.entries.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t k = 0; k < omega.entries.cols(); ++k) row.push_back(to_json(omega.entries(i, k)));
    j["entries"].push_back(std::move(row));
  }
  return j;
}

OmegaMatrix omega_from_json(const nlohmann::json& j) {
  const std::string ctx = "omega matrix";
  const auto& schema = require_field(j, "schema", ctx);
  if (!schema.is_string() || schema.get<std::string>() != "green-omega/1")
    throw ParseError(ctx + ": unsupported schema " + schema.dump());
  OmegaMatrix omega;
  try {
    omega.group_name = require_field(j, "group", ctx).get<std::string>();
    omega.labels = require_field(j, "labels", ctx).get<std::vector<std::string>>();
    omega.flag_dimension = require_field(j, "d", ctx).get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ctx + ": " + e.what());
  }
  const auto& rows = require_field(j, "entries", ctx);
  const std::size_t n = omega.labels.size();
  if (!rows.is_array() || rows.size() != n) throw ParseError(ctx + ": entries must be a square array");
  omega.entries = Matrix<LaurentPoly>(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError(ctx + ": entries must be a square array");
    for (std::size_t k = 0; k < n; ++k) omega.entries(i, k) = laurent_from_json(rows[i][k]);
  }
  return omega;
}

namespace {

std::string csv_header(const std::string& schema, const std::string& provenance, const std::string& keys, int d) {
  std::ostringstream out;
  out << "# schema=" << schema;
  if (!provenance.empty()) out << ' ' << provenance;
  out << '\n' << keys;
  for (int i = 0; i <= d; ++i) out << ",t^" << i;
  out << '\n';
  return out.str();
}

void csv_row(std::ostringstream& out, const GradedMultiplicity& m, int d) {
  for (const auto& c : m.coefficients(d)) out << ',' << c.get_str();
  out << '\n';
}

// Labels like "(2,1)" contain commas.
std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string fake_degrees_csv(const WeylDatum& weyl, const std::string& provenance) {
  const int d = weyl.flag_dimension();
  std::ostringstream out;
  out << csv_header("green-fake-degrees/1", provenance, "chi", d);
  for (std::size_t i = 0; i < weyl.irreducibles.size(); ++i) {
    out << quoted(weyl.irreducibles[i].label);
    csv_row(out, fake_degree(weyl, i), d);
  }
  return out.str();
}

std::string ext_tables_csv(const WeylDatum& weyl, const std::string& provenance) {
  const int d = weyl.flag_dimension();
  std::ostringstream out;
  out << csv_header("green-ext/1", provenance, "chi,psi", d);
  for (std::size_t i = 0; i < weyl.irreducibles.size(); ++i)
    for (std::size_t j = 0; j < weyl.irreducibles.size(); ++j) {
      out << quoted(weyl.irreducibles[i].label) << ',' << quoted(weyl.irreducibles[j].label);
      csv_row(out, ext_dimension_table(weyl, i, j), d);
    }
  return out.str();
}

}  // namespace green
