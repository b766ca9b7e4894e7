#include <sstream>

#include "green/cli.hpp"

namespace green::cli {

namespace {

std::string exponent_text(LaurentPoly::Exponent e) {
  if (e % 2 == 0) return std::to_string(e / 2);
  return std::to_string(e) + "/2";
}

}  // namespace

// Half-integral powers only show up as fractions when present.
std::string latex_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto e = it->first;
    Rational c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const std::string coeff =
        c.get_den() == 1 ? c.get_str() : "\\tfrac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
    if (e == 0) {
      out += coeff;
      continue;
    }
    if (c != 1) out += coeff;
    out += e == 2 ? "t" : "t^{" + exponent_text(e) + "}";
  }
  return out;
}

std::string latex_matrix(const Matrix<LaurentPoly>& m, const std::vector<std::string>& labels,
                         const std::string& name) {
  std::ostringstream out;
  out << "% " << name << "\n\\begin{array}{c|" << std::string(m.cols(), 'c') << "}\n";
  out << name;
  for (const auto& l : labels) out << " & " << l;
  out << " \\\\\n\\hline\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << labels[i];
    for (std::size_t j = 0; j < m.cols(); ++j) out << " & " << latex_poly(m(i, j));
    out << " \\\\\n";
  }
  out << "\\end{array}\n";
  return out.str();
}

std::string csv_matrix(const Matrix<LaurentPoly>& m, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "row";
  for (const auto& l : labels) out << ",\"" << l << '"';
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << '"' << labels[i] << '"';
    for (std::size_t j = 0; j < m.cols(); ++j) out << ",\"" << m(i, j).to_string() << '"';
    out << '\n';
  }
  return out.str();
}

}  // namespace green::cli
