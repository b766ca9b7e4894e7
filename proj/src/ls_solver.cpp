#include "green/ls_solver.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "green/error.hpp"
#include "green/io.hpp"

namespace green {

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::plain: return "plain";
    case Normalization::prime: return "prime";
    case Normalization::double_prime: return "double_prime";
  }
  return "?";
}

std::optional<Normalization> parse_normalization(const std::string& s) {
  if (s == "plain" || s == "lusztig_plain") return Normalization::plain;
  if (s == "prime") return Normalization::prime;
  if (s == "double_prime") return Normalization::double_prime;
  return std::nullopt;
}

namespace {

using Index = std::vector<std::size_t>;

Matrix<LaurentPoly> scaled(Matrix<LaurentPoly> m, LaurentPoly::Exponent s_shift) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).shifted(s_shift);
  return m;
}

void put(Matrix<LaurentPoly>& target, const Index& rows, const Index& cols, const Matrix<LaurentPoly>& block) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) target(rows[i], cols[j]) = block(i, j);
}

std::string entry_name(const std::vector<std::string>& labels, std::size_t i, std::size_t j) {
  return "[" + labels[i] + ", " + labels[j] + "]";
}

// Shift in s-units applied to row `row` of P by the given normalization.
LaurentPoly::Exponent row_shift(const SolutionPair& pair, Normalization n, std::size_t row) {
  switch (n) {
    case Normalization::plain: return 0;
    case Normalization::prime: return pair.orbit_dims[row];
    case Normalization::double_prime: return 2 * pair.flag_dimension;
  }
  return 0;
}

}  // namespace

SolutionPair solve(const OmegaMatrix& omega, const BlockStructure& blocks) {
  if (auto bad = check_omega(omega); !bad.empty()) {
    std::string msg = "omega fails its invariants:";
    for (const auto& b : bad) msg += "\n  - " + b;
    throw InvalidOmega(msg);
  }
  const std::size_t n = omega.labels.size();
  const auto owner = blocks.block_of();
  if (owner.size() != n)
    throw InconsistentSupport("block structure covers " + std::to_string(owner.size()) +
                              " irreducibles but omega has " + std::to_string(n));

  SolutionPair out;
  out.P = Matrix<LaurentPoly>(n, n);
  out.Lambda = Matrix<LaurentPoly>(n, n);
  out.blocks = blocks;
  out.labels = omega.labels;
  out.flag_dimension = omega.flag_dimension;
  out.orbit_dims.resize(n);
  for (const auto& b : blocks.blocks)
    for (std::size_t m : b.members) out.orbit_dims[m] = b.orbit_dim;

  const auto& labels = omega.labels;
  const std::size_t nb = blocks.blocks.size();

  // Ω_IJ - Σ_{K<J} P_IK Λ_K P_JK^t
  auto residual = [&](std::size_t I, std::size_t J) {
    const Index& rows = blocks.blocks[I].members;
    const Index& cols = blocks.blocks[J].members;
    Matrix<LaurentPoly> r = omega.entries.select(rows, cols);
    for (std::size_t K = 0; K < J; ++K) {
      const Index& mid = blocks.blocks[K].members;
      const auto left = out.P.select(rows, mid);
      const auto right = out.P.select(cols, mid);
      if (is_zero_matrix(left) || is_zero_matrix(right)) continue;
      r = mat_sub(std::move(r), mat_mul(mat_mul(left, out.Lambda.select(mid, mid)), mat_transpose(right)));
    }
    return r;
  };

  for (std::size_t J = 0; J < nb; ++J) {
    const auto& block = blocks.blocks[J];
    const Index& cols = block.members;
    const auto dim = static_cast<LaurentPoly::Exponent>(block.orbit_dim);

    const auto lambda = scaled(residual(J, J), dim * 2);
    if (!is_symmetric(lambda))
      throw InconsistentSupport("Lambda block for orbit " + block.orbit + " is not symmetric");
    put(out.Lambda, cols, cols, lambda);
    for (std::size_t m : cols) out.P(m, m) = LaurentPoly::monomial(1, -dim);

    Matrix<RationalFunction> lambda_inv;
    try {
      lambda_inv = mat_inverse(to_rational(lambda));
    } catch (const Singular&) {
      throw SingularBlock("Lambda block for orbit " + block.orbit + " is singular over Q(t^1/2)");
    }

    for (std::size_t I = J + 1; I < nb; ++I) {
      const Index& rows = blocks.blocks[I].members;
      const auto r = residual(I, J);
      if (!blocks.below[J][I]) {
        for (std::size_t i = 0; i < rows.size(); ++i)
          for (std::size_t j = 0; j < cols.size(); ++j)
            if (!r(i, j).is_zero())
              throw InconsistentSupport("orbits " + block.orbit + " and " + blocks.blocks[I].orbit +
                                        " are incomparable but the residual at omega" +
                                        entry_name(labels, rows[i], cols[j]) + " is " + r(i, j).to_string() +
                                        ", not 0");
        continue;
      }
      const auto p = mat_mul(to_rational(r), lambda_inv);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
          const RationalFunction value = p(i, j) * RationalFunction(LaurentPoly::monomial(1, dim));
          if (!value.is_polynomial())
            throw NonPolynomialEntry("P" + entry_name(labels, rows[i], cols[j]) + " = " + value.to_string() +
                                     " is not a Laurent polynomial");
          out.P(rows[i], cols[j]) = value.numerator();
        }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const VerificationReport::Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    for (const auto& f : c.findings) out << "     " << f << '\n';
  }
  return out.str();
}

VerificationReport verify(const SolutionPair& input, const OmegaMatrix& omega) {
  VerificationReport report;
  const std::size_t n = input.labels.size();
  {
    VerificationReport::Check c{"index-sets", true, {}};
    auto fail = [&](std::string why) {
      c.passed = false;
      c.findings.push_back(std::move(why));
    };
    if (input.labels != omega.labels) fail("solution labels do not match omega labels");
    if (input.P.rows() != n || input.P.cols() != n) fail("P is not " + std::to_string(n) + "x" + std::to_string(n));
    if (input.Lambda.rows() != n || input.Lambda.cols() != n) fail("Lambda has the wrong shape");
    if (omega.entries.rows() != omega.labels.size() || omega.entries.cols() != omega.labels.size())
      fail("omega has the wrong shape");
    if (input.orbit_dims.size() != n) fail("orbit_dims has the wrong length");
    try {
      if (input.blocks.block_of().size() != n) fail("block structure does not cover the index set");
    } catch (const std::out_of_range&) {
      fail("block structure names an irreducible index outside the index set");
    }
    const auto nb = input.blocks.blocks.size();
    if (input.blocks.below.size() != nb ||
        std::any_of(input.blocks.below.begin(), input.blocks.below.end(), [nb](const auto& r) { return r.size() != nb; }))
      fail("closure relation does not match the block count");
    report.checks.push_back(c);
    if (!c.passed) return report;
  }

  const SolutionPair pair = normalize(input, Normalization::plain);
  const auto& labels = pair.labels;
  const auto owner = pair.blocks.block_of();
  const auto& below = pair.blocks.below;

  {
    VerificationReport::Check c{"residual", true, {}};
    auto r = mat_sub(mat_mul(mat_mul(pair.P, pair.Lambda), mat_transpose(pair.P)), omega.entries);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!r(i, j).is_zero()) {
          c.passed = false;
          c.findings.push_back("(P Lambda P^t - Omega)" + entry_name(labels, i, j) + " = " + r(i, j).to_string());
        }
    report.residual = std::move(r);
    report.checks.push_back(std::move(c));
  }
  {
    VerificationReport::Check c{"p-diagonal", true, {}};
    for (std::size_t i = 0; i < n; ++i) {
      const auto expected = LaurentPoly::monomial(1, -pair.orbit_dims[i]);
      if (!(pair.P(i, i) == expected)) {
        c.passed = false;
        c.findings.push_back("P" + entry_name(labels, i, i) + " = " + pair.P(i, i).to_string() + ", expected " +
                             expected.to_string());
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    VerificationReport::Check c{"p-support", true, {}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || pair.P(i, j).is_zero()) continue;
        const bool same_orbit = owner[i] == owner[j];
        if (same_orbit || !below[owner[j]][owner[i]]) {
          c.passed = false;
          c.findings.push_back("P" + entry_name(labels, i, j) + " = " + pair.P(i, j).to_string() +
                               (same_orbit ? " but both lie on the same orbit" : " but O_psi is not in the closure of O_chi"));
        }
      }
    report.checks.push_back(std::move(c));
  }
  {
    VerificationReport::Check c{"lambda-support", true, {}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (owner[i] != owner[j] && !pair.Lambda(i, j).is_zero()) {
          c.passed = false;
          c.findings.push_back("Lambda" + entry_name(labels, i, j) + " = " + pair.Lambda(i, j).to_string() +
                               " across different orbits");
        }
    report.checks.push_back(std::move(c));
  }
  {
    VerificationReport::Check c{"lambda-symmetric", true, {}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(pair.Lambda(i, j) == pair.Lambda(j, i))) {
          c.passed = false;
          c.findings.push_back("Lambda" + entry_name(labels, i, j) + " != Lambda" + entry_name(labels, j, i));
        }
    report.checks.push_back(std::move(c));
  }
  {
    VerificationReport::Check c{"p-positivity", true, {}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& p = pair.P(i, j);
        if (p.is_zero()) continue;
        if (!p.has_only_even_exponents() || p.max_exponent() > 0 || !p.has_integer_coefficients() ||
            !p.has_nonnegative_coefficients()) {
          c.passed = false;
          c.findings.push_back("P" + entry_name(labels, i, j) + " = " + p.to_string() +
                               " is not in Z[t^-1] with nonnegative coefficients");
        }
      }
    report.checks.push_back(std::move(c));
  }
  return report;
}

SolutionPair normalize(const SolutionPair& pair, Normalization target) {
  SolutionPair out = pair;
  for (std::size_t i = 0; i < out.P.rows(); ++i) {
    const auto shift = row_shift(pair, target, i) - row_shift(pair, pair.normalization, i);
    if (shift == 0) continue;
    for (std::size_t j = 0; j < out.P.cols(); ++j) out.P(i, j) = out.P(i, j).shifted(shift);
  }
  out.normalization = target;
  return out;
}

// ---------------------------------------------------------------------------

StalkTable stalk_report(const SolutionPair& input, const std::string& chi, const std::string& orbit) {
  const SolutionPair pair = normalize(input, Normalization::plain);
  const auto& blocks = pair.blocks.blocks;
  auto target = std::find_if(blocks.begin(), blocks.end(), [&](const auto& b) { return b.orbit == orbit; });
  if (target == blocks.end()) throw UnknownOrbit("no orbit labelled " + orbit + " in the solution's block structure");
  auto chi_it = std::find(pair.labels.begin(), pair.labels.end(), chi);
  if (chi_it == pair.labels.end()) throw std::out_of_range("no irreducible labelled " + chi);
  const auto row = static_cast<std::size_t>(chi_it - pair.labels.begin());

  StalkTable table{chi, orbit, {}};
  const auto owner = pair.blocks.block_of();
  const auto target_block = static_cast<std::size_t>(target - blocks.begin());
  if (!pair.blocks.below[target_block][owner[row]]) return table;
  for (std::size_t psi : target->members)
    for (const auto& [e, c] : pair.P(row, psi).terms())
      table.rows.push_back({static_cast<int>(e), pair.labels[psi], c});
  std::sort(table.rows.begin(), table.rows.end(),
            [](const auto& a, const auto& b) { return std::tie(a.degree, a.psi) < std::tie(b.degree, b.psi); });
  return table;
}

std::string to_text(const StalkTable& table) {
  std::ostringstream out;
  out << "IC_" << table.chi << " restricted to orbit " << table.orbit << '\n';
  if (table.rows.empty()) {
    out << "  (zero: orbit not in the support closure)\n";
    return out.str();
  }
  out << "  " << std::left << std::setw(8) << "degree" << std::setw(16) << "local system" << "multiplicity\n";
  for (const auto& r : table.rows)
    out << "  " << std::setw(8) << r.degree << std::setw(16) << ("L_" + r.psi) << r.multiplicity.get_str() << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json matrix_json(const Matrix<LaurentPoly>& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<LaurentPoly> matrix_from_json(const nlohmann::json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw ParseError(what + " must be " + std::to_string(n) + " rows");
  Matrix<LaurentPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw ParseError(what + " row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = laurent_from_json(j[i][k]);
  }
  return m;
}

}  // namespace

nlohmann::json to_json(const SolutionPair& pair, const std::string& omega_hash) {
  nlohmann::json j;
  j["schema"] = kSolutionSchema;
  j["normalization"] = to_string(pair.normalization);
  j["labels"] = pair.labels;
  j["orbit_dims"] = pair.orbit_dims;
  j["d"] = pair.flag_dimension;
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : pair.blocks.blocks) {
    std::vector<std::string> members;
    for (std::size_t m : b.members) members.push_back(pair.labels.at(m));
    j["blocks"].push_back({{"orbit", b.orbit}, {"orbit_dim", b.orbit_dim}, {"members", members}});
  }
  j["closure"] = pair.blocks.below;
  j["linear_extension"] = pair.blocks.linear_extension();
  j["P"] = matrix_json(pair.P);
  j["Lambda"] = matrix_json(pair.Lambda);
  j["omega_hash"] = omega_hash;
  return j;
}

SolutionPair solution_from_json(const nlohmann::json& j) {
  const std::string ctx = "solution";
  const auto& schema = require_field(j, "schema", ctx);
  if (!schema.is_string() || schema.get<std::string>() != kSolutionSchema)
    throw ParseError(ctx + ": unsupported schema " + schema.dump());
  SolutionPair pair;
  try {
    auto norm = parse_normalization(require_field(j, "normalization", ctx).get<std::string>());
    if (!norm) throw ParseError(ctx + ": unknown normalization");
    pair.normalization = *norm;
    pair.labels = require_field(j, "labels", ctx).get<std::vector<std::string>>();
    pair.orbit_dims = require_field(j, "orbit_dims", ctx).get<std::vector<int>>();
    pair.flag_dimension = require_field(j, "d", ctx).get<int>();
    for (const auto& b : require_field(j, "blocks", ctx)) {
      BlockStructure::Block block{b.at("orbit").get<std::string>(), b.at("orbit_dim").get<int>(), {}};
      for (const auto& label : b.at("members").get<std::vector<std::string>>()) {
        auto it = std::find(pair.labels.begin(), pair.labels.end(), label);
        if (it == pair.labels.end()) throw ParseError(ctx + ": block member " + label + " is not a label");
        block.members.push_back(static_cast<std::size_t>(it - pair.labels.begin()));
      }
      pair.blocks.blocks.push_back(std::move(block));
    }
    pair.blocks.below = require_field(j, "closure", ctx).get<std::vector<std::vector<bool>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ctx + ": " + e.what());
  }
  const std::size_t n = pair.labels.size();
  pair.P = matrix_from_json(require_field(j, "P", ctx), n, "P");
  pair.Lambda = matrix_from_json(require_field(j, "Lambda", ctx), n, "Lambda");
  return pair;
}

Matrix<LaurentPoly> permuted(const Matrix<LaurentPoly>& m, const std::vector<std::size_t>& perm) {
  return m.select(perm, perm);
}

}  // namespace green
