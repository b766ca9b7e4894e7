#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "green/coinvariants.hpp"
#include "green/laurent.hpp"
#include "green/matrix.hpp"
#include "green/springer_datum.hpp"

namespace green {

inline constexpr const char* kSolutionSchema = "green-solution/1";

/// Row scalings of P: plain is p, prime is t^{dim O_χ / 2} p, double_prime is t^d p.
enum class Normalization { plain, prime, double_prime };

std::string to_string(Normalization n);
std::optional<Normalization> parse_normalization(const std::string& s);

/// The matrices P and Λ with P Λ P^t = Ω, indexed by Irr(W) in datum order.
struct SolutionPair {
  Matrix<LaurentPoly> P;
  Matrix<LaurentPoly> Lambda;
  BlockStructure blocks;
  Normalization normalization = Normalization::plain;
  std::vector<std::string> labels;
  std::vector<int> orbit_dims;  // dim O_χ per irreducible
  int flag_dimension = 0;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

/*
  Block elimination over the linear extension in `blocks`, smallest orbits
  first. For block J:

    Λ_J  = t^{dim O_J} (Ω_JJ - Σ_{K<J} P_JK Λ_K P_JK^t)
    P_IJ = (Ω_IJ - Σ_{K<J} P_IK Λ_K P_JK^t) Λ_J^{-1} t^{dim O_J / 2}   if O_J ≤ O_I

  and the bracket must vanish exactly when O_J and O_I are incomparable.

  Throws InvalidOmega, SingularBlock, InconsistentSupport or
  NonPolynomialEntry; every message names the offending entry.
*/
SolutionPair solve(const OmegaMatrix& omega, const BlockStructure& blocks);

struct VerificationReport {
  struct Check {
    std::string name;
    bool passed = true;
    std::vector<std::string> findings;
  };
  std::vector<Check> checks;
  std::optional<Matrix<LaurentPoly>> residual;  // P Λ P^t - Ω in plain normalization

  bool passed() const;
  const Check* find(const std::string& name) const;
  std::string summary() const;
};

/// Recomputes P Λ P^t exactly and checks every SolutionPair invariant
/// separately. Never throws on bad data; problems become findings.
VerificationReport verify(const SolutionPair& pair, const OmegaMatrix& omega);

/// Rescales the rows of P from the pair's current normalization to target.
/// Λ is the same in all three conventions.
SolutionPair normalize(const SolutionPair& pair, Normalization target);

struct StalkTable {
  struct Row {
    int degree = 0;  // cohomological degree 2i
    std::string psi;
    Rational multiplicity;
  };
  std::string chi;
  std::string orbit;
  std::vector<Row> rows;
};

/// (H^{2i}(IC_χ|_O) : L_ψ(-i)) read off the plain p_{χ,ψ} for ψ on O.
/// Throws UnknownOrbit for a label outside the block structure.
StalkTable stalk_report(const SolutionPair& pair, const std::string& chi, const std::string& orbit);
std::string to_text(const StalkTable& table);

nlohmann::json to_json(const SolutionPair& pair, const std::string& omega_hash);
SolutionPair solution_from_json(const nlohmann::json& j);

/// Reorders rows and columns of a square matrix; perm[k] is the old index placed at k.
Matrix<LaurentPoly> permuted(const Matrix<LaurentPoly>& m, const std::vector<std::size_t>& perm);

}  // namespace green
