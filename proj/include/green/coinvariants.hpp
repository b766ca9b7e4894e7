#pragma once

#include <string>
#include <vector>

#include "green/laurent.hpp"
#include "green/matrix.hpp"
#include "green/weyl_datum.hpp"

namespace green {

struct SpringerDatum;

/// Polynomial in t whose t^i coefficient is the multiplicity of a class
/// function in H^{2i} of the flag variety (the coinvariant algebra in
/// polynomial degree i).
class GradedMultiplicity {
 public:
  GradedMultiplicity() = default;
  explicit GradedMultiplicity(LaurentPoly poly) : poly_(std::move(poly)) {}

  const LaurentPoly& poly() const noexcept { return poly_; }
  /// Coefficient of t^degree.
  Rational coefficient(int degree) const { return poly_.coefficient(2 * degree); }
  /// Coefficients of t^0..t^max_degree.
  std::vector<Rational> coefficients(int max_degree) const;

  friend bool operator==(const GradedMultiplicity&, const GradedMultiplicity&) = default;

 private:
  LaurentPoly poly_;
};

/*
  Π_j (1 - t^{d_j}) · (1/|W|) Σ_C |C| f(C) / det(1 - t·w_C).

  The per-class fractions are accumulated with reduction after each step.
  With declared_character set, negative or fractional coefficients raise
  NegativeCoefficient, since they can only come from corrupt data.
*/
GradedMultiplicity graded_multiplicity(const WeylDatum& weyl, const ClassFunction& f,
                                       bool declared_character = true);

GradedMultiplicity fake_degree(const WeylDatum& weyl, std::size_t chi);

/// t^i coefficient = dim Hom^{2i}(IC_χ, IC_ψ) = multiplicity of χ·ψ in H^{2i}.
/// Odd cohomological degrees vanish and are not represented.
GradedMultiplicity ext_dimension_table(const WeylDatum& weyl, std::size_t chi, std::size_t psi);

/// fake_degree(χ·ε)(t) == t^d · fake_degree(χ)(t^{-1})
bool complementary_degree_check(const WeylDatum& weyl, std::size_t chi);

struct OmegaMatrix {
  Matrix<LaurentPoly> entries;
  std::vector<std::string> labels;  // Irr(W) order
  int flag_dimension = 0;           // d
  std::string group_name;

  friend bool operator==(const OmegaMatrix&, const OmegaMatrix&) = default;
};

/// ω_{χψ} = t^{-2d} · graded_multiplicity(χ·ψ·ε). Throws ValidationError
/// when the Springer datum's support map does not cover Irr(W) exactly.
OmegaMatrix build_omega(const WeylDatum& weyl, const SpringerDatum& springer);

/// Violations of the Ω invariants: symmetry and t^{2d}ω having nonnegative
/// integer coefficients in degrees [0, d].
std::vector<std::string> check_omega(const OmegaMatrix& omega);

nlohmann::json to_json(const OmegaMatrix& omega);
OmegaMatrix omega_from_json(const nlohmann::json& j);

/// CSV rows "label,c_0,...,c_d" after a "# ..." provenance line.
std::string fake_degrees_csv(const WeylDatum& weyl, const std::string& provenance);
std::string ext_tables_csv(const WeylDatum& weyl, const std::string& provenance);

}  // namespace green
