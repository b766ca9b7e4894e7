#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "green/laurent.hpp"

namespace green {

inline constexpr const char* kWeylSchema = "green-weyl/1";

/// Integer-valued class function, one entry per conjugacy class.
using ClassFunction = std::vector<std::int64_t>;

struct ConjClass {
  std::string label;
  std::int64_t size = 0;
  /// det(1 - t*w) on the reflection representation; a polynomial in t of degree rank.
  LaurentPoly refl_charpoly;

  friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

struct IrrChar {
  std::string label;
  std::int64_t dim = 0;
  ClassFunction values;

  friend bool operator==(const IrrChar&, const IrrChar&) = default;
};

/*
  A Weyl group W presented by numbers alone: class sizes, character table,
  fundamental degrees and the characteristic polynomial of each class on
  the reflection representation. Nothing downstream needs group elements.
*/
struct WeylDatum {
  std::string name;
  std::int64_t order = 0;
  int rank = 0;
  std::vector<int> degrees;
  std::vector<ConjClass> classes;
  std::vector<IrrChar> irreducibles;
  std::size_t trivial_index = 0;
  std::size_t sign_index = 0;

  /// d = Σ (d_j - 1), the dimension of the flag variety.
  int flag_dimension() const;
  /// Index of the class whose characteristic polynomial is (1 - t)^rank.
  std::size_t identity_class() const;
  std::size_t irreducible_index(const std::string& label) const;  // throws std::out_of_range
  std::vector<std::string> irreducible_labels() const;

  friend bool operator==(const WeylDatum&, const WeylDatum&) = default;
};

/// Every violated WeylDatum invariant, worded to name the offending field.
std::vector<std::string> validate(const WeylDatum& datum);

/// S_n with Murnaghan-Nakayama characters; throws BoundExceeded when n > bound.
WeylDatum generate_symmetric_group(int n, int bound = 10);

/// Murnaghan-Nakayama value χ^shape(cycle_type).
std::int64_t symmetric_character(const std::vector<int>& shape, const std::vector<int>& cycle_type);

nlohmann::json to_json(const WeylDatum& datum);
/// Parses and validates; throws ParseError or ValidationError.
WeylDatum weyl_from_json(const nlohmann::json& j);
WeylDatum load_datum(const std::filesystem::path& path);
void save_datum(const WeylDatum& datum, const std::filesystem::path& path);

/// Pointwise χ_i·χ_j, times the sign character when twist_by_sign is set.
ClassFunction product_character(const WeylDatum& datum, std::size_t i, std::size_t j, bool twist_by_sign);

/// (1/|W|) Σ_C |C| f(C) g(C).
Rational inner_product(const WeylDatum& datum, const ClassFunction& f, const ClassFunction& g);

}  // namespace green
