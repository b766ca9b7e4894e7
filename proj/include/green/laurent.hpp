#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace green {

using Rational = mpq_class;
using Integer = mpz_class;

/*
  Laurent polynomials in s = t^{1/2} over the rationals.

  Exponents are stored in s-units, so t^k is the monomial s^{2k} and an
  odd exponent stands for a half-integral power of t. The term map never
  holds a zero coefficient, which makes structural equality the same as
  equality of polynomials.
*/
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& constant);
  explicit LaurentPoly(Terms terms);

  /// c * s^e
  static LaurentPoly monomial(const Rational& c, Exponent s_exponent);
  /// t^k, i.e. s^{2k}
  static LaurentPoly t_power(Exponent t_exponent);
  /// Builds from coefficients of 1, t, t^2, ...
  static LaurentPoly from_t_coefficients(std::initializer_list<long> coeffs);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Both require a nonzero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  Rational coefficient(Exponent s_exponent) const;

  /// Multiplies by s^shift.
  LaurentPoly shifted(Exponent shift) const;
  LaurentPoly bar() const;
  /// Value at s = 1 (equivalently t = 1).
  Rational at_one() const;

  bool has_only_even_exponents() const;
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable form in t, e.g. "t - t^-1", "2t^1/2 + 1".
  std::string to_string() const;

 private:
  void add_term(Exponent e, const Rational& c);

  Terms terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly bar(const LaurentPoly& a);

/// Exact quotient a / b; throws NotDivisible when b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd of a and b viewed as ordinary polynomials in s after clearing
/// the s-adic valuation. gcd(0, 0) is 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/*
  Reduced fraction num/den of Laurent polynomials. Canonical form: den has
  lowest exponent 0 with coefficient 1 there, and num and den share no
  nonconstant polynomial factor. Every operation re-reduces.
*/
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long constant) : num_(constant), den_(1) {}  // NOLINT
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_ == LaurentPoly(1); }

  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void reduce();

  LaurentPoly num_;
  LaurentPoly den_;
};

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
/// Throws NotPolynomial unless the reduced denominator is 1.
LaurentPoly rf_to_poly(const RationalFunction& f);

// Serialization: [[exponent_in_s, "num", "den"], ...] sorted by exponent.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace green
