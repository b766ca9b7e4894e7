#include "green/laurent.hpp"

#include <ostream>
#include <sstream>
#include <vector>

#include "green/error.hpp"

namespace green {

namespace {

// Dense polynomials in s, lowest degree first, no trailing zeros.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& p) {
  Dense out;
  if (p.is_zero()) return out;
  const auto base = p.min_exponent();
  out.resize(static_cast<std::size_t>(p.max_exponent() - base + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - base)] = c;
  return out;
}

LaurentPoly from_dense(const Dense& p, LaurentPoly::Exponent shift) {
  LaurentPoly::Terms terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) terms.emplace(static_cast<LaurentPoly::Exponent>(i) + shift, p[i]);
  return LaurentPoly(std::move(terms));
}

// Long division; returns the quotient and leaves the remainder in `num`.
Dense divide_dense(Dense& num, const Dense& den) {
  if (num.size() < den.size()) return {};
  Dense q(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = num[k + den.size() - 1] / lead;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  trim(num);
  trim(q);
  return q;
}

Dense monic(Dense p) {
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Dense gcd_dense(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    divide_dense(a, b);
    std::swap(a, b);
  }
  return monic(std::move(a));
}

std::string t_power_text(LaurentPoly::Exponent e) {
  if (e % 2 == 0) {
    const auto k = e / 2;
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
  }
  return "t^" + std::to_string(e) + "/2";
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Rational(constant));
}

// mpq_class(n, d) is not reduced on construction; every coefficient that
// enters from outside goes through here so equality stays structural.
static Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, canonical(constant));
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (auto& kv : terms_) kv.second.canonicalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent s_exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(s_exponent, canonical(c));
  return p;
}

LaurentPoly LaurentPoly::t_power(Exponent t_exponent) { return monomial(1, 2 * t_exponent); }

LaurentPoly LaurentPoly::from_t_coefficients(std::initializer_list<long> coeffs) {
  Terms terms;
  Exponent e = 0;
  for (long c : coeffs) {
    if (c != 0) terms.emplace(e, Rational(c));
    e += 2;
  }
  return LaurentPoly(std::move(terms));
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coefficient(Exponent s_exponent) const {
  auto it = terms_.find(s_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

Rational LaurentPoly::at_one() const {
  Rational sum = 0;
  for (const auto& kv : terms_) sum += kv.second;
  return sum;
}

bool LaurentPoly::has_only_even_exponents() const {
  for (const auto& kv : terms_)
    if (kv.first % 2 != 0) return false;
  return true;
}

bool LaurentPoly::has_integer_coefficients() const {
  for (const auto& kv : terms_)
    if (kv.second.get_den() != 1) return false;
  return true;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  for (const auto& kv : terms_)
    if (kv.second < 0) return false;
  return true;
}

void LaurentPoly::add_term(Exponent e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, canonical(c));
  if (inserted) return;
  it->second += canonical(c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  const Rational k = canonical(c);
  for (auto& kv : terms_) kv.second *= k;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto e = it->first;
    Rational c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_den() == 1 ? c.get_str() : "(" + c.get_str() + ")";
    out += t_power_text(e);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (a.is_zero()) return {};
  Dense num = to_dense(a);
  const Dense den = to_dense(b);
  Dense q = divide_dense(num, den);
  if (!num.empty() || q.empty())
    throw NotDivisible("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  return from_dense(q, a.min_exponent() - b.min_exponent());
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  return from_dense(gcd_dense(to_dense(a), to_dense(b)), 0);
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  reduce();
}

void RationalFunction::reduce() {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const auto shift = -den_.min_exponent();
  den_ = den_.shifted(shift);
  num_ = num_.shifted(shift);
  if (den_.term_count() > 1) {
    const auto valuation = num_.min_exponent();
    const Dense g = gcd_dense(to_dense(num_), to_dense(den_));
    if (g.size() > 1) {
      Dense n = to_dense(num_);
      Dense d = to_dense(den_);
      num_ = from_dense(divide_dense(n, g), valuation);
      den_ = from_dense(divide_dense(d, g), 0);
    }
  }
  const Rational lead = den_.coefficient(0);
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw ZeroDenominator("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }

LaurentPoly rf_to_poly(const RationalFunction& f) {
  if (!f.is_polynomial()) throw NotPolynomial(f.to_string() + " is not a Laurent polynomial");
  return f.numerator();
}

// ---------------------------------------------------------------------------
// Serialization

nlohmann::json to_json(const LaurentPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({e, c.get_num().get_str(), c.get_den().get_str()});
  return out;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of [exp, num, den] triples");
  LaurentPoly::Terms terms;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() || !term[1].is_string() ||
        !term[2].is_string())
      throw ParseError("malformed polynomial term " + term.dump());
    Integer num, den;
    if (num.set_str(term[1].get<std::string>(), 10) != 0 || den.set_str(term[2].get<std::string>(), 10) != 0)
      throw ParseError("non-integer coefficient in term " + term.dump());
    if (den == 0) throw ParseError("zero denominator in term " + term.dump());
    Rational c(num, den);
    c.canonicalize();
    const auto e = term[0].get<LaurentPoly::Exponent>();
    if (c == 0) throw ParseError("zero coefficient stored in term " + term.dump());
    if (!terms.emplace(e, c).second) throw ParseError("duplicate exponent " + std::to_string(e));
  }
  return LaurentPoly(std::move(terms));
}

}  // namespace green
