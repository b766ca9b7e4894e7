#include "green/weyl_datum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "green/error.hpp"
#include "green/io.hpp"
#include "green/partition.hpp"

namespace green {

int WeylDatum::flag_dimension() const {
  int d = 0;
  for (int deg : degrees) d += deg - 1;
  return d;
}

std::size_t WeylDatum::identity_class() const {
  LaurentPoly expected(1);
  for (int i = 0; i < rank; ++i) expected *= LaurentPoly::from_t_coefficients({1, -1});
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].refl_charpoly == expected) return c;
  throw std::out_of_range("datum " + name + " has no identity class");
}

std::size_t WeylDatum::irreducible_index(const std::string& label) const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (irreducibles[i].label == label) return i;
  throw std::out_of_range("no irreducible labelled " + label + " in " + name);
}

std::vector<std::string> WeylDatum::irreducible_labels() const {
  std::vector<std::string> out;
  for (const auto& chi : irreducibles) out.push_back(chi.label);
  return out;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate(const WeylDatum& datum) {
  std::vector<std::string> bad;
  const std::size_t nclasses = datum.classes.size();
  const std::size_t nirr = datum.irreducibles.size();

  if (datum.order <= 0) bad.push_back("order must be positive, got " + std::to_string(datum.order));
  if (datum.rank < 0) bad.push_back("rank must be nonnegative");
  if (static_cast<int>(datum.degrees.size()) != datum.rank)
    bad.push_back("degrees has " + std::to_string(datum.degrees.size()) + " entries but rank is " +
                  std::to_string(datum.rank));

  std::int64_t size_sum = 0;
  for (const auto& c : datum.classes) {
    if (c.size <= 0) bad.push_back("class " + c.label + " has nonpositive size");
    size_sum += c.size;
  }
  if (size_sum != datum.order)
    bad.push_back("sum of class sizes " + std::to_string(size_sum) + " != group order " +
                  std::to_string(datum.order));

  Integer degree_product = 1;
  for (int deg : datum.degrees) {
    if (deg < 1) bad.push_back("degree " + std::to_string(deg) + " is not positive");
    degree_product *= deg;
  }
  if (degree_product != datum.order)
    bad.push_back("product of degrees " + degree_product.get_str() + " != group order " +
                  std::to_string(datum.order));

  if (nclasses != nirr)
    bad.push_back(std::to_string(nclasses) + " classes but " + std::to_string(nirr) + " irreducibles");

  for (const auto& c : datum.classes) {
    const auto& p = c.refl_charpoly;
    if (p.coefficient(0) != 1) bad.push_back("class " + c.label + ": refl_charpoly constant term is not 1");
    if (!p.has_only_even_exponents() || !p.has_integer_coefficients() || (!p.is_zero() && p.min_exponent() < 0))
      bad.push_back("class " + c.label + ": refl_charpoly is not an integer polynomial in t");
    else if (p.is_zero() || p.max_exponent() != 2 * datum.rank)
      bad.push_back("class " + c.label + ": refl_charpoly does not have degree " + std::to_string(datum.rank));
  }

  std::optional<std::size_t> id;
  try {
    id = datum.identity_class();
  } catch (const std::out_of_range&) {
    bad.push_back("no class has refl_charpoly (1-t)^" + std::to_string(datum.rank) + " (identity class)");
  }

  bool shapes_ok = true;
  for (const auto& chi : datum.irreducibles) {
    if (chi.values.size() != nclasses) {
      bad.push_back("irreducible " + chi.label + " has " + std::to_string(chi.values.size()) +
                    " values, expected " + std::to_string(nclasses));
      shapes_ok = false;
      continue;
    }
    if (chi.dim <= 0) bad.push_back("irreducible " + chi.label + " has nonpositive dim");
    if (id && chi.values[*id] != chi.dim)
      bad.push_back("irreducible " + chi.label + ": value on identity class " + std::to_string(chi.values[*id]) +
                    " != dim " + std::to_string(chi.dim));
    for (std::size_t c = 0; c < nclasses; ++c)
      if (std::llabs(chi.values[c]) > chi.dim)
        bad.push_back("irreducible " + chi.label + ": |value| on class " + datum.classes[c].label + " exceeds dim");
  }

  if (datum.trivial_index >= nirr) bad.push_back("trivial_index out of range");
  if (datum.sign_index >= nirr) bad.push_back("sign_index out of range");
  if (!shapes_ok || datum.order <= 0 || size_sum != datum.order) return bad;

  if (datum.trivial_index < nirr)
    for (std::size_t c = 0; c < nclasses; ++c)
      if (datum.irreducibles[datum.trivial_index].values[c] != 1) {
        bad.push_back("trivial character " + datum.irreducibles[datum.trivial_index].label +
                      " is not 1 on class " + datum.classes[c].label);
        break;
      }
  if (datum.sign_index < nirr)
    for (std::size_t c = 0; c < nclasses; ++c) {
      Rational top = datum.classes[c].refl_charpoly.coefficient(2 * datum.rank);
      if (datum.rank % 2) top = -top;
      if (top != datum.irreducibles[datum.sign_index].values[c])
        bad.push_back("sign character " + datum.irreducibles[datum.sign_index].label + " on class " +
                      datum.classes[c].label + " disagrees with (-1)^r * top coefficient of refl_charpoly");
    }

  for (std::size_t i = 0; i < nirr; ++i)
    for (std::size_t j = i; j < nirr; ++j) {
      const Rational ip = inner_product(datum, datum.irreducibles[i].values, datum.irreducibles[j].values);
      const Rational expected = i == j ? 1 : 0;
      if (ip != expected)
        bad.push_back("orthogonality fails for pair (" + datum.irreducibles[i].label + ", " +
                      datum.irreducibles[j].label + "): inner product " + ip.get_str());
    }
  return bad;
}

// ---------------------------------------------------------------------------
// Symmetric groups

namespace {

using BetaSet = std::vector<int>;  // strictly decreasing

BetaSet beta_set(const Partition& shape) {
  const int k = static_cast<int>(shape.size());
  BetaSet beta(shape.size());
  for (int i = 0; i < k; ++i) beta[i] = shape[i] + k - 1 - i;
  return beta;
}

Partition from_beta(BetaSet beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int k = static_cast<int>(beta.size());
  Partition shape;
  for (int i = 0; i < k; ++i)
    if (int part = beta[i] - (k - 1 - i); part > 0) shape.push_back(part);
  return shape;
}

class MurnaghanNakayama {
 public:
  std::int64_t value(const Partition& shape, const Partition& cycles) {
    if (cycles.empty()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, cycles);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = cycles.front();
    const Partition rest(cycles.begin() + 1, cycles.end());
    const BetaSet beta = beta_set(shape);
    const std::set<int> members(beta.begin(), beta.end());
    std::int64_t total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx) {
      const int b = beta[idx];
      if (b - r < 0 || members.count(b - r)) continue;
      int between = 0;
      for (int c : beta)
        if (c > b - r && c < b) ++between;
      BetaSet next = beta;
      next[idx] = b - r;
      const std::int64_t sub = value(from_beta(std::move(next)), rest);
      total += between % 2 ? -sub : sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<Partition, Partition>, std::int64_t> memo_;
};

}  // namespace

std::int64_t symmetric_character(const std::vector<int>& shape, const std::vector<int>& cycle_type) {
  MurnaghanNakayama mn;
  return mn.value(shape, cycle_type);
}

WeylDatum generate_symmetric_group(int n, int bound) {
  if (n < 2) throw BoundExceeded("symmetric group needs n >= 2, got " + std::to_string(n));
  if (n > bound)
    throw BoundExceeded("n = " + std::to_string(n) + " exceeds the configured bound " + std::to_string(bound));

  WeylDatum w;
  w.name = "S" + std::to_string(n);
  w.rank = n - 1;
  w.order = 1;
  for (int k = 2; k <= n; ++k) {
    w.order *= k;
    w.degrees.push_back(k);
  }

  const auto parts = partitions_of(n);
  const LaurentPoly one_minus_t = LaurentPoly::from_t_coefficients({1, -1});
  for (const auto& cycle_type : parts) {
    LaurentPoly perm_charpoly(1);
    for (int len : cycle_type) perm_charpoly *= LaurentPoly(1) - LaurentPoly::t_power(len);
    w.classes.push_back({partition_label(cycle_type), w.order / centralizer_order(cycle_type),
                         divide_exact(perm_charpoly, one_minus_t)});
  }

  MurnaghanNakayama mn;
  for (const auto& shape : parts) {
    IrrChar chi;
    chi.label = partition_label(shape);
    for (const auto& cycle_type : parts) chi.values.push_back(mn.value(shape, cycle_type));
    chi.dim = chi.values.back();  // (1^n) is the identity class, listed last
    w.irreducibles.push_back(std::move(chi));
  }
  w.trivial_index = 0;
  w.sign_index = parts.size() - 1;
  return w;
}

// ---------------------------------------------------------------------------
// Serialization

nlohmann::json to_json(const WeylDatum& d) {
  nlohmann::json j;
  j["schema"] = kWeylSchema;
  j["name"] = d.name;
  j["order"] = d.order;
  j["rank"] = d.rank;
  j["degrees"] = d.degrees;
  j["classes"] = nlohmann::json::array();
  for (const auto& c : d.classes)
    j["classes"].push_back({{"label", c.label}, {"size", c.size}, {"refl_charpoly", to_json(c.refl_charpoly)}});
  j["irreducibles"] = nlohmann::json::array();
  for (const auto& chi : d.irreducibles)
    j["irreducibles"].push_back({{"label", chi.label}, {"dim", chi.dim}, {"values", chi.values}});
  j["trivial_index"] = d.trivial_index;
  j["sign_index"] = d.sign_index;
  return j;
}

namespace {

template <class T>
T get_as(const nlohmann::json& j, const char* key, const std::string& ctx) {
  const auto& v = require_field(j, key, ctx);
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) throw ParseError(ctx + ": field '" + key + "' must be an integer");
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) throw ParseError(ctx + ": field '" + key + "' must be a string");
  }
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ctx + ": field '" + key + "': " + e.what());
  }
}

}  // namespace

WeylDatum weyl_from_json(const nlohmann::json& j) {
  const std::string ctx = "group datum";
  if (get_as<std::string>(j, "schema", ctx) != kWeylSchema)
    throw ParseError(ctx + ": unsupported schema " + j.at("schema").dump());
  WeylDatum d;
  d.name = get_as<std::string>(j, "name", ctx);
  d.order = get_as<std::int64_t>(j, "order", ctx);
  d.rank = get_as<int>(j, "rank", ctx);
  d.degrees = get_as<std::vector<int>>(j, "degrees", ctx);
  for (const auto& c : require_field(j, "classes", ctx)) {
    const std::string cctx = ctx + " class";
    d.classes.push_back({get_as<std::string>(c, "label", cctx), get_as<std::int64_t>(c, "size", cctx),
                         laurent_from_json(require_field(c, "refl_charpoly", cctx))});
  }
  for (const auto& chi : require_field(j, "irreducibles", ctx)) {
    const std::string ictx = ctx + " irreducible";
    const auto& values = require_field(chi, "values", ictx);
    if (!values.is_array()) throw ParseError(ictx + ": values must be an array");
    IrrChar irr{get_as<std::string>(chi, "label", ictx), get_as<std::int64_t>(chi, "dim", ictx), {}};
    for (const auto& v : values) {
      if (!v.is_number_integer())
        throw ParseError(ictx + " " + irr.label + ": character value " + v.dump() + " is not an integer");
      irr.values.push_back(v.get<std::int64_t>());
    }
    d.irreducibles.push_back(std::move(irr));
  }
  d.trivial_index = get_as<std::size_t>(j, "trivial_index", ctx);
  d.sign_index = get_as<std::size_t>(j, "sign_index", ctx);

  if (auto bad = validate(d); !bad.empty()) throw ValidationError(std::move(bad));
  return d;
}

WeylDatum load_datum(const std::filesystem::path& path) { return weyl_from_json(read_json_file(path)); }

void save_datum(const WeylDatum& datum, const std::filesystem::path& path) {
  write_file_atomic(path, to_json(datum).dump(2) + "\n");
}

// ---------------------------------------------------------------------------

ClassFunction product_character(const WeylDatum& datum, std::size_t i, std::size_t j, bool twist_by_sign) {
  const auto& a = datum.irreducibles.at(i).values;
  const auto& b = datum.irreducibles.at(j).values;
  const auto& sign = datum.irreducibles.at(datum.sign_index).values;
  ClassFunction out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c] * b[c] * (twist_by_sign ? sign[c] : 1);
  return out;
}

Rational inner_product(const WeylDatum& datum, const ClassFunction& f, const ClassFunction& g) {
  if (f.size() != datum.classes.size() || g.size() != datum.classes.size())
    throw std::invalid_argument("inner_product: class function length mismatch");
  Integer sum = 0;
  for (std::size_t c = 0; c < f.size(); ++c)
    sum += Integer(datum.classes[c].size) * Integer(f[c]) * Integer(g[c]);
  Rational out(sum, Integer(datum.order));
  out.canonicalize();
  return out;
}

}  // namespace green
