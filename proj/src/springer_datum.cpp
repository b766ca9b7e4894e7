#include "green/springer_datum.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "green/error.hpp"
#include "green/io.hpp"
#include "green/partition.hpp"
#include "green/weyl_datum.hpp"

namespace green {

std::optional<std::size_t> SpringerDatum::orbit_index(const std::string& label) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].label == label) return i;
  return std::nullopt;
}

ClosureOrder::ClosureOrder(const SpringerDatum& datum) {
  const std::size_t n = datum.orbits.size();
  leq_.assign(n, std::vector<bool>(n, false));
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t b = 0; b < n; ++b)
    for (const auto& label : datum.orbits[b].covers)
      if (auto a = datum.orbit_index(label)) below[b].push_back(*a);

  for (std::size_t top = 0; top < n; ++top) {
    std::vector<std::size_t> stack{top};
    std::vector<bool> seen(n, false);
    seen[top] = true;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      leq_[cur][top] = true;
      for (std::size_t next : below[cur]) {
        if (next == top) acyclic_ = false;
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
  }
}

std::vector<std::string> validate(const SpringerDatum& datum, const WeylDatum* weyl, int flag_dimension) {
  std::vector<std::string> bad;
  std::set<std::string> labels;
  for (const auto& o : datum.orbits) {
    if (!labels.insert(o.label).second) bad.push_back("duplicate orbit label " + o.label);
    if (o.dim < 0 || o.dim % 2 != 0)
      bad.push_back("orbit " + o.label + " has dimension " + std::to_string(o.dim) + ", which is not even and nonnegative");
    if (o.dim > 2 * flag_dimension)
      bad.push_back("orbit " + o.label + " has dimension " + std::to_string(o.dim) + " > 2d = " +
                    std::to_string(2 * flag_dimension));
  }
  for (const auto& o : datum.orbits)
    for (const auto& c : o.covers) {
      auto idx = datum.orbit_index(c);
      if (!idx) {
        bad.push_back("orbit " + o.label + " covers unknown orbit " + c);
        continue;
      }
      if (datum.orbits[*idx].dim >= o.dim)
        bad.push_back("closure order not dimension-monotone: " + c + " < " + o.label + " but dim " +
                      std::to_string(datum.orbits[*idx].dim) + " >= " + std::to_string(o.dim));
    }
  if (!ClosureOrder(datum).acyclic()) bad.push_back("closure relation is cyclic");

  for (const auto& [chi, orbit] : datum.support_map)
    if (!labels.count(orbit)) bad.push_back("support_map sends " + chi + " to unknown orbit " + orbit);
  if (weyl) {
    std::set<std::string> irr;
    for (const auto& chi : weyl->irreducibles) {
      irr.insert(chi.label);
      if (!datum.support_map.count(chi.label)) bad.push_back("support_map is missing irreducible " + chi.label);
    }
    for (const auto& kv : datum.support_map)
      if (!irr.count(kv.first)) bad.push_back("support_map names " + kv.first + ", which is not an irreducible of " + weyl->name);
  }
  return bad;
}

SpringerDatum generate_type_A(int n) {
  if (n < 2) throw BoundExceeded("type A Springer datum needs n >= 2");
  const int d = n * (n - 1) / 2;
  const auto parts = partitions_of(n);
  SpringerDatum s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Orbit o{partition_label(parts[i]), 2 * (d - n_statistic(parts[i])), {}};
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i == j || !dominates(parts[i], parts[j])) continue;
      bool covered = true;
      for (std::size_t k = 0; k < parts.size() && covered; ++k)
        if (k != i && k != j && dominates(parts[i], parts[k]) && dominates(parts[k], parts[j])) covered = false;
      if (covered) o.covers.push_back(partition_label(parts[j]));
    }
    s.orbits.push_back(std::move(o));
    s.support_map.emplace(partition_label(parts[i]), partition_label(parts[i]));
  }
  return s;
}

nlohmann::json to_json(const SpringerDatum& datum) {
  nlohmann::json j;
  j["schema"] = kSpringerSchema;
  j["orbits"] = nlohmann::json::array();
  for (const auto& o : datum.orbits) j["orbits"].push_back({{"label", o.label}, {"dim", o.dim}, {"covers", o.covers}});
  j["support_map"] = datum.support_map;
  return j;
}

SpringerDatum springer_from_json(const nlohmann::json& j, const WeylDatum& weyl) {
  const std::string ctx = "springer datum";
  const auto& schema = require_field(j, "schema", ctx);
  if (!schema.is_string() || schema.get<std::string>() != kSpringerSchema)
    throw ParseError(ctx + ": unsupported schema " + schema.dump());
  SpringerDatum s;
  try {
    for (const auto& o : require_field(j, "orbits", ctx)) {
      const auto& dim = require_field(o, "dim", ctx + " orbit");
      if (!dim.is_number_integer()) throw ParseError(ctx + ": orbit dim must be an integer");
      s.orbits.push_back({require_field(o, "label", ctx + " orbit").get<std::string>(), dim.get<int>(),
                          require_field(o, "covers", ctx + " orbit").get<std::vector<std::string>>()});
    }
    s.support_map = require_field(j, "support_map", ctx).get<std::map<std::string, std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ctx + ": " + e.what());
  }
  if (auto bad = validate(s, &weyl, weyl.flag_dimension()); !bad.empty()) throw ValidationError(std::move(bad));
  return s;
}

SpringerDatum load_springer(const std::filesystem::path& path, const WeylDatum& weyl) {
  return springer_from_json(read_json_file(path), weyl);
}

void save_springer(const SpringerDatum& datum, const std::filesystem::path& path) {
  write_file_atomic(path, to_json(datum).dump(2) + "\n");
}

// ---------------------------------------------------------------------------

std::vector<std::string> BlockStructure::linear_extension() const {
  std::vector<std::string> out;
  for (const auto& b : blocks) out.push_back(b.orbit);
  return out;
}

std::vector<std::size_t> BlockStructure::block_of() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.members.size();
  std::vector<std::size_t> out(n);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (std::size_t m : blocks[k].members) out.at(m) = k;
  return out;
}

BlockStructure block_structure(const SpringerDatum& springer, const std::vector<std::string>& irreducible_labels,
                               std::optional<std::uint64_t> seed) {
  const ClosureOrder order(springer);
  if (!order.acyclic()) throw ValidationError({"closure relation is cyclic"});
  const std::size_t n = springer.orbits.size();

  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < irreducible_labels.size(); ++i) {
    auto it = springer.support_map.find(irreducible_labels[i]);
    if (it == springer.support_map.end())
      throw ValidationError({"support_map is missing irreducible " + irreducible_labels[i]});
    auto orbit = springer.orbit_index(it->second);
    if (!orbit) throw ValidationError({"support_map sends " + it->first + " to unknown orbit " + it->second});
    members[*orbit].push_back(i);
  }

  std::mt19937_64 rng(seed.value_or(0));
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> sequence;
  while (sequence.size() < n) {
    std::vector<std::size_t> ready;
    for (std::size_t o = 0; o < n; ++o) {
      if (placed[o]) continue;
      bool minimal = true;
      for (std::size_t p = 0; p < n && minimal; ++p)
        if (p != o && !placed[p] && order.leq(p, o)) minimal = false;
      if (minimal) ready.push_back(o);
    }
    std::size_t pick;
    if (seed) {
      pick = ready[rng() % ready.size()];
    } else {
      pick = *std::min_element(ready.begin(), ready.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(springer.orbits[a].dim, a) < std::pair(springer.orbits[b].dim, b);
      });
    }
    placed[pick] = true;
    sequence.push_back(pick);
  }

  BlockStructure bs;
  std::vector<std::size_t> orbit_of_block;
  for (std::size_t o : sequence) {
    if (members[o].empty()) continue;
    bs.blocks.push_back({springer.orbits[o].label, springer.orbits[o].dim, members[o]});
    orbit_of_block.push_back(o);
  }
  const std::size_t m = bs.blocks.size();
  bs.below.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) bs.below[a][b] = order.leq(orbit_of_block[a], orbit_of_block[b]);
  return bs;
}

}  // namespace green
