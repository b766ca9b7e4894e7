#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace green {

struct WeylDatum;

inline constexpr const char* kSpringerSchema = "green-springer/1";

struct Orbit {
  std::string label;
  int dim = 0;
  /// Labels of the orbits this orbit covers in the closure order (the
  /// maximal orbits strictly inside its closure).
  std::vector<std::string> covers;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

/// Orbits of the nilpotent cone with their closure order, and the map
/// sending each irreducible character to the orbit supporting IC_χ.
struct SpringerDatum {
  std::vector<Orbit> orbits;
  std::map<std::string, std::string> support_map;  // irreducible label -> orbit label

  std::optional<std::size_t> orbit_index(const std::string& label) const;

  friend bool operator==(const SpringerDatum&, const SpringerDatum&) = default;
};

/// Reflexive-transitive closure of the cover relation:
/// leq[a][b] is true iff orbit a lies in the closure of orbit b.
class ClosureOrder {
 public:
  explicit ClosureOrder(const SpringerDatum& datum);

  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const { return leq_[a][b] || leq_[b][a]; }
  bool acyclic() const noexcept { return acyclic_; }
  std::size_t size() const noexcept { return leq_.size(); }

 private:
  std::vector<std::vector<bool>> leq_;
  bool acyclic_ = true;
};

/// Every violated invariant. When weyl is given, the support map must be
/// total on its irreducibles and mention nothing else.
std::vector<std::string> validate(const SpringerDatum& datum, const WeylDatum* weyl, int flag_dimension);

/// Type A: orbits are partitions of n with dim 2(d - n(λ)), closure is
/// dominance, and the irreducible λ is supported on orbit λ.
SpringerDatum generate_type_A(int n);

nlohmann::json to_json(const SpringerDatum& datum);
SpringerDatum springer_from_json(const nlohmann::json& j, const WeylDatum& weyl);
SpringerDatum load_springer(const std::filesystem::path& path, const WeylDatum& weyl);
void save_springer(const SpringerDatum& datum, const std::filesystem::path& path);

/// Irreducibles grouped by supporting orbit, blocks listed in a linear
/// extension of the closure order with smaller orbits first. Orbits that
/// support no irreducible are dropped.
struct BlockStructure {
  struct Block {
    std::string orbit;
    int orbit_dim = 0;
    std::vector<std::size_t> members;  // irreducible indices, ascending

    friend bool operator==(const Block&, const Block&) = default;
  };
  std::vector<Block> blocks;
  /// below[a][b]: orbit of block a lies in the closure of orbit of block b.
  std::vector<std::vector<bool>> below;

  std::vector<std::string> linear_extension() const;
  /// Block index for each irreducible.
  std::vector<std::size_t> block_of() const;

  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

/// Deterministic topological sort (smallest dimension, then file order)
/// without a seed; a uniformly seeded choice among minimal orbits with one.
BlockStructure block_structure(const SpringerDatum& springer, const std::vector<std::string>& irreducible_labels,
                               std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace green
