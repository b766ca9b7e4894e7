#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace green {

/// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

int partition_size(const Partition& p);

/// Dominance order: a <= b iff every partial sum of a is at most that of b.
bool dominates(const Partition& b, const Partition& a);

/// n(λ) = Σ (i-1) λ_i.
int n_statistic(const Partition& p);

Partition transpose(const Partition& p);

/// z_λ = Π i^{m_i} m_i!, the centralizer order of a permutation of cycle type λ.
std::int64_t centralizer_order(const Partition& p);

std::string partition_label(const Partition& p);  // "(3,1,1)"
std::optional<Partition> parse_partition(const std::string& label);

}  // namespace green
