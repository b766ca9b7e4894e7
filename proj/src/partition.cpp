#include "green/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace green {

namespace {

void extend(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition prefix;
  extend(n, n, prefix, out);
  return out;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool dominates(const Partition& b, const Partition& a) {
  int sa = 0, sb = 0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

int n_statistic(const Partition& p) {
  int total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) total += static_cast<int>(i) * p[i];
  return total;
}

Partition transpose(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int j = 1; j <= p.front(); ++j)
    out.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [j](int part) { return part >= j; })));
  return out;
}

std::int64_t centralizer_order(const Partition& p) {
  std::map<int, int> mult;
  for (int part : p) ++mult[part];
  std::int64_t z = 1;
  for (const auto& [part, m] : mult)
    for (int k = 1; k <= m; ++k) z *= static_cast<std::int64_t>(part) * k;
  return z;
}

std::string partition_label(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::optional<Partition> parse_partition(const std::string& label) {
  if (label.size() < 3 || label.front() != '(' || label.back() != ')') return std::nullopt;
  Partition p;
  std::istringstream in(label.substr(1, label.size() - 2));
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) return std::nullopt;
    p.push_back(std::stoi(part));
  }
  if (p.empty() || !std::is_sorted(p.rbegin(), p.rend()) || p.back() <= 0) return std::nullopt;
  return p;
}

}  // namespace green
