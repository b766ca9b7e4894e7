#include "green/error.hpp"
#include "green/ls_solver.hpp"
#include "green/oracle.hpp"

namespace green::oracle {

UniquenessReport uniqueness_harness(const OmegaMatrix& omega, const SpringerDatum& springer,
                                    const std::vector<std::uint64_t>& seeds) {
  UniquenessReport report;
  if (seeds.size() < 2) {
    report.identical = false;
    report.findings.push_back("uniqueness needs at least 2 seeds, got " + std::to_string(seeds.size()));
    return report;
  }
  std::optional<SolutionPair> reference;
  std::uint64_t reference_seed = 0;
  for (std::uint64_t seed : seeds) {
    const auto blocks = block_structure(springer, omega.labels, seed);
    report.extensions.push_back(blocks.linear_extension());
    ++report.runs;
    SolutionPair pair;
    try {
      pair = solve(omega, blocks);
    } catch (const Error& e) {
      report.identical = false;
      report.findings.push_back("seed " + std::to_string(seed) + ": " + e.what());
      continue;
    }
    if (!reference) {
      reference = std::move(pair);
      reference_seed = seed;
      continue;
    }
    const std::size_t n = omega.labels.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto where = "[" + omega.labels[i] + ", " + omega.labels[j] + "]";
        if (!(pair.P(i, j) == reference->P(i, j))) {
          report.identical = false;
          report.findings.push_back("seed " + std::to_string(seed) + " vs " + std::to_string(reference_seed) + ": P" +
                                    where + " differs (" + pair.P(i, j).to_string() + " vs " +
                                    reference->P(i, j).to_string() + ")");
        }
        if (!(pair.Lambda(i, j) == reference->Lambda(i, j))) {
          report.identical = false;
          report.findings.push_back("seed " + std::to_string(seed) + " vs " + std::to_string(reference_seed) +
                                    ": Lambda" + where + " differs");
        }
      }
  }
  return report;
}

}  // namespace green::oracle
