#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "green/coinvariants.hpp"
#include "green/laurent.hpp"
#include "green/partition.hpp"
#include "green/springer_datum.hpp"
#include "green/weyl_datum.hpp"

// Ground-truth generators used to cross-check the main computation path.
// Nothing in green_core depends on this header.
namespace green::oracle {

/// Semistandard tableau of shape λ and content μ, stored row by row.
struct SSYT {
  Partition shape;
  Partition weight;
  std::vector<std::vector<int>> rows;
};

std::vector<SSYT> semistandard_tableaux(const Partition& shape, const Partition& weight);

/// Reading word: rows from bottom to top, each read left to right.
std::vector<int> reading_word(const SSYT& t);

/// Lascoux-Schützenberger charge of a word whose content is a partition.
int charge(std::vector<int> word);

/// Σ_{T ∈ SSYT(λ, μ)} t^{charge(T)}; zero unless λ dominates μ.
LaurentPoly kostka_foulkes(const Partition& shape, const Partition& weight);

struct CoinvariantExpansion {
  WeylDatum weyl;  // generate_symmetric_group(n), whose class order the traces follow
  /// traces[k][c]: trace of a class-c representative on the degree-k slice.
  std::vector<ClassFunction> traces;
  /// Per irreducible, Σ_k ⟨χ, trace_k⟩ t^k.
  std::vector<LaurentPoly> multiplicities;
};

/*
  Expands the coinvariant algebra of S_n on x_1..x_n in the Artin basis
  x^a, a_i < i, reducing permuted monomials with the Gröbner basis
  h_k(x_k, ..., x_n). Factorial cost, so n <= 6.
*/
CoinvariantExpansion coinvariant_expand(int n, int max_degree);

struct UniquenessReport {
  bool identical = true;
  std::size_t runs = 0;
  std::vector<std::vector<std::string>> extensions;  // linear extension used per seed
  std::vector<std::string> findings;
};

/// Solves once per seeded linear extension and compares P and Λ entrywise.
UniquenessReport uniqueness_harness(const OmegaMatrix& omega, const SpringerDatum& springer,
                                    const std::vector<std::uint64_t>& seeds);

}  // namespace green::oracle
