#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nahilb/residue.hpp"

namespace nahilb::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, std::uint64_t seed = 20240607);
std::vector<CriterionResult> run_all(const std::vector<int>& ids, std::uint64_t seed = 20240607);

// Independent oracles; none of them goes through the engine code paths they check.

// sum over coset representatives of Q(s_sigma) / prod_{w(i) > w(j)} (s_sigma(i) - s_sigma(j)).
FactoredRational coset_sum(const SparsePolynomial& q, int n, const std::vector<int>& hat_dims);
// Average of Q over permutations inside each block.
SparsePolynomial block_symmetrize(const SparsePolynomial& q, const std::vector<int>& hat_dims);
// sum_k d_{k+1} (n + D_k (D_k + 1)/2 - D_k - d_{k+1}), D_k = d_1 + ... + d_k.
int tower_dimension(int n, const std::vector<int>& dims);
// {e_a - u_k : a <= n, k >= 1} - {e_sigma(i) - u_k : w(i) <= w(k)}.
SignedWeightMultiset e_sigma_class(const Enumeration& e, const CosetRep& sigma);
FactoredRational hilb3_closed_form();
// Contribution of {0, e_i, 2 e_i} (j == 0) or {0, e_i, e_j} to the Hilb^3 anchor.
FactoredRational hilb3_point_formula(int i, int j);
std::vector<std::vector<int>> compositions(int total);

}  // namespace nahilb::acceptance
