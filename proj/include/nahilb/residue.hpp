#pragma once

#include <vector>

#include "nahilb/factored_rational.hpp"
#include "nahilb/localization.hpp"

namespace nahilb {

struct ResidueOptions {
  // Residue at infinity of z^k is -[k == -1]; the other sign exists for validation only.
  enum class Sign { negative_coefficient, positive_coefficient };
  Sign sign = Sign::negative_coefficient;
  // Multiplies the per-variable expansion bound; any value >= 1 gives the same result.
  int truncation_factor = 1;
  // Divide by prod_p d_p! so each flag coset is counted once.
  bool symmetrize_blocks = true;
};

// numerator / prod L^e with every L involving some z_1..z_{z_count}.
class ResidueForm {
 public:
  static ResidueForm from_factored(const FactoredRational& value, int z_count);

  const SparsePolynomial& numerator() const { return numerator_; }
  const FactoredRational::FactorMap& denominator() const { return denominator_; }
  int z_count() const { return z_count_; }
  FactoredRational to_factored() const;

 private:
  SparsePolynomial numerator_;
  FactoredRational::FactorMap denominator_;  // positive exponents
  int z_count_ = 0;
};

// Eliminates z_{z_count} first, down to z_1, expanding each denominator in the
// regime z_1 << ... << z_{z_count}.
SparsePolynomial iterated_residue(const ResidueForm& f, const ResidueOptions& options = {});

// 1 / prod_p d_p!
Rational block_symmetry_factor(const std::vector<int>& hat_dims);

// Q(z) prod_{m != l}(z_m - z_l) / (prod_{l<m, w(l)<w(m)} (z_m - z_l) prod_{i,l} (s_i - z_l)).
FactoredRational weighted_residue_integrand(const SparsePolynomial& q, int n, const std::vector<int>& hat_dims,
                                            const ResidueOptions& options = {});
SparsePolynomial weighted_residue_rhs(const SparsePolynomial& q, int n, const std::vector<int>& hat_dims,
                                      const ResidueOptions& options = {});

FactoredRational nilfil_residue_integrand(int n, const std::vector<int>& dims, const TautClass& p,
                                          const ResidueOptions& options = {});
IntegralResult integrate_residue_nilfil(int n, const std::vector<int>& dims, const TautClass& p,
                                        const ResidueOptions& options = {});

// Integral over the fiber H_id as a polynomial in s_1..s_{d-1}; needs n >= d-1.
SparsePolynomial flag_fiber_Q(int n, const std::vector<int>& dims, const TautClass& p, const Limits& limits = {});
// Residue of the part of Q_id(z) coming from one fixed point of H_id.
SparsePolynomial residue_term(const Enumeration& e, const TautClass& p, const ResidueOptions& options = {});
bool residue_term_vanishes(const Enumeration& e, const TautClass& p, const ResidueOptions& options = {});

}  // namespace nahilb
