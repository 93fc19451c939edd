#pragma once

#include <string>
#include <vector>

#include "nahilb/factored_rational.hpp"
#include "nahilb/partition.hpp"
#include "nahilb/weights.hpp"

namespace nahilb {

// Polynomial in theta_1..theta_q and the tautological roots eta_1..eta_{d-1},
// with eta_j carried by z_j and eta_0 = 0. Symmetric in each block.
// s variables may appear as equivariant constants.
class TautClass {
 public:
  TautClass(SparsePolynomial poly, int q, int d);
  static TautClass constant(const Rational& c, int q, int d);

  const SparsePolynomial& poly() const { return poly_; }
  int q() const { return q_; }
  int d() const { return d_; }
  TautClass operator*(const TautClass& other) const;

 private:
  SparsePolynomial poly_;
  int q_;
  int d_;
};

// c_k of the rank-qd bundle with roots theta_i - eta_j (dual: eta_j - theta_i).
// q = 0 means the roots -eta_j (dual: eta_j).
TautClass chern_taut(int k, int q, int d, bool dual);

enum class Space { nhilb, nilfil };
enum class Method { localization, residue };

std::string to_string(Space space);
std::string to_string(Method method);
Space parse_space(const std::string& text);
Method parse_method(const std::string& text);

struct IntegralResult {
  Space space = Space::nhilb;
  Method method = Method::localization;
  int vdim = 0;
  FactoredRational value;
  std::vector<std::string> warnings;
};

// eta_j <- u_j(s).
SparsePolynomial restrict_class(const TautClass& p, const Enumeration& e);
// P|_lambda e(Ob) / e(T), zero when the fixed ranks differ.
FactoredRational contribution(const Enumeration& e, Space space, const TautClass& p);
int virtual_dimension(int n, const std::vector<int>& dims, Space space);
int virtual_dimension_at(const Enumeration& e, Space space);
IntegralResult integrate_localization(int n, const std::vector<int>& dims, Space space, const TautClass& p,
                                      const Limits& limits = {});
// Full-flag nested Hilbert integral as a sum over nil-filtered points with
// the extra factor 1/e(E_punct).
FactoredRational reduce_full_flag(int n, int r, const TautClass& p, const Limits& limits = {});
// s_n <- -(s_1 + ... + s_{n-1}), then simplify.
FactoredRational cy_restrict(const FactoredRational& value, int n);

}  // namespace nahilb
