#include <utility>

#include "nahilb/error.hpp"
#include "nahilb/localization.hpp"

namespace nahilb {

namespace {

SparsePolynomial swapped(const SparsePolynomial& p, VariableId a, VariableId b) {
  return p.substitute({{a, SparsePolynomial::variable(b)}, {b, SparsePolynomial::variable(a)}});
}

}  // namespace

TautClass::TautClass(SparsePolynomial poly, int q, int d) : poly_(std::move(poly)), q_(q), d_(d) {
  if (q < 0 || d < 1) throw Error(ErrorKind::InvalidInput, "tautological class needs q >= 0 and d >= 1");
  for (VariableId v : poly_.variables()) {
    if (v.ns == Namespace::theta && v.index > q)
      throw Error(ErrorKind::DimensionMismatch, "theta" + std::to_string(v.index) + " exceeds q");
    if (v.ns == Namespace::z && v.index > d - 1)
      throw Error(ErrorKind::DimensionMismatch, "eta" + std::to_string(v.index) + " exceeds d-1");
  }
  // Adjacent transpositions generate each symmetric group.
  for (int i = 1; i < q; ++i)
    if (swapped(poly_, theta_var(i), theta_var(i + 1)) != poly_)
      throw Error(ErrorKind::NotBisymmetric, "class is not symmetric in the theta block");
  for (int j = 1; j < d - 1; ++j)
    if (swapped(poly_, z_var(j), z_var(j + 1)) != poly_)
      throw Error(ErrorKind::NotBisymmetric, "class is not symmetric in the eta block");
}

TautClass TautClass::constant(const Rational& c, int q, int d) { return TautClass(SparsePolynomial(c), q, d); }

TautClass TautClass::operator*(const TautClass& other) const {
  if (other.q_ != q_ || other.d_ != d_) throw Error(ErrorKind::DimensionMismatch, "classes for different (q, d)");
  return TautClass(poly_ * other.poly_, q_, d_);
}

TautClass chern_taut(int k, int q, int d, bool dual) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "Chern degree must be nonnegative");
  std::vector<SparsePolynomial> roots;
  auto eta = [](int j) { return j == 0 ? SparsePolynomial() : SparsePolynomial::variable(z_var(j)); };
  for (int j = 0; j < d; ++j) {
    if (q == 0) {
      roots.push_back(dual ? eta(j) : -eta(j));
      continue;
    }
    for (int i = 1; i <= q; ++i) {
      SparsePolynomial diff = SparsePolynomial::variable(theta_var(i)) - eta(j);
      roots.push_back(dual ? -diff : diff);
    }
  }
  // e_k of the roots
  std::vector<SparsePolynomial> elem(static_cast<std::size_t>(k) + 1);
  elem[0] = SparsePolynomial(Rational(1));
  for (const auto& r : roots)
    for (int t = k; t >= 1; --t) elem[t] += elem[t - 1] * r;
  return TautClass(elem[static_cast<std::size_t>(k)], q, d);
}

}  // namespace nahilb
