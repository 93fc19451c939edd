#include "nahilb/localization.hpp"

#include <numeric>

#include "nahilb/error.hpp"

namespace nahilb {

std::string to_string(Space space) { return space == Space::nhilb ? "nhilb" : "nilfil"; }
std::string to_string(Method method) { return method == Method::localization ? "localization" : "residue"; }

Space parse_space(const std::string& text) {
  if (text == "nhilb") return Space::nhilb;
  if (text == "nilfil") return Space::nilfil;
  throw Error(ErrorKind::InvalidInput, "unknown space '" + text + "'");
}

Method parse_method(const std::string& text) {
  if (text == "localization") return Method::localization;
  if (text == "residue") return Method::residue;
  throw Error(ErrorKind::InvalidInput, "unknown method '" + text + "'");
}

SparsePolynomial restrict_class(const TautClass& p, const Enumeration& e) {
  if (p.d() != e.size()) throw Error(ErrorKind::DimensionMismatch, "class and fixed point have different d");
  std::map<VariableId, SparsePolynomial> values;
  for (int j = 1; j < e.size(); ++j) values.emplace(z_var(j), SparsePolynomial::from_linear_form(linear_form_of(e.order[j])));
  return p.poly().substitute(values);
}

namespace {

SignedWeightMultiset tangent_for(const Enumeration& e, Space space) {
  if (space == Space::nhilb) return tangent_class(e);
  if (!is_nilfil(layers_of(e))) throw Error(ErrorKind::NotNilfil, "fixed point is not nil-filtered");
  return tangent_class_punctual(e);
}

}  // namespace

FactoredRational contribution(const Enumeration& e, Space space, const TautClass& p) {
  const SignedWeightMultiset tangent = tangent_for(e, space);
  const SignedWeightMultiset obstruction = obstruction_class(e);
  if (tangent.fixed_rank() != obstruction.fixed_rank()) return FactoredRational();
  FactoredRational value = FactoredRational::from_polynomial(restrict_class(p, e));
  value *= euler_class(obstruction);
  value *= euler_class(tangent).inverse();
  return value.simplify();
}

int virtual_dimension_at(const Enumeration& e, Space space) {
  return tangent_for(e, space).net_rank() - obstruction_class(e).net_rank();
}

int virtual_dimension(int n, const std::vector<int>& dims, Space space) {
  std::vector<int> w;
  for (std::size_t p = 0; p < dims.size(); ++p) w.insert(w.end(), static_cast<std::size_t>(dims[p]), static_cast<int>(p));
  const int d = static_cast<int>(w.size());
  if (d < 1) throw Error(ErrorKind::InvalidInput, "total size must be positive");
  if (space == Space::nilfil && dims.front() != 1) throw Error(ErrorKind::InvalidInput, "nilfil needs d_0 = 1");
  const int k0 = space == Space::nhilb ? 0 : 1;  // punctual classes drop u_0
  int rank = n * (d - k0);
  for (int i = 1; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = k0; k < d; ++k)
        if (space == Space::nhilb ? w[j] <= w[k] : w[j] < w[k]) ++rank;
  for (int j = 1; j < d; ++j)
    for (int k = k0; k < d; ++k)
      if (w[j] <= w[k]) --rank;
  for (int i = 1; i < d; ++i)
    for (int k = i + 1; k < d; ++k)
      for (int j = 1; j < d; ++j)
        for (int m = 0; m < d; ++m)
          if (w[j] <= w[m] && w[k] <= w[m]) --rank;
  return rank;
}

IntegralResult integrate_localization(int n, const std::vector<int>& dims, Space space, const TautClass& p,
                                      const Limits& limits) {
  const int d = std::accumulate(dims.begin(), dims.end(), 0);
  if (p.d() != d) throw Error(ErrorKind::DimensionMismatch, "class built for a different d");
  IntegralResult result;
  result.space = space;
  result.method = Method::localization;
  result.vdim = virtual_dimension(n, dims, space);
  if (space == Space::nilfil && !is_full_flag(dims))
    result.warnings.push_back("nil-filtered locus is only known to be proper for full flags");
  std::vector<FactoredRational> terms;
  for (const auto& lambda : enumerate_nested(n, dims, limits)) {
    if (space == Space::nilfil && !is_nilfil(lambda)) continue;
    const Enumeration e = canonical_enumeration(lambda);
    if (virtual_dimension_at(e, space) != result.vdim)
      throw Error(ErrorKind::NonConstantVdim, "virtual dimension differs between fixed points");
    terms.push_back(contribution(e, space, p));
  }
  result.value = sum_factored(terms);
  return result;
}

FactoredRational reduce_full_flag(int n, int r, const TautClass& p, const Limits& limits) {
  if (r < 0) throw Error(ErrorKind::InvalidInput, "r must be nonnegative");
  const std::vector<int> dims(static_cast<std::size_t>(r) + 1, 1);
  if (p.d() != r + 1) throw Error(ErrorKind::DimensionMismatch, "class built for a different d");
  std::vector<FactoredRational> terms;
  for (const auto& lambda : enumerate_nested(n, dims, limits)) {
    if (!is_nilfil(lambda)) continue;
    const Enumeration e = canonical_enumeration(lambda);
    const SignedWeightMultiset tp = tangent_class_punctual(e);
    const SignedWeightMultiset ep = epunct_class(e);
    const SignedWeightMultiset ob = obstruction_class(e);
    if (tp.fixed_rank() + ep.fixed_rank() != ob.fixed_rank()) continue;
    FactoredRational value = FactoredRational::from_polynomial(restrict_class(p, e));
    value *= euler_class(ob);
    value *= euler_class(tp).inverse();
    value *= euler_class(ep).inverse();
    terms.push_back(value.simplify());
  }
  return sum_factored(terms);
}

FactoredRational cy_restrict(const FactoredRational& value, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be positive");
  LinearForm replacement;
  for (int i = 1; i < n; ++i) replacement -= LinearForm::variable(s_var(i));
  return value.substitute(s_var(n), replacement).simplify();
}

}  // namespace nahilb
