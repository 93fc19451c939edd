#include "nahilb/residue.hpp"

#include <numeric>

#include "nahilb/error.hpp"

namespace nahilb {

namespace {

LinearForm zf(int i) { return i == 0 ? LinearForm() : LinearForm::variable(z_var(i)); }

std::vector<int> levels_of(const std::vector<int>& dims) {
  std::vector<int> w;
  for (std::size_t p = 0; p < dims.size(); ++p) w.insert(w.end(), static_cast<std::size_t>(dims[p]), static_cast<int>(p));
  return w;
}

// Vandermonde over z_1..z_k divided by the cross-block factors and by prod (s_i - z_l).
void multiply_flag_measure(FactoredRational& f, int n, const std::vector<int>& w, int k) {
  for (int m = 1; m <= k; ++m)
    for (int l = 1; l <= k; ++l)
      if (m != l) f.multiply_form(zf(m) - zf(l), 1);
  for (int l = 1; l <= k; ++l)
    for (int m = l + 1; m <= k; ++m)
      if (w[l] < w[m]) f.multiply_form(zf(m) - zf(l), -1);
  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= k; ++l) f.multiply_form(LinearForm::variable(s_var(i)) - zf(l), -1);
}

void require_flag_dims(const std::vector<int>& dims, const TautClass& p) {
  if (dims.empty() || dims.front() != 1) throw Error(ErrorKind::InvalidInput, "nil-filtered data needs d_0 = 1");
  for (int d : dims)
    if (d < 0) throw Error(ErrorKind::InvalidInput, "dims entries must be nonnegative");
  if (p.d() != std::accumulate(dims.begin(), dims.end(), 0)) throw Error(ErrorKind::DimensionMismatch, "class built for a different d");
}

}  // namespace

ResidueForm ResidueForm::from_factored(const FactoredRational& value, int z_count) {
  ResidueForm f;
  f.z_count_ = z_count;
  if (value.is_zero()) return f;
  f.numerator_ = value.numerator() * value.scalar();
  for (const auto& [form, e] : value.factors()) {
    if (e > 0) {
      f.numerator_ *= SparsePolynomial::from_linear_form(form).pow(static_cast<unsigned>(e));
      continue;
    }
    auto top = form.highest_z();
    if (!top) throw Error(ErrorKind::InvalidInput, "denominator " + form.to_string() + " does not involve z");
    if (*top > z_count) throw Error(ErrorKind::InvalidInput, "denominator uses z beyond z_count");
    f.denominator_[form] = -e;
  }
  for (VariableId v : f.numerator_.variables())
    if (v.ns == Namespace::z && v.index > z_count) throw Error(ErrorKind::InvalidInput, "numerator uses z beyond z_count");
  return f;
}

FactoredRational ResidueForm::to_factored() const {
  FactoredRational::FactorMap inv;
  for (const auto& [form, e] : denominator_) inv[form] = -e;
  return FactoredRational::from_parts(1, numerator_, inv);
}

SparsePolynomial iterated_residue(const ResidueForm& f, const ResidueOptions& options) {
  if (options.truncation_factor < 1) throw Error(ErrorKind::InvalidInput, "truncation factor must be at least 1");
  const Rational sign = options.sign == ResidueOptions::Sign::negative_coefficient ? -1 : 1;
  SparsePolynomial num = f.numerator();
  FactoredRational::FactorMap den = f.denominator();
  for (int m = f.z_count(); m >= 1 && !num.is_zero(); --m) {
    const VariableId v = z_var(m);
    std::vector<std::pair<LinearForm, int>> leading;
    FactoredRational::FactorMap rest;
    int total = 0;
    for (const auto& [form, e] : den) {
      if (form.highest_z() == m) {
        leading.emplace_back(form, e);
        total += e;
      } else {
        rest.emplace(form, e);
      }
    }
    std::vector<SparsePolynomial> coeffs = num.coefficients_in(v);
    const int top = static_cast<int>(coeffs.size()) - 1;
    const int needed = top + 1 - total;
    if (needed < 0) return SparsePolynomial();
    const auto order = static_cast<std::size_t>((needed + 1) * options.truncation_factor - 1);
    Rational scale = sign;
    // Residue = [t^needed] N(t) prod (1 + x t)^{-e}, t = 1/v, N(t) = sum_b coeffs[top - b] t^b,
    // x = (form - c v)/c. Dividing by (1 + x t) is T_k <- T_k - x T_{k-1}, ascending in k.
    std::vector<SparsePolynomial> series(order + 1);
    for (std::size_t b = 0; b <= order && b <= static_cast<std::size_t>(top); ++b)
      series[b] = std::move(coeffs[static_cast<std::size_t>(top) - b]);
    for (const auto& [form, e] : leading) {
      const Rational c(form.coefficient(v));
      scale *= rational_pow(c, -e);
      const SparsePolynomial x = SparsePolynomial::from_linear_form(form.without(v)) * (Rational(1) / c);
      for (int rep = 0; rep < e; ++rep)
        for (std::size_t k = 1; k <= order; ++k)
          if (!series[k - 1].is_zero()) series[k] -= x * series[k - 1];
    }
    SparsePolynomial out = std::move(series[static_cast<std::size_t>(needed)]);
    num = out * scale;
    den = std::move(rest);
    if (num.contains(v)) throw Error(ErrorKind::NonElimination, "variable " + to_string(v) + " survived its residue");
  }
  if (num.is_zero()) return num;
  if (!den.empty() || num.contains(Namespace::z)) throw Error(ErrorKind::NonElimination, "residue left z variables behind");
  return num;
}

Rational block_symmetry_factor(const std::vector<int>& hat_dims) {
  Integer denom = 1;
  for (int d : hat_dims) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(d));
    denom *= f;
  }
  return Rational(Integer(1), denom);
}

FactoredRational weighted_residue_integrand(const SparsePolynomial& q, int n, const std::vector<int>& hat_dims,
                                            const ResidueOptions& options) {
  const int k = std::accumulate(hat_dims.begin(), hat_dims.end(), 0);
  if (k > n) throw Error(ErrorKind::InvalidInput, "flag blocks exceed n");
  std::vector<int> w{0};
  for (int level : flag_levels(k, hat_dims)) w.push_back(level);
  FactoredRational f = FactoredRational::from_polynomial(q);
  multiply_flag_measure(f, n, w, k);
  if (options.symmetrize_blocks) f *= block_symmetry_factor(hat_dims);
  return f;
}

SparsePolynomial weighted_residue_rhs(const SparsePolynomial& q, int n, const std::vector<int>& hat_dims,
                                      const ResidueOptions& options) {
  const int k = std::accumulate(hat_dims.begin(), hat_dims.end(), 0);
  return iterated_residue(ResidueForm::from_factored(weighted_residue_integrand(q, n, hat_dims, options), k), options);
}

FactoredRational nilfil_residue_integrand(int n, const std::vector<int>& dims, const TautClass& p,
                                          const ResidueOptions& options) {
  require_flag_dims(dims, p);
  const std::vector<int> w = levels_of(dims);
  const int d = static_cast<int>(w.size());
  FactoredRational f = FactoredRational::from_polynomial(p.poly());
  multiply_flag_measure(f, n, w, d - 1);
  for (int i = 1; i < d; ++i)
    for (int k = i + 1; k < d; ++k)
      for (int j = 1; j < d; ++j)
        for (int m = 0; m < d; ++m)
          if (w[j] <= w[m] && w[k] <= w[m]) {
            LinearForm form = zf(i) + zf(j) + zf(k) - zf(m);
            if (!form.is_zero()) f.multiply_form(form, 1);
          }
  for (int i = 1; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = 1; k < d; ++k)
        if (w[j] < w[k]) {
          LinearForm form = zf(i) + zf(j) - zf(k);
          if (!form.is_zero()) f.multiply_form(form, -1);
        }
  if (options.symmetrize_blocks) f *= block_symmetry_factor(flag_dims(dims));
  return f;
}

IntegralResult integrate_residue_nilfil(int n, const std::vector<int>& dims, const TautClass& p, const ResidueOptions& options) {
  const FactoredRational integrand = nilfil_residue_integrand(n, dims, p, options);
  const int d = p.d();
  IntegralResult result;
  result.space = Space::nilfil;
  result.method = Method::residue;
  result.vdim = virtual_dimension(n, dims, Space::nilfil);
  result.value = FactoredRational::from_polynomial(iterated_residue(ResidueForm::from_factored(integrand, d - 1), options));
  return result;
}

namespace {

CosetRep identity_coset(int d) {
  CosetRep id;
  for (int j = 1; j < d; ++j) id.images.push_back(j);
  return id;
}

}  // namespace

SparsePolynomial flag_fiber_Q(int n, const std::vector<int>& dims, const TautClass& p, const Limits& limits) {
  require_flag_dims(dims, p);
  const int d = p.d();
  if (n < d - 1) throw Error(ErrorKind::InvalidInput, "the flag fiber needs n >= d-1");
  const CosetRep id = identity_coset(d);
  std::vector<FactoredRational> terms;
  for (const auto& lambda : enumerate_nested(n, dims, limits)) {
    if (!is_nilfil(lambda) || !in_flag_fiber(lambda, id)) continue;
    const Enumeration e = canonical_enumeration(lambda);
    const SignedWeightMultiset tangent = fiber_tangent_class(e, id);
    const SignedWeightMultiset obstruction = obstruction_class(e);
    if (tangent.fixed_rank() != obstruction.fixed_rank()) continue;
    FactoredRational value = FactoredRational::from_polynomial(restrict_class(p, e));
    value *= euler_class(obstruction);
    value *= euler_class(tangent).inverse();
    terms.push_back(value);
  }
  const FactoredRational total = sum_factored(terms);
  if (total.has_denominator()) throw Error(ErrorKind::NotPolynomial, "fiber integral kept a denominator: " + total.to_string());
  return total.expand();
}

SparsePolynomial residue_term(const Enumeration& e, const TautClass& p, const ResidueOptions& options) {
  const NestedPartition lambda = layers_of(e);
  require_flag_dims(e.dims, p);
  if (!is_nilfil(lambda)) throw Error(ErrorKind::NotNilfil, "fixed point is not nil-filtered");
  const int d = e.size();
  const CosetRep id = identity_coset(d);
  if (!in_flag_fiber(lambda, id)) throw Error(ErrorKind::NotInFiber, "fixed point is outside H_id");
  const SignedWeightMultiset tangent = fiber_tangent_class(e, id);
  const SignedWeightMultiset obstruction = obstruction_class(e);
  if (tangent.fixed_rank() != obstruction.fixed_rank()) return SparsePolynomial();
  // The fixed-point data with s_a renamed z_a.
  std::map<VariableId, SparsePolynomial> eta;
  for (int j = 1; j < d; ++j) eta.emplace(z_var(j), SparsePolynomial::from_linear_form(linear_form_of(e.order[j], Namespace::z)));
  FactoredRational f = FactoredRational::from_polynomial(p.poly().substitute(eta));
  f *= euler_class(obstruction, Namespace::z);
  f *= euler_class(tangent, Namespace::z).inverse();
  multiply_flag_measure(f, e.n, levels_of(e.dims), d - 1);
  if (options.symmetrize_blocks) f *= block_symmetry_factor(flag_dims(e.dims));
  return iterated_residue(ResidueForm::from_factored(f, d - 1), options);
}

bool residue_term_vanishes(const Enumeration& e, const TautClass& p, const ResidueOptions& options) {
  return residue_term(e, p, options).is_zero();
}

}  // namespace nahilb
