#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "nahilb/error.hpp"
#include "nahilb/localization.hpp"

using namespace nahilb;

namespace {

using Points = std::vector<LatticePoint>;

SparsePolynomial s(int i) { return SparsePolynomial::variable(s_var(i)); }
SparsePolynomial eta(int j) { return SparsePolynomial::variable(z_var(j)); }
SparsePolynomial theta(int i) { return SparsePolynomial::variable(theta_var(i)); }
LinearForm ls(int i) { return LinearForm::variable(s_var(i)); }

Enumeration chain(int n, std::vector<int> dims, std::vector<Points> layers) {
  std::vector<Partition> ps;
  for (auto& l : layers) ps.push_back(make_partition(n, std::move(l)));
  return canonical_enumeration(make_nested(n, std::move(dims), std::move(ps)));
}

LatticePoint e3(int i, int times = 1) {
  LatticePoint u(3, 0);
  u[static_cast<std::size_t>(i - 1)] = times;
  return u;
}

FactoredRational over(const SparsePolynomial& num, const std::vector<LinearForm>& den) {
  FactoredRational f = FactoredRational::from_polynomial(num);
  for (const auto& form : den) f.multiply_form(form, -1);
  return f;
}

TautClass c2_dual_cubed() {
  const TautClass c2 = chern_taut(2, 0, 3, true);
  return c2 * c2 * c2;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::NotImplemented;
}

}  // namespace

TEST_CASE("chern_taut") {
  CHECK(chern_taut(2, 0, 3, true).poly() == eta(1) * eta(2));
  CHECK(chern_taut(0, 2, 3, false).poly() == SparsePolynomial(Rational(1)));
  CHECK(chern_taut(1, 1, 2, false).poly() == theta(1) * Rational(2) - eta(1));
  CHECK(chern_taut(3, 0, 3, true).poly().is_zero());
  CHECK(chern_taut(1, 0, 3, false).poly() == -(eta(1) + eta(2)));
}

TEST_CASE("TautClass validates symmetry") {
  CHECK(kind_of([] { TautClass(eta(1), 0, 3); }) == ErrorKind::NotBisymmetric);
  CHECK(kind_of([] { TautClass(theta(1), 2, 2); }) == ErrorKind::NotBisymmetric);
  CHECK(kind_of([] { TautClass(eta(3), 0, 3); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { TautClass(theta(2), 1, 2); }) == ErrorKind::DimensionMismatch);
  CHECK_NOTHROW(TautClass(eta(1) * eta(2) + s(1) * (eta(1) + eta(2)), 0, 3));
}

TEST_CASE("restrict_class") {
  const TautClass c2 = chern_taut(2, 0, 3, true);
  for (int i = 1; i <= 3; ++i) {
    CHECK(restrict_class(c2, chain(3, {3}, {{e3(1, 0), e3(i), e3(i, 2)}})) == s(i) * s(i) * Rational(2));
    for (int j = i + 1; j <= 3; ++j) CHECK(restrict_class(c2, chain(3, {3}, {{e3(1, 0), e3(i), e3(j)}})) == s(i) * s(j));
  }
  CHECK(restrict_class(TautClass::constant(1, 0, 3), chain(3, {3}, {{e3(1, 0), e3(1), e3(2)}})) == SparsePolynomial(Rational(1)));
}

TEST_CASE("Hilb3 contributions") {
  const TautClass p = c2_dual_cubed();
  const std::array<std::array<int, 2>, 3> others{{{2, 3}, {1, 3}, {1, 2}}};
  for (int i = 1; i <= 3; ++i) {
    const int j = others[static_cast<std::size_t>(i - 1)][0], k = others[static_cast<std::size_t>(i - 1)][1];
    const FactoredRational line = over(s(i).pow(6) * Rational(80),
                                       {ls(j), ls(j) - ls(i), ls(j) - ls(i) * 2, ls(k), ls(k) - ls(i), ls(k) - ls(i) * 2});
    CHECK(equivalent(contribution(chain(3, {3}, {{e3(1, 0), e3(i), e3(i, 2)}}), Space::nhilb, p), line));
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      const int k = 6 - i - j;
      const SparsePolynomial num = (s(i) * Rational(2) + s(j)) * (s(i) + s(j) * Rational(2)) * (s(i) + s(j)) * s(i) * s(j);
      const FactoredRational corner = over(num, {ls(i) * 2 - ls(j), ls(j) * 2 - ls(i), ls(k), ls(k) - ls(i), ls(k) - ls(j)});
      CHECK(equivalent(contribution(chain(3, {3}, {{e3(1, 0), e3(i), e3(j)}}), Space::nhilb, p), corner));
    }
  for (int n = 1; n <= 4; ++n) {
    std::vector<LinearForm> den;
    for (int i = 1; i <= n; ++i) den.push_back(ls(i));
    CHECK(contribution(chain(n, {1}, {{LatticePoint(static_cast<std::size_t>(n), 0)}}), Space::nhilb, TautClass::constant(1, 0, 1)) ==
          over(SparsePolynomial(Rational(1)), den));
  }
}

TEST_CASE("Hilb3 integral and its CY restriction") {
  const IntegralResult r = integrate_localization(3, {3}, Space::nhilb, c2_dual_cubed());
  const SparsePolynomial e1 = s(1) + s(2) + s(3), e2 = s(1) * s(2) + s(1) * s(3) + s(2) * s(3), e3p = s(1) * s(2) * s(3);
  const FactoredRational closed = over((e1.pow(3) * Rational(20) - e2 * e1 * Rational(31) + e3p * Rational(11)), {ls(1), ls(2), ls(3)});
  CHECK(equivalent(r.value, closed));
  CHECK(r.vdim == 6);
  CHECK(cy_restrict(r.value, 3) == FactoredRational::constant(11));
}

TEST_CASE("cy_restrict") {
  CHECK(cy_restrict(FactoredRational::constant(7), 3) == FactoredRational::constant(7));
  CHECK(kind_of([] { cy_restrict(FactoredRational::from_form(ls(1) + ls(2) + ls(3), -1), 3); }) == ErrorKind::DegenerateRestriction);
}

TEST_CASE("projective space by localization") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= n + 1; ++k) {
      const TautClass p(eta(1).pow(static_cast<unsigned>(k)), 0, 2);
      std::vector<FactoredRational> terms;
      for (int i = 1; i <= n; ++i) {
        std::vector<LinearForm> den;
        for (int j = 1; j <= n; ++j)
          if (j != i) den.push_back(ls(j) - ls(i));
        terms.push_back(over(s(i).pow(static_cast<unsigned>(k)), den));
      }
      const IntegralResult r = integrate_localization(n, {1, 1}, Space::nilfil, p);
      CHECK(equivalent(r.value, sum_factored(terms)));
      CHECK(r.vdim == n - 1);
    }
  CHECK(integrate_localization(1, {1}, Space::nhilb, TautClass::constant(1, 0, 1)).value == FactoredRational::from_form(ls(1), -1));
}

TEST_CASE("reduce_full_flag") {
  CHECK(equivalent(reduce_full_flag(2, 1, TautClass::constant(1, 0, 2)),
                   integrate_localization(2, {1, 1}, Space::nhilb, TautClass::constant(1, 0, 2)).value));
  CHECK(equivalent(reduce_full_flag(1, 1, TautClass::constant(1, 0, 2)),
                   integrate_localization(1, {1, 1}, Space::nhilb, TautClass::constant(1, 0, 2)).value));
  // eta_2 alone is not symmetric in the eta block; eta_1 + eta_2 is the nearest valid class.
  const TautClass c1 = chern_taut(1, 0, 3, true);
  CHECK(equivalent(reduce_full_flag(2, 2, c1), integrate_localization(2, {1, 1, 1}, Space::nhilb, c1).value));
  CHECK(kind_of([] { reduce_full_flag(2, 2, TautClass::constant(1, 0, 2)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("virtual_dimension") {
  CHECK(virtual_dimension(3, {3}, Space::nhilb) == 6);
  for (int n = 1; n <= 4; ++n) {
    CHECK(virtual_dimension(n, {1, 1}, Space::nilfil) == n - 1);
    CHECK(virtual_dimension(n, {1}, Space::nhilb) == n);
  }
}

TEST_CASE("integrals are homogeneous of degree deg P - vdim") {
  for (int n = 1; n <= 3; ++n)
    for (const std::vector<int>& dims : {std::vector<int>{2}, {3}, {1, 1}, {1, 2}, {1, 1, 1}, {2, 1}})
      for (int k = 0; k <= 2; ++k) {
        int d = 0;
        for (int x : dims) d += x;
        const TautClass p = chern_taut(k, 0, d, true);
        for (Space space : {Space::nhilb, Space::nilfil}) {
          if (space == Space::nilfil && dims.front() != 1) continue;
          const IntegralResult r = integrate_localization(n, dims, space, p);
          if (r.value.is_zero()) continue;
          REQUIRE(r.value.homogeneous_degree().has_value());
          CHECK(*r.value.homogeneous_degree() == k - r.vdim);
        }
      }
}

TEST_CASE("space and method names") {
  CHECK(parse_space("nilfil") == Space::nilfil);
  CHECK(to_string(parse_method("residue")) == "residue");
  CHECK(kind_of([] { parse_space("hilb"); }) == ErrorKind::InvalidInput);
}
