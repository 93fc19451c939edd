#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nahilb/acceptance.hpp"
#include "nahilb/error.hpp"
#include "nahilb/residue.hpp"

using namespace nahilb;

namespace {

SparsePolynomial s(int i) { return SparsePolynomial::variable(s_var(i)); }
SparsePolynomial z(int l) { return SparsePolynomial::variable(z_var(l)); }
LinearForm ls(int i) { return LinearForm::variable(s_var(i)); }
LinearForm lz(int l) { return LinearForm::variable(z_var(l)); }

ResidueForm single_variable(const SparsePolynomial& num, int n) {
  FactoredRational f = FactoredRational::from_polynomial(num);
  for (int i = 1; i <= n; ++i) f.multiply_form(ls(i) - lz(1), -1);
  return ResidueForm::from_factored(f, 1);
}

// sum_i P(s_i) / prod_{j != i} (s_j - s_i)
FactoredRational partial_fractions(const SparsePolynomial& p, int n) {
  std::vector<FactoredRational> terms;
  for (int i = 1; i <= n; ++i) {
    FactoredRational t = FactoredRational::from_polynomial(p.substitute(z_var(1), s(i)));
    for (int j = 1; j <= n; ++j)
      if (j != i) t.multiply_form(ls(j) - ls(i), -1);
    terms.push_back(t);
  }
  return sum_factored(terms);
}

SparsePolynomial random_z_polynomial(std::mt19937_64& rng, int k, int degree) {
  std::uniform_int_distribution<int> coeff(-4, 4), exp(0, degree);
  std::vector<SparsePolynomial::Term> terms;
  for (int t = 0; t < 5; ++t) {
    std::vector<Monomial::Power> powers;
    int left = degree;
    for (int l = 1; l <= k; ++l) {
      const int e = std::min(left, exp(rng));
      powers.emplace_back(z_var(l), e);
      left -= e;
    }
    terms.emplace_back(Monomial(powers), Rational(coeff(rng)));
  }
  return SparsePolynomial::from_terms(std::move(terms));
}

SparsePolynomial s_to_z(const SparsePolynomial& q, int k) {
  std::map<VariableId, SparsePolynomial> rename;
  for (int j = 1; j <= k; ++j) rename.emplace(s_var(j), z(j));
  return q.substitute(rename);
}

CosetRep identity(int d) {
  CosetRep id;
  for (int j = 1; j < d; ++j) id.images.push_back(j);
  return id;
}

int total(const std::vector<int>& dims) {
  int d = 0;
  for (int x : dims) d += x;
  return d;
}

}  // namespace

TEST_CASE("iterated residue in one variable") {
  CHECK(iterated_residue(single_variable(z(1), 2)) == SparsePolynomial(Rational(-1)));
  CHECK(iterated_residue(single_variable(SparsePolynomial(Rational(1)), 2)).is_zero());
  ResidueOptions flipped;
  flipped.sign = ResidueOptions::Sign::positive_coefficient;
  CHECK(iterated_residue(single_variable(z(1), 2), flipped) == SparsePolynomial(Rational(1)));
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n + 2; ++k) {
      const SparsePolynomial p = z(1).pow(static_cast<unsigned>(k)) + z(1) * s(1) * Rational(3) - Rational(2);
      const SparsePolynomial r = iterated_residue(single_variable(p, n));
      CHECK(equivalent(FactoredRational::from_polynomial(r), partial_fractions(p, n)));
    }
}

TEST_CASE("ResidueForm rejects z-free denominators") {
  FactoredRational f = FactoredRational::from_form(ls(1), -1);
  CHECK_THROWS_AS(ResidueForm::from_factored(f, 1), Error);
  FactoredRational g = FactoredRational::from_form(lz(2), -1);
  CHECK_THROWS_AS(ResidueForm::from_factored(g, 1), Error);
}

TEST_CASE("weighted residue identity") {
  CHECK(weighted_residue_rhs(SparsePolynomial(Rational(1)), 2, {1}).is_zero());
  CHECK(weighted_residue_rhs(z(1), 2, {1}) == SparsePolynomial(Rational(-1)));
  std::mt19937_64 rng(3);
  for (const std::vector<int>& hat : {std::vector<int>{1, 1}, {2}, {1, 2}, {2, 1}, {3}})
    for (int n = total(hat); n <= 4; ++n)
      for (int trial = 0; trial < 4; ++trial) {
        const SparsePolynomial q = acceptance::block_symmetrize(random_z_polynomial(rng, total(hat), 3), hat);
        const SparsePolynomial rhs = weighted_residue_rhs(q, n, hat);
        CHECK(equivalent(FactoredRational::from_polynomial(rhs), acceptance::coset_sum(q, n, hat)));
      }
}

TEST_CASE("the unnormalized residue overcounts by the block symmetry factor") {
  std::mt19937_64 rng(5);
  ResidueOptions literal;
  literal.symmetrize_blocks = false;
  for (const std::vector<int>& hat : {std::vector<int>{2}, {1, 2}, {3}}) {
    const SparsePolynomial q = acceptance::block_symmetrize(random_z_polynomial(rng, total(hat), 3), hat);
    const SparsePolynomial normalized = weighted_residue_rhs(q, 4, hat);
    CHECK(weighted_residue_rhs(q, 4, hat, literal) == normalized * (Rational(1) / block_symmetry_factor(hat)));
  }
  CHECK(block_symmetry_factor({2, 3}) == Rational(1, 12));
}

TEST_CASE("doubling the truncation changes nothing") {
  ResidueOptions doubled;
  doubled.truncation_factor = 2;
  std::mt19937_64 rng(9);
  for (const std::vector<int>& dims : {std::vector<int>{1, 1}, {1, 2}, {1, 1, 1}, {1, 1, 2}})
    for (int n = 1; n <= 3; ++n) {
      const TautClass p = chern_taut(2, 0, total(dims), true);
      CHECK(integrate_residue_nilfil(n, dims, p).value == integrate_residue_nilfil(n, dims, p, doubled).value);
    }
  const SparsePolynomial q = random_z_polynomial(rng, 2, 4);
  CHECK(weighted_residue_rhs(q, 3, {1, 1}) == weighted_residue_rhs(q, 3, {1, 1}, doubled));
}

TEST_CASE("residue and localization agree on the nil-filtered locus") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      const TautClass p(z(1).pow(static_cast<unsigned>(k)), 0, 2);
      CHECK(equivalent(integrate_residue_nilfil(n, {1, 1}, p).value, integrate_localization(n, {1, 1}, Space::nilfil, p).value));
    }
  const TautClass one = TautClass::constant(1, 0, 3);
  CHECK(equivalent(integrate_residue_nilfil(2, {1, 1, 1}, one).value, integrate_localization(2, {1, 1, 1}, Space::nilfil, one).value));

  // n = 5, dims (1,2): compare at random rational points.
  const TautClass c2 = chern_taut(2, 0, 3, true);
  const FactoredRational residue = integrate_residue_nilfil(5, {1, 2}, c2).value;
  const FactoredRational local = integrate_localization(5, {1, 2}, Space::nilfil, c2).value;
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  int compared = 0;
  while (compared < 20) {
    Assignment a;
    for (int i = 1; i <= 5; ++i) a[s_var(i)] = Rational(num(rng), den(rng));
    for (auto& [v, r] : a) r.canonicalize();
    try {
      CHECK(residue.evaluate(a) == local.evaluate(a));
      ++compared;
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::DivisionByZero);
    }
  }
  CHECK(equivalent(residue, local));
}

TEST_CASE("flag_fiber_Q") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(flag_fiber_Q(n, {1, 1}, TautClass(z(1), 0, 2)) == s(1));
    CHECK(flag_fiber_Q(n, {1, 1}, TautClass::constant(1, 0, 2)) == SparsePolynomial(Rational(1)));
  }
  for (int n = 2; n <= 4; ++n) {
    const SparsePolynomial q = flag_fiber_Q(n, {1, 1, 1}, TautClass::constant(1, 0, 3));
    for (VariableId v : q.variables()) CHECK((v.ns == Namespace::s && v.index <= 2));
  }
}

TEST_CASE("summing the fiber integral over the flag variety gives the nil-filtered integral") {
  for (const std::vector<int>& dims : {std::vector<int>{1, 1}, {1, 2}, {1, 1, 1}, {1, 3}, {1, 1, 2}, {1, 2, 1}})
    for (int n = total(dims) - 1; n <= 4; ++n)
      for (const TautClass& p : {TautClass::constant(1, 0, total(dims)), chern_taut(2, 0, total(dims), true)}) {
        const int d = total(dims);
        const SparsePolynomial q = s_to_z(flag_fiber_Q(n, dims, p), d - 1);
        const FactoredRational flag_route = acceptance::coset_sum(q, n, flag_dims(dims));
        CHECK(equivalent(flag_route, integrate_localization(n, dims, Space::nilfil, p).value));
      }
}

TEST_CASE("per-point residue terms") {
  for (int n = 1; n <= 3; ++n) {
    const TautClass p(z(1) * z(1), 0, 2);
    CHECK(equivalent(FactoredRational::from_polynomial(residue_term(canonical_enumeration(porteous(n, {1, 1})), p)),
                     integrate_residue_nilfil(n, {1, 1}, p).value));
  }
  const TautClass one = TautClass::constant(1, 0, 3);
  int vanished = 0;
  for (int n = 2; n <= 3; ++n) {
    std::vector<FactoredRational> terms;
    for (const auto& lambda : enumerate_nested(n, {1, 1, 1})) {
      if (!is_nilfil(lambda) || !in_flag_fiber(lambda, identity(3))) continue;
      const Enumeration e = canonical_enumeration(lambda);
      terms.push_back(FactoredRational::from_polynomial(residue_term(e, one)));
      if (lambda == porteous(n, {1, 1, 1})) continue;
      CHECK(residue_term_vanishes(e, one));
      ++vanished;
    }
    CHECK(equivalent(sum_factored(terms), integrate_residue_nilfil(n, {1, 1, 1}, one).value));
  }
  CHECK(vanished > 0);
}

TEST_CASE("residue errors") {
  const TautClass one = TautClass::constant(1, 0, 3);
  const NestedPartition outside = make_nested(2, {1, 1, 1}, {make_partition(2, {{0, 0}}), make_partition(2, {{0, 0}, {0, 1}}),
                                                              make_partition(2, {{0, 0}, {0, 1}, {1, 0}})});
  CHECK_THROWS_AS(residue_term(canonical_enumeration(outside), one), Error);
  CHECK_THROWS_AS(integrate_residue_nilfil(2, {2, 1}, one), Error);
  CHECK_THROWS_AS(flag_fiber_Q(1, {1, 1, 1}, one), Error);
  CHECK_THROWS_AS(weighted_residue_rhs(z(1), 1, {2}), Error);
}
