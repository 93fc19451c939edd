#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nahilb/error.hpp"
#include "nahilb/partition.hpp"
#include "nahilb/weights.hpp"

using namespace nahilb;

namespace {

using Points = std::vector<LatticePoint>;

Enumeration chain(int n, std::vector<int> dims, std::vector<Points> layers) {
  std::vector<Partition> ps;
  for (auto& l : layers) ps.push_back(make_partition(n, std::move(l)));
  return canonical_enumeration(make_nested(n, std::move(dims), std::move(ps)));
}

SignedWeightMultiset multiset(int n, std::initializer_list<std::pair<Weight, int>> entries) {
  SignedWeightMultiset m(n);
  for (const auto& [w, k] : entries) m.add(w, k);
  return m;
}

// sum_k d_{k+1} (n + D_k (D_k + 1)/2 - D_k - d_{k+1}) over the non-origin blocks.
int tower(int n, const std::vector<int>& dims) {
  int total = 0, D = 0;
  for (std::size_t k = 1; k < dims.size(); ++k) {
    total += dims[k] * (n + D * (D + 1) / 2 - D - dims[k]);
    D += dims[k];
  }
  return total;
}

// Partial flag variety dimension: sum over pairs of blocks, the complement counted as a block.
int flag_dimension(int n, const std::vector<int>& hat) {
  std::vector<int> blocks = hat;
  int used = 0;
  for (int b : hat) used += b;
  blocks.push_back(n - used);
  int dim = 0;
  for (std::size_t p = 0; p < blocks.size(); ++p)
    for (std::size_t q = p + 1; q < blocks.size(); ++q) dim += blocks[p] * blocks[q];
  return dim;
}

LinearForm ls(int i) { return LinearForm::variable(s_var(i)); }

const std::vector<std::vector<int>> kPointedDims{{1}, {1, 1}, {1, 2}, {1, 3}, {1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 1, 1, 1}, {1, 4}};

}  // namespace

TEST_CASE("tangent_class") {
  CHECK(tangent_class(chain(3, {1}, {{{0, 0, 0}}})) == multiset(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
  for (int n = 1; n <= 4; ++n) {
    LatticePoint zero(static_cast<std::size_t>(n), 0);
    const auto t = tangent_class(canonical_enumeration(make_nested(n, {1, 1}, {make_partition(n, {zero}), make_partition(n, {zero, unit_vector(n, 1)})})));
    CHECK(t.net_rank() == 2 * n);
    CHECK(t.fixed_rank() == 0);
  }
  // Families of sizes 3, 4 and 3: {1, 0, -1} + {1, 0, 1, 2} - {0, -1, 0}.
  CHECK(tangent_class(chain(1, {1, 1, 1}, {{{0}}, {{0}, {1}}, {{0}, {1}, {2}}})) == multiset(1, {{{1}, 3}, {{2}, 1}}));
}

TEST_CASE("tangent_class_punctual") {
  for (int n = 1; n <= 4; ++n) {
    LatticePoint zero(static_cast<std::size_t>(n), 0);
    const auto e = canonical_enumeration(make_nested(n, {1, 1}, {make_partition(n, {zero}), make_partition(n, {zero, unit_vector(n, 1)})}));
    SignedWeightMultiset expected(n);
    for (int i = 2; i <= n; ++i) {
      Weight w(static_cast<std::size_t>(n), 0);
      w[static_cast<std::size_t>(i - 1)] = 1;
      w[0] = -1;
      expected.add(w);
    }
    CHECK(tangent_class_punctual(e) == expected);
  }
  CHECK(tangent_class_punctual(chain(2, {1, 1, 1}, {{{0, 0}}, {{0, 0}, {1, 0}}, {{0, 0}, {1, 0}, {0, 1}}})).net_rank() == 2);
  CHECK(tangent_class_punctual(chain(2, {1, 2}, {{{0, 0}}, {{0, 0}, {1, 0}, {0, 1}}})).net_rank() == 0);
  CHECK_THROWS_AS(tangent_class_punctual(chain(2, {2}, {{{0, 0}, {1, 0}}})), Error);
}

TEST_CASE("obstruction_class") {
  for (const auto& lambda : enumerate_nested(3, {1, 1})) CHECK(obstruction_class(canonical_enumeration(lambda)).entries().empty());
  CHECK(obstruction_class(chain(2, {1, 2}, {{{0, 0}}, {{0, 0}, {1, 0}, {0, 1}}})) ==
        multiset(2, {{{1, 1}, 2}, {{2, 0}, 1}, {{0, 2}, 1}}));
  const Enumeration line = chain(1, {3}, {{{0}, {1}, {2}}});
  CHECK(obstruction_class(line).fixed_rank() == fixed_ranks(line).obstruction);
}

TEST_CASE("epunct_class") {
  CHECK(epunct_class(chain(2, {1}, {{{0, 0}}})) == multiset(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(epunct_class(chain(3, {1, 1}, {{{0, 0, 0}}, {{0, 0, 0}, {1, 0, 0}}})) ==
        multiset(3, {{{1, 0, 0}, 2}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
}

TEST_CASE("punctual tangent identities on nil-filtered points") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& dims : kPointedDims)
      for (const auto& lambda : enumerate_nested(n, dims)) {
        if (!is_nilfil(lambda)) continue;
        const Enumeration e = canonical_enumeration(lambda);
        CHECK(tangent_class(e) - epunct_class(e) == tangent_class_punctual(e));
        CHECK(tangent_class_punctual(e).net_rank() == tower(n, dims));
      }
}

TEST_CASE("recursive and index-product forms agree") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 5; ++d)
      for (const auto& dims : std::vector<std::vector<int>>{{d}, {1, d - 1}, {2, d - 2}, {1, 1, d - 2}})
        if (dims.back() >= 0 && (dims.size() == 1 || dims[1] >= 0))
          for (const auto& lambda : enumerate_nested(n, dims)) {
            const Enumeration e = canonical_enumeration(lambda);
            CHECK(tangent_class(e) == tangent_class_direct(e));
            CHECK(obstruction_class(e) == obstruction_class_direct(e));
          }
}

TEST_CASE("fiber_tangent_class") {
  for (int n = 1; n <= 3; ++n) CHECK(fiber_tangent_class(canonical_enumeration(porteous(n, {1, 1})), CosetRep{{1}}).entries().empty());
  CHECK(fiber_tangent_class(chain(2, {1}, {{{0, 0}}}), CosetRep{}).entries().empty());
  for (int n = 1; n <= 4; ++n)
    for (const auto& dims : kPointedDims) {
      int d = 0;
      for (int x : dims) d += x;
      if (d - 1 > n) continue;
      CosetRep id;
      for (int j = 1; j < d; ++j) id.images.push_back(j);
      const Enumeration port = canonical_enumeration(porteous(n, dims));
      const SignedWeightMultiset fiber = fiber_tangent_class(port, id);
      CHECK(fiber.net_rank() == tower(n, dims) - flag_dimension(n, flag_dims(dims)));
      for (const auto& lambda : enumerate_nested(n, dims)) {
        if (!is_nilfil(lambda) || !in_flag_fiber(lambda, id)) continue;
        const Enumeration e = canonical_enumeration(lambda);
        CHECK(fiber_tangent_class(e, id) == fiber_tangent_class_direct(e, id));
      }
    }
  CHECK_THROWS_AS(fiber_tangent_class(chain(2, {1, 1}, {{{0, 0}}, {{0, 0}, {0, 1}}}), CosetRep{{1}}), Error);
}

TEST_CASE("flag_tangent_euler") {
  CHECK(flag_tangent_euler(CosetRep{{1}}, 2, {1}) == FactoredRational::from_form(ls(2) - ls(1)));
  FactoredRational full = FactoredRational::from_form(ls(2) - ls(1));
  full.multiply_form(ls(3) - ls(1), 1);
  full.multiply_form(ls(3) - ls(2), 1);
  CHECK(flag_tangent_euler(CosetRep{{1, 2}}, 3, {1, 1}) == full);
  FactoredRational grass = FactoredRational::from_form(ls(3) - ls(1));
  grass.multiply_form(ls(3) - ls(2), 1);
  CHECK(flag_tangent_euler(CosetRep{{1, 2}}, 3, {2}) == grass);
}

TEST_CASE("fixed_ranks") {
  const Enumeration four = chain(1, {5}, {{{0}, {1}, {2}, {3}, {4}}});
  CHECK(tangent_fixed_rank_at(four, {4}) == 1);
  CHECK(obstruction_fixed_rank_at(four, {4}) == 1);
  CHECK(fixed_ranks(four).tangent == fixed_ranks(four).obstruction);
  const Enumeration five = chain(1, {6}, {{{0}, {1}, {2}, {3}, {4}, {5}}});
  CHECK(tangent_fixed_rank_at(five, {5}) == 1);
  CHECK(obstruction_fixed_rank_at(five, {5}) == 2);
  CHECK(fixed_ranks(five).tangent != fixed_ranks(five).obstruction);
  const FixedRanks plain = fixed_ranks(chain(2, {3}, {{{0, 0}, {1, 0}, {0, 1}}}));
  CHECK(plain.tangent == 0);
  CHECK(plain.obstruction == 0);
}

TEST_CASE("fixed ranks match the zero weights and admissibility") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 6; ++d)
      for (const auto& lambda : enumerate_nested(n, {d})) {
        const Enumeration e = canonical_enumeration(lambda);
        const FixedRanks r = fixed_ranks(e);
        CHECK(r.tangent == tangent_class(e).fixed_rank());
        CHECK(r.obstruction == obstruction_class(e).fixed_rank());
        CHECK((r.tangent == r.obstruction) == is_admissible(lambda));
      }
}

TEST_CASE("euler_class") {
  const auto plain = euler_class(multiset(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, 3}}));
  FactoredRational expected = FactoredRational::from_form(ls(1));
  expected.multiply_form(ls(2), 1);
  CHECK(plain == expected);
  const auto square = euler_class(multiset(2, {{{1, -1}, 1}, {{-1, 1}, 1}}));
  CHECK(square == -FactoredRational::from_form(ls(1) - ls(2), 2));
  CHECK(euler_class(multiset(1, {{{1}, -1}})) == FactoredRational::from_form(ls(1), -1));
  CHECK(euler_class(multiset(1, {{{1}, 1}}), Namespace::z) == FactoredRational::from_form(LinearForm::variable(z_var(1))));
}

TEST_CASE("multiset arithmetic") {
  const auto a = multiset(2, {{{1, 0}, 2}, {{0, 0}, 1}});
  const auto b = multiset(2, {{{1, 0}, 2}, {{0, 1}, -1}});
  CHECK((a - b) == multiset(2, {{{0, 0}, 1}, {{0, 1}, 1}}));
  CHECK((a - a).entries().empty());
  CHECK(a.net_rank() == 3);
  CHECK(a.moving_part() == multiset(2, {{{1, 0}, 2}}));
  CHECK(b.has_negative_multiplicity());
  CHECK_THROWS_AS(a + SignedWeightMultiset(3), Error);
}
