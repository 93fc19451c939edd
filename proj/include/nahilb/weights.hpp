#pragma once

#include <map>
#include <vector>

#include "nahilb/factored_rational.hpp"
#include "nahilb/partition.hpp"

namespace nahilb {

using Weight = std::vector<int>;

// Signed multiset of characters of the n-torus; zero multiplicities are dropped.
class SignedWeightMultiset {
 public:
  using Map = std::map<Weight, int>;

  explicit SignedWeightMultiset(int n = 0) : n_(n) {}

  int n() const { return n_; }
  const Map& entries() const { return entries_; }
  void add(const Weight& w, int multiplicity = 1);
  int multiplicity(const Weight& w) const;
  int net_rank() const;
  // Multiplicity of the zero weight.
  int fixed_rank() const;
  SignedWeightMultiset moving_part() const;
  bool has_negative_multiplicity() const;

  SignedWeightMultiset& operator+=(const SignedWeightMultiset& other);
  SignedWeightMultiset& operator-=(const SignedWeightMultiset& other);
  friend SignedWeightMultiset operator+(SignedWeightMultiset a, const SignedWeightMultiset& b) { return a += b; }
  friend SignedWeightMultiset operator-(SignedWeightMultiset a, const SignedWeightMultiset& b) { return a -= b; }
  friend bool operator==(const SignedWeightMultiset& a, const SignedWeightMultiset& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  Map entries_;
};

// Recursive layer-by-layer forms; the *_direct variants use index products.
SignedWeightMultiset tangent_class(const Enumeration& e);
SignedWeightMultiset tangent_class_direct(const Enumeration& e);
SignedWeightMultiset tangent_class_punctual(const Enumeration& e);
SignedWeightMultiset obstruction_class(const Enumeration& e);
SignedWeightMultiset obstruction_class_direct(const Enumeration& e);
SignedWeightMultiset epunct_class(const Enumeration& e);
// Requires in_flag_fiber(lambda, sigma).
SignedWeightMultiset fiber_tangent_class(const Enumeration& e, const CosetRep& sigma);
SignedWeightMultiset fiber_tangent_class_direct(const Enumeration& e, const CosetRep& sigma);

struct FixedRanks {
  int tangent = 0;      // sum of W_T over the top layer
  int obstruction = 0;  // sum of W_B over the top layer
};
// Zero-weight counts of the full tangent and obstruction classes.
FixedRanks fixed_ranks(const Enumeration& e);
int tangent_fixed_rank_at(const Enumeration& e, const LatticePoint& u);
int obstruction_fixed_rank_at(const Enumeration& e, const LatticePoint& u);

// Product over nonzero weights w of w(x)^mult in the given namespace.
FactoredRational euler_class(const SignedWeightMultiset& m, Namespace ns = Namespace::s);
// prod_{j <= d-1} prod_{i : w(i) > w(j)} (s_sigma(i) - s_sigma(j)).
FactoredRational flag_tangent_euler(const CosetRep& sigma, int n, const std::vector<int>& hat_dims);

}  // namespace nahilb
