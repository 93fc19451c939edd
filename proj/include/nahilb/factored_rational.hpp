#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "nahilb/linear_form.hpp"
#include "nahilb/polynomial.hpp"

namespace nahilb {

// scalar * numerator * prod L^e. Keys are primitive forms with positive
// leading coefficient and nonzero exponents. The zero value is scalar 0 with
// an empty numerator and no factors. A nonzero numerator has leading
// coefficient 1.
class FactoredRational {
 public:
  using FactorMap = std::map<LinearForm, int>;

  FactoredRational() = default;  // zero
  static FactoredRational constant(const Rational& c);
  static FactoredRational one() { return constant(1); }
  static FactoredRational from_polynomial(const SparsePolynomial& p);
  static FactoredRational from_form(const LinearForm& form, int exponent = 1);

  const Rational& scalar() const { return scalar_; }
  const SparsePolynomial& numerator() const { return numerator_; }
  const FactorMap& factors() const { return factors_; }
  bool is_zero() const { return scalar_ == 0; }
  bool has_denominator() const;

  // Multiplies by form^exponent; proportional forms merge, the content goes to the scalar.
  FactoredRational& multiply_form(const LinearForm& form, int exponent);
  FactoredRational& operator*=(const FactoredRational& other);
  FactoredRational& operator*=(const Rational& c);
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  FactoredRational operator-() const;
  // Requires a constant numerator.
  FactoredRational inverse() const;

  // Trial division of the numerator by every denominator form.
  FactoredRational simplify() const;
  Rational evaluate(const Assignment& values) const;
  // Throws NotExpandable when a negative exponent remains.
  SparsePolynomial expand() const;
  // Expanded numerator and denominator.
  std::pair<SparsePolynomial, SparsePolynomial> as_fraction() const;
  std::optional<int> homogeneous_degree() const;
  // Substitutes v <- replacement in every factor and in the numerator.
  // Throws DegenerateRestriction when a denominator form vanishes.
  FactoredRational substitute(VariableId v, const LinearForm& replacement) const;

  friend bool operator==(const FactoredRational& a, const FactoredRational& b) {
    return a.scalar_ == b.scalar_ && a.numerator_ == b.numerator_ && a.factors_ == b.factors_;
  }

  std::string to_string() const;

  // Builds from parts and restores the class invariants.
  static FactoredRational from_parts(const Rational& scalar, const SparsePolynomial& numerator, const FactorMap& factors);

 private:
  void normalize();

  Rational scalar_ = 0;
  SparsePolynomial numerator_;
  FactorMap factors_;
};

// Sum over a common factorization, then simplify.
FactoredRational sum_factored(std::span<const FactoredRational> terms);
// Exact equality as rational functions.
bool equivalent(const FactoredRational& a, const FactoredRational& b);

}  // namespace nahilb
