#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nahilb/linear_form.hpp"
#include "nahilb/rational.hpp"
#include "nahilb/variable.hpp"

namespace nahilb {

// Exponents packed by variable slot; slot order is the VariableId order, so
// comparing the byte arrays compares exponent vectors lexicographically.
class Monomial {
 public:
  using Power = std::pair<VariableId, int>;
  static constexpr int kSlotsS = 24;
  static constexpr int kSlotsTheta = 8;
  static constexpr int kSlotsZ = 16;
  static constexpr int kSlots = kSlotsS + kSlotsTheta + kSlotsZ;

  Monomial() { exps_.fill(0); }
  explicit Monomial(const std::vector<Power>& powers);
  static Monomial variable(VariableId v, int exponent = 1);

  std::vector<Power> powers() const;
  int degree() const { return degree_; }
  int exponent(VariableId v) const { return exps_[static_cast<std::size_t>(slot(v))]; }
  bool is_one() const { return degree_ == 0; }
  Monomial without(VariableId v) const;
  const std::array<std::uint8_t, kSlots>& exponents() const { return exps_; }

  static int slot(VariableId v);
  static VariableId variable_at(int slot);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::array<std::uint8_t, kSlots> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Graded lexicographic order over the VariableId order; "greater" sorts the
// leading term first.
struct GrLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return std::memcmp(a.exponents().data(), b.exponents().data(), Monomial::kSlots) > 0;
  }
};

class SparsePolynomial {
 public:
  using Term = std::pair<Monomial, Rational>;
  // Sorted by GrLexGreater, distinct monomials, nonzero coefficients.
  using TermMap = std::vector<Term>;

  SparsePolynomial() = default;
  SparsePolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  static SparsePolynomial variable(VariableId v);
  static SparsePolynomial monomial(const Monomial& m, const Rational& c);
  static SparsePolynomial from_linear_form(const LinearForm& form);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational leading_coefficient() const;
  std::size_t size() const { return terms_.size(); }

  std::set<VariableId> variables() const;
  bool contains(Namespace ns) const;
  bool contains(VariableId v) const;
  int degree_in(VariableId v) const;
  int total_degree() const;
  // nullopt for the zero polynomial or a mixed-degree polynomial.
  std::optional<int> homogeneous_degree() const;
  // result[k] is the coefficient of v^k.
  std::vector<SparsePolynomial> coefficients_in(VariableId v) const;

  Rational evaluate(const Assignment& values) const;
  SparsePolynomial substitute(const std::map<VariableId, SparsePolynomial>& replacements) const;
  SparsePolynomial substitute(VariableId v, const SparsePolynomial& replacement) const;
  SparsePolynomial pow(unsigned exponent) const;
  // Exact quotient by a nonzero linear form, or nullopt if it does not divide.
  std::optional<SparsePolynomial> divide_exact(const LinearForm& form) const;

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Rational& c);
  // Linear-time insertion; build large polynomials with from_terms.
  void add_term(const Monomial& m, const Rational& c);
  // Sorts and merges arbitrary terms.
  static SparsePolynomial from_terms(std::vector<Term> terms);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
  SparsePolynomial operator-() const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace nahilb
