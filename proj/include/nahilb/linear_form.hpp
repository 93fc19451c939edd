#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nahilb/rational.hpp"
#include "nahilb/variable.hpp"

namespace nahilb {

// Integer linear combination of variables, terms sorted by VariableId with
// no zero coefficients.
class LinearForm {
 public:
  using Term = std::pair<VariableId, Integer>;

  LinearForm() = default;
  LinearForm(std::initializer_list<std::pair<VariableId, long>> terms);

  static LinearForm variable(VariableId v, const Integer& coefficient = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(VariableId v) const;
  bool contains(Namespace ns) const;
  // Largest z index with nonzero coefficient.
  std::optional<int> highest_z() const;

  // this == content * result, result primitive with positive leading coefficient.
  std::pair<Integer, LinearForm> primitive() const;

  Rational evaluate(const Assignment& values) const;
  LinearForm substitute(VariableId v, const LinearForm& replacement) const;
  LinearForm without(VariableId v) const;

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(const Integer& c);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Integer& c) { return a *= c; }
  LinearForm operator-() const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const LinearForm& a, const LinearForm& b);

  std::string to_string() const;

 private:
  void add_term(VariableId v, const Integer& c);
  std::vector<Term> terms_;
};

// u(s) = sum_i u_i * x_i over the given namespace.
LinearForm linear_form_of(std::span<const int> u, Namespace ns = Namespace::s);

}  // namespace nahilb
