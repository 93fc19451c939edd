#include "nahilb/factored_rational.hpp"

#include <sstream>
#include <vector>

#include "nahilb/error.hpp"

namespace nahilb {

namespace {

SparsePolynomial form_power(const LinearForm& form, int exponent) {
  return SparsePolynomial::from_linear_form(form).pow(static_cast<unsigned>(exponent));
}

}  // namespace

FactoredRational FactoredRational::constant(const Rational& c) {
  FactoredRational r;
  r.scalar_ = c;
  r.numerator_ = SparsePolynomial(Rational(1));
  r.normalize();
  return r;
}

FactoredRational FactoredRational::from_polynomial(const SparsePolynomial& p) { return from_parts(1, p, {}); }

FactoredRational FactoredRational::from_form(const LinearForm& form, int exponent) {
  FactoredRational r = one();
  r.multiply_form(form, exponent);
  return r;
}

FactoredRational FactoredRational::from_parts(const Rational& scalar, const SparsePolynomial& numerator, const FactorMap& factors) {
  FactoredRational r;
  r.scalar_ = scalar;
  r.numerator_ = numerator;
  for (const auto& [form, e] : factors) {
    r.multiply_form(form, e);
    if (r.scalar_ == 0) break;
  }
  r.normalize();
  return r;
}

void FactoredRational::normalize() {
  if (scalar_ == 0 || numerator_.is_zero()) {
    scalar_ = 0;
    numerator_ = SparsePolynomial();
    factors_.clear();
    return;
  }
  std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
  Rational lead = numerator_.leading_coefficient();
  if (lead != 1) {
    scalar_ *= lead;
    numerator_ *= Rational(1) / lead;
  }
  // A monomial numerator is stored as variable factors.
  if (numerator_.size() == 1 && !numerator_.is_constant()) {
    const Monomial m = numerator_.terms().begin()->first;
    numerator_ = SparsePolynomial(Rational(1));
    for (const auto& [v, e] : m.powers()) {
      int& slot = factors_[LinearForm::variable(v)];
      slot += e;
    }
    std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
  }
}

bool FactoredRational::has_denominator() const {
  for (const auto& [form, e] : factors_)
    if (e < 0) return true;
  return false;
}

FactoredRational& FactoredRational::multiply_form(const LinearForm& form, int exponent) {
  if (exponent == 0 || scalar_ == 0) {
    if (exponent < 0 && form.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero form");
    return *this;
  }
  if (form.is_zero()) {
    if (exponent < 0) throw Error(ErrorKind::DivisionByZero, "division by the zero form");
    *this = FactoredRational();
    return *this;
  }
  auto [content, prim] = form.primitive();
  scalar_ *= rational_pow(Rational(content), exponent);
  int& slot = factors_[prim];
  slot += exponent;
  if (slot == 0) factors_.erase(prim);
  return *this;
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& other) {
  if (is_zero() || other.is_zero()) {
    *this = FactoredRational();
    return *this;
  }
  scalar_ *= other.scalar_;
  if (!other.numerator_.is_constant()) numerator_ *= other.numerator_;
  for (const auto& [form, e] : other.factors_) {
    int& slot = factors_[form];
    slot += e;
  }
  normalize();
  return *this;
}

FactoredRational& FactoredRational::operator*=(const Rational& c) {
  scalar_ *= c;
  normalize();
  return *this;
}

FactoredRational FactoredRational::operator-() const {
  FactoredRational r = *this;
  r.scalar_ = -r.scalar_;
  return r;
}

FactoredRational FactoredRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!numerator_.is_constant()) throw Error(ErrorKind::InvalidInput, "inverse needs a fully factored value");
  FactoredRational r;
  r.scalar_ = Rational(1) / scalar_;
  r.numerator_ = SparsePolynomial(Rational(1));
  for (const auto& [form, e] : factors_) r.factors_[form] = -e;
  return r;
}

FactoredRational FactoredRational::simplify() const {
  if (is_zero()) return *this;
  FactoredRational r = *this;
  for (auto& [form, e] : r.factors_) {
    while (e < 0) {
      auto q = r.numerator_.divide_exact(form);
      if (!q) break;
      r.numerator_ = std::move(*q);
      ++e;
    }
  }
  r.normalize();
  return r;
}

Rational FactoredRational::evaluate(const Assignment& values) const {
  if (is_zero()) return 0;
  Rational result = scalar_ * numerator_.evaluate(values);
  for (const auto& [form, e] : factors_) {
    Rational v = form.evaluate(values);
    if (v == 0 && e < 0) throw Error(ErrorKind::DivisionByZero, "denominator " + form.to_string() + " vanishes");
    result *= rational_pow(v, e);
  }
  return result;
}

SparsePolynomial FactoredRational::expand() const {
  if (has_denominator()) throw Error(ErrorKind::NotExpandable, "value has a denominator: " + to_string());
  return as_fraction().first;
}

std::pair<SparsePolynomial, SparsePolynomial> FactoredRational::as_fraction() const {
  SparsePolynomial num = numerator_ * scalar_;
  SparsePolynomial den(Rational(1));
  for (const auto& [form, e] : factors_) {
    if (e > 0)
      num *= form_power(form, e);
    else
      den *= form_power(form, -e);
  }
  return {num, den};
}

std::optional<int> FactoredRational::homogeneous_degree() const {
  if (is_zero()) return std::nullopt;
  auto d = numerator_.homogeneous_degree();
  if (!d) return std::nullopt;
  int degree = *d;
  for (const auto& [form, e] : factors_) degree += e;
  return degree;
}

FactoredRational FactoredRational::substitute(VariableId v, const LinearForm& replacement) const {
  if (is_zero()) return *this;
  FactoredRational r = from_parts(scalar_, numerator_.substitute(v, SparsePolynomial::from_linear_form(replacement)), {});
  for (const auto& [form, e] : factors_) {
    LinearForm image = form.substitute(v, replacement);
    if (image.is_zero() && e < 0)
      throw Error(ErrorKind::DegenerateRestriction, "denominator " + form.to_string() + " vanishes under the substitution");
    r.multiply_form(image, e);
  }
  r.normalize();
  return r;
}

std::string FactoredRational::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream num;
  std::ostringstream den;
  num << scalar_.get_str();
  if (!numerator_.is_constant()) num << "*(" << numerator_.to_string() << ")";
  bool any_den = false;
  for (const auto& [form, e] : factors_) {
    std::ostringstream piece;
    piece << "(" << form.to_string() << ")";
    if (std::abs(e) != 1) piece << "^" << std::abs(e);
    if (e > 0) {
      num << "*" << piece.str();
    } else {
      den << (any_den ? "*" : "") << piece.str();
      any_den = true;
    }
  }
  if (!any_den) return num.str();
  return num.str() + "/(" + den.str() + ")";
}

namespace {

FactoredRational sum_flat(std::span<const FactoredRational> terms) {
  std::vector<const FactoredRational*> live;
  for (const auto& t : terms)
    if (!t.is_zero()) live.push_back(&t);
  if (live.empty()) return FactoredRational();
  if (live.size() == 1) return live.front()->simplify();

  // Common part: each form at its minimum exponent, absent forms count as 0.
  FactoredRational::FactorMap common;
  for (const auto* t : live)
    for (const auto& [form, e] : t->factors()) common.try_emplace(form, 0);
  for (auto& [form, low] : common) {
    low = 0;
    for (const auto* t : live) {
      auto it = t->factors().find(form);
      low = std::min(low, it == t->factors().end() ? 0 : it->second);
    }
  }
  SparsePolynomial total;
  for (const auto* t : live) {
    SparsePolynomial piece = t->numerator() * t->scalar();
    // One linear factor at a time keeps every product small-by-large.
    for (const auto& [form, low] : common) {
      auto it = t->factors().find(form);
      int e = (it == t->factors().end() ? 0 : it->second) - low;
      if (e == 0) continue;
      const SparsePolynomial linear = SparsePolynomial::from_linear_form(form);
      for (int k = 0; k < e; ++k) piece *= linear;
    }
    total += piece;
  }
  return FactoredRational::from_parts(1, total, common).simplify();
}

}  // namespace

FactoredRational sum_factored(std::span<const FactoredRational> terms) {
  // Pairwise, so shared denominators cancel before the numerators grow.
  if (terms.size() <= 2) return sum_flat(terms);
  std::vector<FactoredRational> level(terms.begin(), terms.end());
  while (level.size() > 1) {
    std::vector<FactoredRational> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i < level.size(); i += 2)
      next.push_back(i + 1 < level.size() ? sum_flat(std::span(level).subspan(i, 2)) : std::move(level[i]));
    level = std::move(next);
  }
  return level.front().simplify();
}

bool equivalent(const FactoredRational& a, const FactoredRational& b) {
  if (a == b) return true;
  FactoredRational terms[] = {a, -b};
  return sum_factored(terms).is_zero();
}

}  // namespace nahilb
