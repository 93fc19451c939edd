#include "nahilb/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "nahilb/error.hpp"

namespace nahilb {

namespace {

constexpr int kMaxExponent = 255;

bool term_less(const SparsePolynomial::Term& a, const SparsePolynomial::Term& b) { return GrLexGreater{}(a.first, b.first); }

// Sorted, merged, zero-free.
void canonicalize_terms(std::vector<SparsePolynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = std::move(terms[i].second);
    while (j < terms.size() && terms[j].first == terms[i].first) sum += terms[j++].second;
    if (sum != 0) {
      if (out != i) terms[out].first = terms[i].first;
      terms[out].second = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<SparsePolynomial::Term> drain(Accumulator& acc) {
  std::vector<SparsePolynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, std::move(c));
  std::sort(terms.begin(), terms.end(), term_less);
  return terms;
}

}  // namespace

int Monomial::slot(VariableId v) {
  int limit = v.ns == Namespace::s ? kSlotsS : v.ns == Namespace::theta ? kSlotsTheta : kSlotsZ;
  if (v.index < 1 || v.index > limit)
    throw Error(ErrorKind::InvalidInput, "variable " + to_string(v) + " is outside the supported index range");
  int base = v.ns == Namespace::s ? 0 : v.ns == Namespace::theta ? kSlotsS : kSlotsS + kSlotsTheta;
  return base + v.index - 1;
}

VariableId Monomial::variable_at(int slot) {
  if (slot < kSlotsS) return s_var(slot + 1);
  if (slot < kSlotsS + kSlotsTheta) return theta_var(slot - kSlotsS + 1);
  return z_var(slot - kSlotsS - kSlotsTheta + 1);
}

Monomial::Monomial(const std::vector<Power>& powers) {
  exps_.fill(0);
  for (const auto& [v, e] : powers) {
    if (e < 0) throw Error(ErrorKind::InvalidInput, "negative exponent in monomial");
    int total = exps_[static_cast<std::size_t>(slot(v))] + e;
    if (total > kMaxExponent) throw Error(ErrorKind::InvalidInput, "exponent too large");
    exps_[static_cast<std::size_t>(slot(v))] = static_cast<std::uint8_t>(total);
    degree_ += e;
  }
}

Monomial Monomial::variable(VariableId v, int exponent) { return Monomial({{v, exponent}}); }

std::vector<Monomial::Power> Monomial::powers() const {
  std::vector<Power> out;
  for (int i = 0; i < kSlots; ++i)
    if (exps_[static_cast<std::size_t>(i)] != 0) out.emplace_back(variable_at(i), exps_[static_cast<std::size_t>(i)]);
  return out;
}

Monomial Monomial::without(VariableId v) const {
  Monomial m = *this;
  auto& e = m.exps_[static_cast<std::size_t>(slot(v))];
  m.degree_ -= e;
  e = 0;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.degree_ = a.degree_ + b.degree_;
  if (m.degree_ <= kMaxExponent) {
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] + b.exps_[i]);
    return m;
  }
  for (std::size_t i = 0; i < m.exps_.size(); ++i) {
    int e = a.exps_[i] + b.exps_[i];
    if (e > kMaxExponent) throw Error(ErrorKind::InvalidInput, "exponent too large");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  const auto& e = m.exponents();
  for (std::size_t i = 0; i < e.size(); i += 8) {
    std::uint64_t word;
    std::memcpy(&word, e.data() + i, 8);
    h = (h ^ word) * 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

SparsePolynomial::SparsePolynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace_back(Monomial(), constant);
}

SparsePolynomial SparsePolynomial::variable(VariableId v) { return monomial(Monomial::variable(v), 1); }

SparsePolynomial SparsePolynomial::monomial(const Monomial& m, const Rational& c) {
  SparsePolynomial p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

SparsePolynomial SparsePolynomial::from_linear_form(const LinearForm& form) {
  std::vector<Term> terms;
  for (const auto& [v, c] : form.terms()) terms.emplace_back(Monomial::variable(v), Rational(c));
  return from_terms(std::move(terms));
}

SparsePolynomial SparsePolynomial::from_terms(std::vector<Term> terms) {
  canonicalize_terms(terms);
  SparsePolynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool SparsePolynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one()); }

Rational SparsePolynomial::constant_term() const {
  // The constant term sorts last.
  return (!terms_.empty() && terms_.back().first.is_one()) ? terms_.back().second : Rational(0);
}

Rational SparsePolynomial::leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.front().second; }

std::set<VariableId> SparsePolynomial::variables() const {
  std::array<bool, Monomial::kSlots> seen{};
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < Monomial::kSlots; ++i)
      if (m.exponents()[static_cast<std::size_t>(i)] != 0) seen[static_cast<std::size_t>(i)] = true;
  std::set<VariableId> vars;
  for (int i = 0; i < Monomial::kSlots; ++i)
    if (seen[static_cast<std::size_t>(i)]) vars.insert(Monomial::variable_at(i));
  return vars;
}

bool SparsePolynomial::contains(Namespace ns) const {
  for (VariableId v : variables())
    if (v.ns == ns) return true;
  return false;
}

bool SparsePolynomial::contains(VariableId v) const { return degree_in(v) > 0; }

int SparsePolynomial::degree_in(VariableId v) const {
  const auto s = static_cast<std::size_t>(Monomial::slot(v));
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exponents()[s]));
  return d;
}

int SparsePolynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

std::optional<int> SparsePolynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().first.degree();
  if (terms_.back().first.degree() != d) return std::nullopt;  // sorted by degree
  return d;
}

std::vector<SparsePolynomial> SparsePolynomial::coefficients_in(VariableId v) const {
  // Dropping v keeps each bucket in order: all its monomials share the v exponent.
  const auto s = static_cast<std::size_t>(Monomial::slot(v));
  std::vector<SparsePolynomial> out(static_cast<std::size_t>(degree_in(v)) + 1);
  for (const auto& [m, c] : terms_) out[m.exponents()[s]].terms_.emplace_back(m.without(v), c);
  return out;
}

Rational SparsePolynomial::evaluate(const Assignment& values) const {
  std::array<const Rational*, Monomial::kSlots> lookup{};
  for (VariableId v : variables()) {
    auto it = values.find(v);
    if (it == values.end()) throw Error(ErrorKind::MissingVariable, "no value for " + nahilb::to_string(v));
    lookup[static_cast<std::size_t>(Monomial::slot(v))] = &it->second;
  }
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < lookup.size(); ++i)
      if (m.exponents()[i] != 0) t *= rational_pow(*lookup[i], m.exponents()[i]);
    sum += t;
  }
  return sum;
}

SparsePolynomial SparsePolynomial::substitute(const std::map<VariableId, SparsePolynomial>& replacements) const {
  std::vector<std::pair<std::size_t, const SparsePolynomial*>> targets;
  for (const auto& [v, p] : replacements) targets.emplace_back(static_cast<std::size_t>(Monomial::slot(v)), &p);
  std::vector<std::vector<SparsePolynomial>> powers(targets.size());
  auto power_of = [&](std::size_t t, int e) -> const SparsePolynomial& {
    auto& cache = powers[t];
    if (cache.empty()) cache.emplace_back(Rational(1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *targets[t].second);
    return cache[static_cast<std::size_t>(e)];
  };
  Accumulator acc;
  for (const auto& [m, c] : terms_) {
    Monomial kept = m;
    SparsePolynomial factor(c);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      int e = m.exponents()[targets[t].first];
      if (e == 0) continue;
      kept = kept.without(Monomial::variable_at(static_cast<int>(targets[t].first)));
      factor *= power_of(t, e);
    }
    for (const auto& [fm, fc] : factor.terms_) acc[kept * fm] += fc;
  }
  SparsePolynomial result;
  result.terms_ = drain(acc);
  return result;
}

SparsePolynomial SparsePolynomial::substitute(VariableId v, const SparsePolynomial& replacement) const {
  return substitute(std::map<VariableId, SparsePolynomial>{{v, replacement}});
}

SparsePolynomial SparsePolynomial::pow(unsigned exponent) const {
  SparsePolynomial result(Rational(1));
  SparsePolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::optional<SparsePolynomial> SparsePolynomial::divide_exact(const LinearForm& form) const {
  if (form.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero form");
  if (is_zero()) return SparsePolynomial();
  // form = c*v + rest with v its smallest variable; divide as a polynomial in v.
  const VariableId v = form.terms().front().first;
  const Rational inv_c = Rational(1) / Rational(form.terms().front().second);
  const SparsePolynomial rest = from_linear_form(form.without(v));
  std::vector<SparsePolynomial> coeffs = coefficients_in(v);
  const std::size_t top = coeffs.size() - 1;
  if (top == 0) return std::nullopt;  // form*q always involves v
  std::vector<SparsePolynomial> quotient(top);
  SparsePolynomial carry;  // rest * q_k from the previous step
  for (std::size_t k = top; k >= 1; --k) {
    quotient[k - 1] = (coeffs[k] - carry) * inv_c;
    carry = rest * quotient[k - 1];
  }
  if (!(coeffs[0] - carry).is_zero()) return std::nullopt;
  std::vector<Term> terms;
  for (std::size_t k = 0; k < top; ++k) {
    const Monomial shift = Monomial::variable(v, static_cast<int>(k));
    for (const auto& [m, qc] : quotient[k].terms_) terms.emplace_back(m * shift, qc);
  }
  return from_terms(std::move(terms));
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) { return GrLexGreater{}(t.first, key); });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {m, c});
  }
}

namespace {

// Linear merge of two sorted term lists with sign on the second.
std::vector<SparsePolynomial::Term> merge(const std::vector<SparsePolynomial::Term>& a, const std::vector<SparsePolynomial::Term>& b,
                                          bool negate) {
  std::vector<SparsePolynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  GrLexGreater greater;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, negate ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = negate ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = terms_.empty() ? other.terms_ : merge(terms_, other.terms_, false);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial result;
  if (a.terms_.empty() || b.terms_.empty()) return result;
  const SparsePolynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const SparsePolynomial& large = &small == &a ? b : a;
  if (small.terms_.size() == 1) {
    // A monomial multiple keeps the order.
    const auto& [m, c] = small.terms_.front();
    result.terms_.reserve(large.terms_.size());
    for (const auto& [lm, lc] : large.terms_) result.terms_.emplace_back(m * lm, c * lc);
    return result;
  }
  if (small.terms_.size() <= 8) {
    // Each shifted copy of the large factor stays sorted, so merging is enough.
    for (const auto& [m, c] : small.terms_) {
      std::vector<SparsePolynomial::Term> shifted;
      shifted.reserve(large.terms_.size());
      for (const auto& [lm, lc] : large.terms_) shifted.emplace_back(m * lm, c * lc);
      result.terms_ = result.terms_.empty() ? std::move(shifted) : merge(result.terms_, shifted, false);
    }
    return result;
  }
  Accumulator acc;
  acc.reserve(large.terms_.size() * 2);
  Rational product;
  for (const auto& [sm, sc] : small.terms_)
    for (const auto& [lm, lc] : large.terms_) {
      mpq_mul(product.get_mpq_t(), sc.get_mpq_t(), lc.get_mpq_t());
      acc[sm * lm] += product;
    }
  result.terms_ = drain(acc);
  return result;
}

SparsePolynomial& SparsePolynomial::operator*=(const SparsePolynomial& other) { return *this = *this * other; }

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  if (c == 1) return *this;
  for (auto& term : terms_) term.second *= c;
  return *this;
}

SparsePolynomial SparsePolynomial::operator-() const { return SparsePolynomial(*this) *= Rational(-1); }

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      out << mag.get_str();
      wrote = true;
    }
    for (const auto& [v, e] : m.powers()) {
      if (wrote) out << "*";
      out << nahilb::to_string(v);
      if (e != 1) out << "^" << e;
      wrote = true;
    }
    first = false;
  }
  return out.str();
}

}  // namespace nahilb
