#include "nahilb/linear_form.hpp"

#include <algorithm>
#include <sstream>

#include "nahilb/error.hpp"

namespace nahilb {

LinearForm::LinearForm(std::initializer_list<std::pair<VariableId, long>> terms) {
  for (const auto& [v, c] : terms) add_term(v, Integer(c));
}

LinearForm LinearForm::variable(VariableId v, const Integer& coefficient) {
  LinearForm f;
  f.add_term(v, coefficient);
  return f;
}

void LinearForm::add_term(VariableId v, const Integer& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v, [](const Term& t, VariableId key) { return t.first < key; });
  if (it != terms_.end() && it->first == v) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {v, c});
  }
}

Integer LinearForm::coefficient(VariableId v) const {
  for (const auto& [var, c] : terms_)
    if (var == v) return c;
  return 0;
}

bool LinearForm::contains(Namespace ns) const {
  return std::any_of(terms_.begin(), terms_.end(), [ns](const Term& t) { return t.first.ns == ns; });
}

std::optional<int> LinearForm::highest_z() const {
  std::optional<int> best;
  for (const auto& [v, c] : terms_)
    if (v.ns == Namespace::z) best = v.index;  // sorted, so the last z wins
  return best;
}

std::pair<Integer, LinearForm> LinearForm::primitive() const {
  if (terms_.empty()) return {Integer(0), LinearForm()};
  Integer g = 0;
  for (const auto& [v, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (terms_.front().second < 0) g = -g;
  LinearForm p = *this;
  for (auto& [v, c] : p.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return {g, p};
}

Rational LinearForm::evaluate(const Assignment& values) const {
  Rational sum = 0;
  for (const auto& [v, c] : terms_) {
    auto it = values.find(v);
    if (it == values.end()) throw Error(ErrorKind::MissingVariable, "no value for " + nahilb::to_string(v));
    sum += c * it->second;
  }
  return sum;
}

LinearForm LinearForm::without(VariableId v) const {
  LinearForm r = *this;
  std::erase_if(r.terms_, [v](const Term& t) { return t.first == v; });
  return r;
}

LinearForm LinearForm::substitute(VariableId v, const LinearForm& replacement) const {
  Integer c = coefficient(v);
  if (c == 0) return *this;
  return without(v) + replacement * c;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  for (const auto& [v, c] : other.terms_) add_term(v, c);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  for (const auto& [v, c] : other.terms_) add_term(v, -c);
  return *this;
}

LinearForm& LinearForm::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= c;
  return *this;
}

LinearForm LinearForm::operator-() const { return LinearForm(*this) *= Integer(-1); }

bool operator<(const LinearForm& a, const LinearForm& b) {
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                      [](const LinearForm::Term& x, const LinearForm::Term& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

std::string LinearForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << nahilb::to_string(v);
    first = false;
  }
  return out.str();
}

LinearForm linear_form_of(std::span<const int> u, Namespace ns) {
  LinearForm f;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) f += LinearForm::variable({ns, static_cast<int>(i) + 1}, u[i]);
  return f;
}

}  // namespace nahilb
