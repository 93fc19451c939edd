#include "nahilb/class_spec.hpp"

#include <cctype>
#include <string>

#include "nahilb/error.hpp"

namespace nahilb {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int q, int d) : q_(q), d_(d) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
  }

  SparsePolynomial parse() {
    SparsePolynomial p = expr();
    if (pos_ != text_.size()) fail("unexpected '" + text_.substr(pos_, 1) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::InvalidInput, "class spec at offset " + std::to_string(pos_) + ": " + message);
  }

  bool eat(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer literal too large");
    return std::stol(text_.substr(start, pos_ - start));
  }

  SparsePolynomial expr() {
    SparsePolynomial p = term();
    while (true) {
      if (eat("+"))
        p += term();
      else if (eat("-"))
        p -= term();
      else
        return p;
    }
  }

  SparsePolynomial term() {
    SparsePolynomial p = unary();
    while (eat("*")) p *= unary();
    return p;
  }

  // Negation binds looser than '^': -x^2 = -(x^2).
  SparsePolynomial unary() {
    if (eat("-")) return -unary();
    return power();
  }

  SparsePolynomial power() {
    SparsePolynomial p = atom();
    while (eat("^")) p = p.pow(static_cast<unsigned>(integer()));
    return p;
  }

  SparsePolynomial atom() {
    if (eat("(")) {
      SparsePolynomial p = expr();
      if (!eat(")")) fail("expected ')'");
      return p;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return SparsePolynomial(Rational(integer()));
    if (eat("theta")) {
      long i = integer();
      if (i < 1 || i > q_) fail("theta index out of range");
      return SparsePolynomial::variable(theta_var(static_cast<int>(i)));
    }
    if (eat("eta")) {
      long j = integer();
      if (j < 0 || j > d_ - 1) fail("eta index out of range");
      return j == 0 ? SparsePolynomial() : SparsePolynomial::variable(z_var(static_cast<int>(j)));
    }
    if (eat("c")) {
      long k = integer();
      bool dual = eat("^dual") || eat("(dual)");
      return chern_taut(static_cast<int>(k), q_, d_, dual).poly();
    }
    fail("expected a class atom");
  }

  std::string text_;
  std::size_t pos_ = 0;
  int q_;
  int d_;
};

}  // namespace

TautClass parse_class_spec(std::string_view text, int q, int d) {
  if (q < 0 || d < 1) throw Error(ErrorKind::InvalidInput, "class spec needs q >= 0 and d >= 1");
  return TautClass(Parser(text, q, d).parse(), q, d);
}

int max_theta_index(std::string_view text) {
  int best = 0;
  for (std::size_t pos = text.find("theta"); pos != std::string_view::npos; pos = text.find("theta", pos + 1)) {
    std::size_t i = pos + 5;
    int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) value = value * 10 + (text[i++] - '0');
    best = std::max(best, value);
  }
  return best;
}

}  // namespace nahilb
