#include "nahilb/rational.hpp"

#include "nahilb/error.hpp"

namespace nahilb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingVariable: return "MissingVariable";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotExpandable: return "NotExpandable";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotFullFlag: return "NotFullFlag";
    case ErrorKind::NotBisymmetric: return "NotBisymmetric";
    case ErrorKind::NotNilfil: return "NotNilfil";
    case ErrorKind::NotInFiber: return "NotInFiber";
    case ErrorKind::NonConstantVdim: return "NonConstantVdim";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::NonElimination: return "NonElimination";
    case ErrorKind::NotImplemented: return "NotImplemented";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string str(text);
  if (str.empty()) throw Error(ErrorKind::InvalidInput, "empty rational literal");
  if (str.front() == '+') str.erase(0, 1);
  Rational value;
  if (value.set_str(str, 10) != 0) throw Error(ErrorKind::InvalidInput, "bad rational literal '" + std::string(text) + "'");
  if (value.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const Integer& value) { return value.get_str(10); }

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational result(1);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  result.canonicalize();
  return result;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // binom(-m, k) = (-1)^k binom(m + k - 1, k)
  Integer r = binomial(-n + k - 1, k);
  return (k % 2 == 0) ? r : Integer(-r);
}

}  // namespace nahilb
