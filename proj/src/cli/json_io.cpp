#include "nahilb/json_io.hpp"

#include <limits>

#include "nahilb/error.hpp"

namespace nahilb {

namespace {

const Namespace kNamespaces[] = {Namespace::s, Namespace::theta, Namespace::z};

Json encode_integer(const Integer& c) {
  if (c.fits_slong_p()) return Json(c.get_si());
  return Json(c.get_str());
}

Integer decode_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer c;
    if (c.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::InvalidInput, "bad integer '" + j.get<std::string>() + "'");
    return c;
  }
  throw Error(ErrorKind::InvalidInput, "expected an integer");
}

std::vector<int> decode_int_vector(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorKind::InvalidInput, "expected an integer");
    out.push_back(x.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json encode(const Rational& value) { return value.get_str(); }

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "expected a rational");
}

Json encode(const LinearForm& form) {
  Json out = Json::object();
  for (Namespace ns : kNamespaces) {
    int top = 0;
    for (const auto& [v, c] : form.terms())
      if (v.ns == ns) top = std::max(top, v.index);
    Json arr = Json::array();
    for (int i = 1; i <= top; ++i) arr.push_back(encode_integer(form.coefficient({ns, i})));
    out[std::string(namespace_name(ns))] = arr;
  }
  return out;
}

LinearForm decode_linear_form(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "linear form must be an object");
  LinearForm form;
  for (Namespace ns : kNamespaces) {
    const std::string key(namespace_name(ns));
    if (!j.contains(key)) continue;
    const Json& arr = j.at(key);
    if (!arr.is_array()) throw Error(ErrorKind::InvalidInput, "coefficients must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) form += LinearForm::variable({ns, static_cast<int>(i) + 1}, decode_integer(arr[i]));
  }
  return form;
}

Json encode(const SparsePolynomial& poly) {
  Json out = Json::array();
  for (const auto& [m, c] : poly.terms()) {
    Json exps = Json::object();
    for (const auto& [v, e] : m.powers()) exps[to_string(v)] = e;
    out.push_back({{"coeff", encode(c)}, {"exps", exps}});
  }
  return out;
}

SparsePolynomial decode_polynomial(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "polynomial must be an array of terms");
  SparsePolynomial p;
  for (const auto& term : j) {
    std::vector<Monomial::Power> powers;
    for (const auto& [name, e] : field(term, "exps").items()) {
      if (!e.is_number_integer() || e.get<int>() < 0) throw Error(ErrorKind::InvalidInput, "exponents must be nonnegative integers");
      powers.emplace_back(parse_variable(name), e.get<int>());
    }
    p.add_term(Monomial(std::move(powers)), decode_rational(field(term, "coeff")));
  }
  return p;
}

Json encode(const FactoredRational& value) {
  Json factors = Json::array();
  for (const auto& [form, e] : value.factors()) factors.push_back(Json::array({encode(form), e}));
  return {{"scalar", encode(value.scalar())}, {"numerator", encode(value.numerator())}, {"factors", factors}};
}

FactoredRational decode_factored(const Json& j) {
  FactoredRational::FactorMap factors;
  for (const auto& pair : field(j, "factors")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[1].is_number_integer())
      throw Error(ErrorKind::InvalidInput, "factor must be [form, exponent]");
    LinearForm form = decode_linear_form(pair[0]);
    if (form.is_zero()) throw Error(ErrorKind::InvalidInput, "zero factor");
    factors[form] += pair[1].get<int>();
  }
  return FactoredRational::from_parts(decode_rational(field(j, "scalar")), decode_polynomial(field(j, "numerator")), factors);
}

Json encode(const Partition& p) {
  Json out = Json::array();
  for (const auto& u : p.points) out.push_back(u);
  return out;
}

Partition decode_partition(const Json& j, int n) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "partition must be an array of points");
  std::vector<LatticePoint> points;
  for (const auto& u : j) points.push_back(decode_int_vector(u));
  return make_partition(n, std::move(points));
}

Json encode(const NestedPartition& lambda) {
  Json layers = Json::array();
  for (const auto& p : lambda.layers) layers.push_back(encode(p));
  return {{"n", lambda.n}, {"dims", lambda.dims}, {"layers", layers}};
}

NestedPartition decode_nested(const Json& j) {
  const int n = field(j, "n").get<int>();
  std::vector<Partition> layers;
  for (const auto& layer : field(j, "layers")) layers.push_back(decode_partition(layer, n));
  return make_nested(n, decode_int_vector(field(j, "dims")), std::move(layers));
}

Json encode(const Enumeration& e) { return {{"n", e.n}, {"dims", e.dims}, {"order", e.order}, {"level", e.level}}; }

Enumeration decode_enumeration(const Json& j) {
  Enumeration e{field(j, "n").get<int>(), decode_int_vector(field(j, "dims")), {}, {}};
  for (const auto& u : field(j, "order")) e.order.push_back(decode_int_vector(u));
  Enumeration checked = make_enumeration(layers_of(e), e.order);
  if (j.contains("level") && decode_int_vector(j.at("level")) != checked.level)
    throw Error(ErrorKind::InvalidInput, "levels disagree with dims");
  return checked;
}

Json encode(const SignedWeightMultiset& m) {
  Json entries = Json::array();
  for (const auto& [w, mult] : m.entries()) entries.push_back({{"weight", w}, {"mult", mult}});
  return {{"n", m.n()}, {"entries", entries}};
}

SignedWeightMultiset decode_weights(const Json& j) {
  SignedWeightMultiset m(field(j, "n").get<int>());
  for (const auto& entry : field(j, "entries")) m.add(decode_int_vector(field(entry, "weight")), field(entry, "mult").get<int>());
  return m;
}

Json encode(const CosetRep& sigma) { return sigma.images; }

CosetRep decode_coset(const Json& j) { return CosetRep{decode_int_vector(j)}; }

Json encode(const ResidueForm& f) {
  Json out = encode(f.to_factored());
  out["z_count"] = f.z_count();
  return out;
}

ResidueForm decode_residue_form(const Json& j) { return ResidueForm::from_factored(decode_factored(j), field(j, "z_count").get<int>()); }

Json encode(const IntegralResult& result, bool expand) {
  Json value = {{"text", result.value.to_string()}, {"factored", encode(result.value)}};
  if (expand && !result.value.has_denominator()) value["expanded"] = encode(result.value.expand());
  return {{"space", to_string(result.space)},
          {"method", to_string(result.method)},
          {"vdim", result.vdim},
          {"value", value},
          {"warnings", result.warnings}};
}

IntegralResult decode_integral_result(const Json& j) {
  IntegralResult r;
  r.space = parse_space(field(j, "space").get<std::string>());
  r.method = parse_method(field(j, "method").get<std::string>());
  r.vdim = field(j, "vdim").get<int>();
  r.value = decode_factored(field(field(j, "value"), "factored"));
  if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

}  // namespace nahilb
