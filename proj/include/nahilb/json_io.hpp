#pragma once

#include <json.hpp>

#include "nahilb/factored_rational.hpp"
#include "nahilb/localization.hpp"
#include "nahilb/partition.hpp"
#include "nahilb/residue.hpp"
#include "nahilb/weights.hpp"

namespace nahilb {

using Json = nlohmann::json;

// Every encoder has an inverse decoder; round trips are exact.
Json encode(const Rational& value);
Json encode(const LinearForm& form);
Json encode(const SparsePolynomial& poly);
Json encode(const FactoredRational& value);
Json encode(const Partition& p);
Json encode(const NestedPartition& lambda);
Json encode(const Enumeration& e);
Json encode(const SignedWeightMultiset& m);
Json encode(const CosetRep& sigma);
Json encode(const ResidueForm& f);
Json encode(const IntegralResult& result, bool expand = false);

Rational decode_rational(const Json& j);
LinearForm decode_linear_form(const Json& j);
SparsePolynomial decode_polynomial(const Json& j);
FactoredRational decode_factored(const Json& j);
Partition decode_partition(const Json& j, int n);
NestedPartition decode_nested(const Json& j);
Enumeration decode_enumeration(const Json& j);
SignedWeightMultiset decode_weights(const Json& j);
CosetRep decode_coset(const Json& j);
ResidueForm decode_residue_form(const Json& j);
IntegralResult decode_integral_result(const Json& j);

}  // namespace nahilb
