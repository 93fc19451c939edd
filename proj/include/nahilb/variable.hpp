#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "nahilb/rational.hpp"

namespace nahilb {

// s: equivariant torus parameters. theta: line-bundle roots.
// z: residue variables; the tautological roots eta_j share this namespace.
enum class Namespace : std::uint8_t { s = 0, theta = 1, z = 2 };

struct VariableId {
  Namespace ns = Namespace::s;
  int index = 1;  // 1-based

  auto operator<=>(const VariableId&) const = default;
};

constexpr VariableId s_var(int i) { return {Namespace::s, i}; }
constexpr VariableId theta_var(int i) { return {Namespace::theta, i}; }
constexpr VariableId z_var(int i) { return {Namespace::z, i}; }

std::string_view namespace_name(Namespace ns);
std::string to_string(VariableId v);
VariableId parse_variable(std::string_view text);

using Assignment = std::map<VariableId, Rational>;

}  // namespace nahilb
