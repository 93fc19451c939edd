#include "nahilb/variable.hpp"

#include <charconv>

#include "nahilb/error.hpp"

namespace nahilb {

std::string_view namespace_name(Namespace ns) {
  switch (ns) {
    case Namespace::s: return "s";
    case Namespace::theta: return "theta";
    case Namespace::z: return "z";
  }
  return "?";
}

std::string to_string(VariableId v) { return std::string(namespace_name(v.ns)) + std::to_string(v.index); }

VariableId parse_variable(std::string_view text) {
  auto split = text.find_first_of("0123456789");
  if (split == std::string_view::npos || split == 0) throw Error(ErrorKind::InvalidInput, "bad variable '" + std::string(text) + "'");
  std::string_view name = text.substr(0, split);
  int index = 0;
  auto [ptr, ec] = std::from_chars(text.data() + split, text.data() + text.size(), index);
  if (ec != std::errc() || ptr != text.data() + text.size() || index < 1)
    throw Error(ErrorKind::InvalidInput, "bad variable index in '" + std::string(text) + "'");
  if (name == "s") return s_var(index);
  if (name == "theta") return theta_var(index);
  if (name == "z" || name == "eta") return z_var(index);
  throw Error(ErrorKind::InvalidInput, "unknown variable namespace '" + std::string(name) + "'");
}

}  // namespace nahilb
