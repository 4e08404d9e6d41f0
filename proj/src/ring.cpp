#include "sigmastab/ring.hpp"

namespace sigmastab {

std::string Ring::str() const {
  switch (kind) {
    case Kind::Z:
      return "Z";
    case Kind::Q:
      return "Q";
    case Kind::Fp:
      return "F" + std::to_string(p);
  }
  return "?";
}

std::optional<Ring> Ring::parse(const std::string& s) {
  if (s == "Z") return ZZ();
  if (s == "Q") return QQ();
  std::string rest;
  if (s.size() > 1 && s[0] == 'F')
    rest = s.substr(1);
  else if (s.rfind("Fp:", 0) == 0)
    rest = s.substr(3);
  else
    return std::nullopt;
  if (rest.rfind("p:", 0) == 0) rest = rest.substr(2);
  try {
    long p = std::stol(rest);
    if (p < 2) return std::nullopt;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) return std::nullopt;
    return GF(p);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace sigmastab
