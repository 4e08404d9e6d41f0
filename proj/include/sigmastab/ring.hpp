#pragma once

#include <optional>
#include <string>

#include "sigmastab/int_types.hpp"

namespace sigmastab {

// Coefficient ring for functor and homology computations. Groups are always
// carried as Z-presentations: over F_p the carriers have p*I among their
// relations, over Q torsion is discarded when reading off invariants.
struct Ring {
  enum class Kind { Z, Q, Fp };
  Kind kind = Kind::Z;
  long p = 0;

  static Ring ZZ() { return {Kind::Z, 0}; }
  static Ring QQ() { return {Kind::Q, 0}; }
  static Ring GF(long p) { return {Kind::Fp, p}; }

  bool is_field() const { return kind != Kind::Z; }
  bool operator==(const Ring&) const = default;

  std::string str() const;
  static std::optional<Ring> parse(const std::string& s);
};

}  // namespace sigmastab
