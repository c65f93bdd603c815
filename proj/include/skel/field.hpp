#ifndef SKEL_FIELD_HPP
#define SKEL_FIELD_HPP

#include <cstdint>
#include <string>

#include "skel/errors.hpp"

namespace skel {

/// Coefficient field for the homology oracle. Arithmetic is exact in both
/// cases; the rationals are the authoritative default, a prime field is the
/// fast path. Betti numbers of monomial ideals may depend on the
/// characteristic, so the field is carried in every report.
struct FieldConfig {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;  // set iff kind == Prime; a prime below 2^31

  static FieldConfig rationals() { return {}; }
  static FieldConfig prime(std::uint32_t p);
  static FieldConfig parse(const std::string& text);  // "q" or "fp:P"
  std::string name() const;                           // "Q" or "Fp:P"

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

}  // namespace skel

#endif
