#include "skel/field.hpp"

namespace skel {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldConfig FieldConfig::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("field characteristic must be a prime below 2^31, got " +
                            std::to_string(p));
  }
  FieldConfig f;
  f.kind = Kind::Prime;
  f.p = p;
  return f;
}

FieldConfig FieldConfig::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0 || text.rfind("Fp:", 0) == 0) {
    try {
      return prime(static_cast<std::uint32_t>(std::stoul(text.substr(3))));
    } catch (const std::logic_error&) {
      throw PreconditionError("cannot parse field characteristic in '" + text + "'");
    }
  }
  throw PreconditionError("unknown field '" + text + "' (expected q or fp:P)");
}

std::string FieldConfig::name() const {
  return kind == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p);
}

}  // namespace skel
