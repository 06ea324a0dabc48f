#include "tropic/scalar.hpp"

#include <stdexcept>

namespace tropic {

const Rat& Scalar::rat() const {
  if (!finite_) throw std::logic_error("Scalar::rat() on bottom");
  return value_;
}

Scalar Scalar::inverse() const {
  if (!finite_) throw std::logic_error("Scalar::inverse() on bottom");
  return Scalar(Rat(-value_));
}

std::string Scalar::str() const {
  if (!finite_) return "-inf";
  return format_rat(value_);
}

std::optional<Scalar> Scalar::parse(const std::string& token) {
  if (token == "-inf") return bottom();
  auto q = parse_rat(token);
  if (!q) return std::nullopt;
  return Scalar(*q);
}

}  // namespace tropic
