#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace tropic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Renders a rational in canonical form: "5", "-3" or "2/3".
std::string format_rat(const Rat& q);

/// Parses "5", "-3", "2/3", "-7/4". Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& token);

/// Least common multiple of the denominators of a sequence of rationals.
class DenomLcm {
 public:
  void add(const Rat& q);
  const Int& value() const { return lcm_; }

 private:
  Int lcm_ = 1;
};

/// Best rational approximation of q with denominator at most max_den
/// (nearest such rational; exact when q itself has a small denominator).
Rat round_to_denominator(const Rat& q, std::int64_t max_den);

}  // namespace tropic
