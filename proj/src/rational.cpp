#include "tropic/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tropic {

std::string format_rat(const Rat& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rat> parse_rat(const std::string& token) {
  if (token.empty()) return std::nullopt;
  auto is_int = [](const std::string& s) {
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  auto slash = token.find('/');
  if (slash == std::string::npos) {
    if (!is_int(token)) return std::nullopt;
    return Rat(Int(token));
  }
  std::string num = token.substr(0, slash);
  std::string den = token.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  Int d(den);
  if (d == 0) return std::nullopt;
  return Rat(Int(num), d);
}

void DenomLcm::add(const Rat& q) {
  Int den = boost::multiprecision::denominator(q);
  lcm_ = boost::multiprecision::lcm(lcm_, den);
}

Rat round_to_denominator(const Rat& q, std::int64_t max_den) {
  if (max_den < 1) throw std::invalid_argument("round_to_denominator: max_den < 1");
  if (boost::multiprecision::denominator(q) <= max_den) return q;
  Rat best;
  bool have = false;
  Rat err;
  for (std::int64_t den = 1; den <= max_den; ++den) {
    // nearest integer numerator for this denominator
    Rat scaled = q * den;
    Int num = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    for (Int cand = num - 1; cand <= num + 1; ++cand) {
      Rat r(cand, Int(den));
      Rat e = q > r ? Rat(q - r) : Rat(r - q);
      if (!have || e < err) {
        have = true;
        err = e;
        best = r;
      }
    }
  }
  return best;
}

}  // namespace tropic
