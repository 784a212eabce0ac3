#include "flagsym/rational.hpp"

#include <stdexcept>

namespace flagsym {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("invalid rational literal: \"" + text + "\"");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: \"" + text + "\"");
  }
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();  // canonical form already omits "/1"
}

std::vector<Integer> scale_to_integers(const std::vector<Rational>& values) {
  Integer den_lcm = 1;
  for (const auto& v : values) {
    Integer d = v.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  std::vector<Integer> scaled;
  scaled.reserve(values.size());
  Integer num_gcd = 0;
  for (const auto& v : values) {
    Integer s = v.get_num() * (den_lcm / v.get_den());
    num_gcd = gcd(num_gcd, s);
    scaled.push_back(s);
  }
  if (num_gcd > 1) {
    for (auto& s : scaled) s /= num_gcd;
  }
  return scaled;
}

}  // namespace flagsym
