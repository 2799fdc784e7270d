#include "lensurg/scalar.hpp"

#include <limits>
#include <stdexcept>

namespace lensurg {

namespace {

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return make_rational(num, den);
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  // extended Euclid on (a mod m, m)
  Integer old_r = mod_floor(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r = old_r - q * r;
    std::swap(old_r, r);
    old_s = old_s - q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::domain_error("mod_inverse: " + a.str() + " is not a unit mod " + m.str());
  return mod_floor(old_s, m);
}

bool fits_int64(const Integer& z) {
  return z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace lensurg
