#include "lensurg/lens.hpp"

namespace lensurg {

LensSpace::LensSpace(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (!(q_ > 0 && p_ > q_)) throw DomainError("L(p, q) needs p > q > 0, got p = " + p_.str() + ", q = " + q_.str());
  if (gcd(p_, q_) != 1) throw DomainError("L(p, q) needs gcd(p, q) = 1, got p = " + p_.str() + ", q = " + q_.str());
}

Rational NegContFrac::value() const {
  if (terms.empty()) throw DomainError("empty continued fraction");
  Rational acc(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (acc == 0) throw DomainError("continued fraction has a zero tail");
    acc = Rational(*it) - 1 / acc;
  }
  return acc;
}

NegContFrac neg_contfrac(const LensSpace& lens) {
  NegContFrac out;
  Integer num = lens.p(), den = lens.q();
  // num/den = a - 1/(den/(a*den - num)) with a = ceil(num/den)
  while (den != 0) {
    const Integer a = -div_floor(Integer(-num), den);
    out.terms.push_back(a);
    const Integer rest = a * den - num;
    num = den;
    den = rest;
  }
  return out;
}

Integer tight_count(const LensSpace& lens) {
  Integer count = 1;
  for (const auto& a : neg_contfrac(lens).terms) count *= a - 1;
  return count;
}

}  // namespace lensurg
