#pragma once

#include <stdexcept>
#include <vector>

#include "lensurg/scalar.hpp"

namespace lensurg {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// L(p, q) with p > q > 0 and gcd(p, q) = 1.
class LensSpace {
 public:
  LensSpace(Integer p, Integer q);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

 private:
  Integer p_;
  Integer q_;
};

/// Terms a_0, ..., a_k (all >= 2) of p/q = a_0 - 1/(a_1 - 1/(... - 1/a_k)).
struct NegContFrac {
  std::vector<Integer> terms;

  /// Exact value of the expansion; throws DomainError when empty or a
  /// tail evaluates to zero.
  Rational value() const;
};

NegContFrac neg_contfrac(const LensSpace& lens);

/// Number of tight contact structures on L(p, q): the product of (a_i - 1)
/// over the negative continued fraction of p/q.
Integer tight_count(const LensSpace& lens);

}  // namespace lensurg
