#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

// Boost 1.74 probes every constructor argument for a byte-container
// const_iterator; Eigen expressions expose a void one, which is a hard error
// inside Eigen's scalar-promotion SFINAE. Eigen types are never byte containers.
namespace boost::multiprecision::detail {
template <class C>
  requires requires { typename C::StorageBaseType; typename C::Scalar; }
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace lensurg {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer. Expression templates are off so the type
/// behaves like a plain value inside Eigen expressions.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Exact fraction, always kept in lowest terms with a positive denominator.
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline Integer numerator_of(const Rational& r) { return mp::numerator(r); }
inline Integer denominator_of(const Rational& r) { return mp::denominator(r); }

/// num / den in lowest terms; den must be nonzero (either sign).
inline Rational make_rational(const Integer& num, const Integer& den) { return Rational(num) / Rational(den); }

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

/// "a/b", or just "a" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  const Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Floor-style remainder in [0, |m|) for m != 0.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += (m < 0 ? Integer(-m) : m);
  return r;
}

/// Floor division for m != 0.
inline Integer div_floor(const Integer& a, const Integer& m) {
  Integer q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) q -= 1;
  return q;
}

/// Inverse of a modulo m (m > 1); throws std::domain_error if gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

bool fits_int64(const Integer& z);

}  // namespace lensurg
