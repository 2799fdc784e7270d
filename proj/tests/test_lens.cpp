#include <doctest.h>

#include <numeric>

#include "lensurg/lens.hpp"

using namespace lensurg;

namespace {

std::vector<Integer> terms(long long p, long long q) { return neg_contfrac(LensSpace(p, q)).terms; }

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

// Straight evaluation from the innermost term outward, done in plain
// integers as a numerator/denominator pair.
std::pair<long long, long long> fold(const std::vector<Integer>& a) {
  long long num = static_cast<long long>(a.back()), den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    const long long next = static_cast<long long>(a[i]) * num - den;
    den = num;
    num = next;
  }
  return {num, den};
}

}  // namespace

TEST_CASE("negative continued fractions") {
  CHECK(terms(7, 4) == ints({2, 4}));
  CHECK(terms(34, 9) == ints({4, 5, 2}));
  CHECK(terms(5, 4) == ints({2, 2, 2, 2}));
  for (long long n = 2; n <= 10; ++n) CHECK(terms(n, 1) == ints({n}));

  // a chain of twos evaluates to (j+1)/j
  for (long long j = 1; j <= 8; ++j) {
    NegContFrac chain{std::vector<Integer>(static_cast<std::size_t>(j), Integer(2))};
    CHECK(chain.value() == make_rational(j + 1, j));
  }
}

TEST_CASE("family expansions") {
  for (long long n = 2; n <= 8; ++n)
    for (long long s = 2; s <= 8; ++s) {
      std::vector<Integer> expected{Integer(n), Integer(s + 2)};
      expected.insert(expected.end(), static_cast<std::size_t>(s - 2), Integer(2));
      CHECK(terms(n * s * s - s + 1, s * s) == expected);
    }
}

TEST_CASE("expansion evaluates back to p/q") {
  for (long long p = 2; p <= 120; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto cf = neg_contfrac(LensSpace(p, q));
      CHECK(cf.value() == make_rational(p, q));
      const auto [num, den] = fold(cf.terms);
      CHECK(num == p);
      CHECK(den == q);
      for (const auto& a : cf.terms) CHECK(a >= 2);
    }
}

TEST_CASE("tight counts") {
  CHECK(tight_count(LensSpace(7, 4)) == 3);
  CHECK(tight_count(LensSpace(34, 9)) == 12);
  for (long long n = 2; n <= 12; ++n) CHECK(tight_count(LensSpace(n, 1)) == n - 1);
  for (long long n = 2; n <= 8; ++n)
    for (long long s = 2; s <= 8; ++s)
      CHECK(tight_count(LensSpace(n * s * s - s + 1, s * s)) == (s + 1) * (n - 1));

  // a count of one means every term is 2, which happens exactly for q = p - 1
  for (long long p = 2; p <= 60; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK((tight_count(LensSpace(p, q)) == 1) == (q == p - 1));
    }
}

TEST_CASE("lens space domain") {
  CHECK_THROWS_AS(LensSpace(4, 6), DomainError);
  CHECK_THROWS_AS(LensSpace(6, 4), DomainError);
  CHECK_THROWS_AS(LensSpace(5, 0), DomainError);
  CHECK_THROWS_AS(LensSpace(5, 5), DomainError);
  CHECK_THROWS_AS(LensSpace(5, -2), DomainError);
  CHECK_THROWS_AS(NegContFrac{}.value(), DomainError);
  CHECK_THROWS_AS((NegContFrac{ints({2, 1, 1})}.value()), DomainError);
}
