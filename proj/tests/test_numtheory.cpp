#include <doctest.h>

#include <numeric>

#include "itriple/errors.hpp"
#include "itriple/numtheory.hpp"

using namespace itriple;

namespace {

// Independent oracles, deliberately naive.
u64 phi_by_count(u64 n) {
  u64 count = 0;
  for (u64 k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

std::vector<u64> divisors_by_scan(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

} // namespace

TEST_SUITE("numtheory") {

TEST_CASE("gcd_lcm basics") {
  CHECK(gcd_lcm(1, 7) == std::pair<u64, u64>{1, 7});
  CHECK(gcd_lcm(4, 6) == std::pair<u64, u64>{2, 12});
  CHECK(gcd_lcm(5, 5) == std::pair<u64, u64>{5, 5});
}

TEST_CASE("gcd_lcm invariants") {
  for (u64 x = 1; x <= 40; ++x)
    for (u64 y = 1; y <= 40; ++y) {
      auto [g, l] = gcd_lcm(x, y);
      CHECK(x % g == 0);
      CHECK(y % g == 0);
      CHECK(l % x == 0);
      CHECK(l % y == 0);
      CHECK(g * l == x * y);
    }
}

TEST_CASE("euler_phi against the coprime count") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(7) == 6);
  CHECK(euler_phi(9) == 6);
  for (u64 n = 1; n <= 120; ++n) CHECK(euler_phi(n) == phi_by_count(n));
}

TEST_CASE("euler_phi is multiplicative on coprime arguments") {
  for (u64 m = 1; m <= 50; ++m)
    for (u64 n = 1; n <= 50; ++n)
      if (std::gcd(m, n) == 1) CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
}

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(97) == Factorization{{97, 1}});
  for (u64 n = 1; n <= 500; ++n) {
    Factorization f = factorize(n);
    CHECK(factorization_value(f) == n);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(is_prime(f[i].prime));
      if (i > 0) CHECK(f[i - 1].prime < f[i].prime);
    }
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<u64>{1});
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(7) == std::vector<u64>{1, 7});
  for (u64 n = 1; n <= 200; ++n) CHECK(divisors(n) == divisors_by_scan(n));
}

TEST_CASE("q_binomial values and degenerations") {
  CHECK(q_binomial(3, 1, 2) == 7);
  CHECK(q_binomial(2, 1, 2) == 3);
  for (u64 n = 0; n <= 8; ++n)
    for (u64 d = 0; d <= n; ++d) CHECK(q_binomial(n, d, 1) == binomial(n, d));
}

TEST_CASE("q_binomial symmetry") {
  for (u64 n = 0; n <= 8; ++n)
    for (u64 d = 0; d <= n; ++d)
      for (u64 q = 1; q <= 4; ++q) CHECK(q_binomial(n, d, q) == q_binomial(n, n - d, q));
}

TEST_CASE("q_binomial rejects d > n") {
  CHECK_THROWS_AS(q_binomial(2, 3, 2), Error);
}

TEST_CASE("multiplicative_order") {
  CHECK(multiplicative_order(1, 10) == 1);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 5) == 4);
  CHECK_THROWS_AS(multiplicative_order(2, 4), Error);
  for (u64 n = 2; n <= 60; ++n)
    for (u64 u = 1; u < n; ++u) {
      if (std::gcd(u, n) != 1) continue;
      CHECK(euler_phi(n) % multiplicative_order(u, n) == 0);
    }
}

TEST_CASE("checked arithmetic refuses to wrap") {
  CHECK_THROWS_AS(checked_mul(1ull << 40, 1ull << 40), Error);
  CHECK_THROWS_AS(checked_pow(10, 30), Error);
  CHECK(checked_pow(2, 10) == 1024);
}

} // TEST_SUITE
