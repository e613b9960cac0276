#include "itriple/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "itriple/errors.hpp"

namespace itriple {

u64 checked_mul(u64 x, u64 y) {
  if (x != 0 && y > std::numeric_limits<u64>::max() / x)
    fail(Errc::overflow, "integer overflow in multiplication");
  return x * y;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::pair<u64, u64> gcd_lcm(u64 x, u64 y) {
  check(x >= 1 && y >= 1, Errc::invalid_argument, "gcd_lcm requires positive integers");
  u64 g = std::gcd(x, y);
  return {g, checked_mul(x / g, y)};
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(u64 n) {
  check(n >= 1, Errc::invalid_argument, "factorize requires a positive integer");
  Factorization f;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

u64 factorization_value(const Factorization &f) {
  u64 n = 1;
  for (const auto &pp : f) n = checked_mul(n, checked_pow(pp.prime, pp.exponent));
  return n;
}

u64 euler_phi(u64 n) {
  check(n >= 1, Errc::invalid_argument, "euler_phi requires a positive integer");
  u64 phi = 1;
  for (const auto &pp : factorize(n))
    phi = checked_mul(phi, checked_mul(checked_pow(pp.prime, pp.exponent - 1), pp.prime - 1));
  return phi;
}

std::vector<u64> divisors(u64 n) {
  check(n >= 1, Errc::invalid_argument, "divisors requires a positive integer");
  std::vector<u64> ds{1};
  for (const auto &pp : factorize(n)) {
    std::vector<u64> next;
    next.reserve(ds.size() * (pp.exponent + 1));
    u64 q = 1;
    for (unsigned e = 0; e <= pp.exponent; ++e) {
      for (u64 d : ds) next.push_back(checked_mul(d, q));
      if (e < pp.exponent) q = checked_mul(q, pp.prime);
    }
    ds = std::move(next);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u64 r = 1;
  // r stays integral at every step: after the i-th iteration it equals C(n-k+i, i).
  for (u64 i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i);
    r /= i;
  }
  return r;
}

u64 q_binomial(u64 n, u64 d, u64 q) {
  check(q >= 1, Errc::invalid_argument, "q_binomial requires q >= 1");
  check(d <= n, Errc::out_of_range, "q_binomial requires d <= n");
  if (q == 1) return binomial(n, d);
  u64 r = 1;
  // Partial products are themselves Gaussian binomials, so each division is exact.
  for (u64 i = 1; i <= d; ++i) {
    u64 num = checked_pow(q, static_cast<unsigned>(n - d + i)) - 1;
    u64 den = checked_pow(q, static_cast<unsigned>(i)) - 1;
    r = checked_mul(r, num);
    check(r % den == 0, Errc::internal_check, "q_binomial division not exact");
    r /= den;
  }
  return r;
}

u64 multiplicative_order(u64 u, u64 n) {
  check(n >= 1, Errc::invalid_argument, "multiplicative_order requires n >= 1");
  if (n == 1) return 1;
  u %= n;
  check(std::gcd(u, n) == 1, Errc::invalid_argument,
        "multiplicative_order requires gcd(u, n) = 1");
  u64 x = u, t = 1;
  while (x != 1) {
    x = checked_mul(x, u) % n;
    ++t;
  }
  return t;
}

} // namespace itriple
