#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace itriple {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

// Prime-power decomposition, ascending by prime; empty for n = 1.
using Factorization = std::vector<PrimePower>;

// Overflow-checked arithmetic; throws Errc::overflow instead of wrapping.
u64 checked_mul(u64 x, u64 y);
u64 checked_pow(u64 base, unsigned exp);

std::pair<u64, u64> gcd_lcm(u64 x, u64 y);
bool is_prime(u64 n);
Factorization factorize(u64 n);
u64 factorization_value(const Factorization &f);
u64 euler_phi(u64 n);
std::vector<u64> divisors(u64 n);
u64 binomial(u64 n, u64 k);

// Gaussian binomial coefficient, exact in integers; q = 1 degenerates to the
// ordinary binomial.
u64 q_binomial(u64 n, u64 d, u64 q);

// Least t >= 1 with u^t = 1 (mod n); requires gcd(u, n) = 1.
u64 multiplicative_order(u64 u, u64 n);

} // namespace itriple
