#include "itriple/decider.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "itriple/errors.hpp"
#include "itriple/numtheory.hpp"
#include "itriple/oracle.hpp"

namespace itriple {

namespace {

using u128 = unsigned __int128;

// Factorization-based rules are skipped beyond this bound so that decide
// stays fast on arbitrary 64-bit inputs (trial division is the only
// factorization this artifact needs).
constexpr u64 kFactorBound = 1'000'000'000'000ull;

// Overflow-free shape arithmetic for arbitrary 64-bit triples.
bool eq_mul(u64 x, u64 y, u64 target) { return static_cast<u128>(x) * y == target; }
bool eq_mul3(u64 x, u64 y, u64 z, u64 target) {
  u128 xy = static_cast<u128>(x) * y;
  if (xy > target) return false; // z >= 1 everywhere this is used
  return static_cast<u128>(static_cast<u64>(xy)) * z == target;
}
bool le_mul(u64 c, u64 x, u64 y) { return static_cast<u128>(c) <= static_cast<u128>(x) * y; }

Certificate leaf_rule(const std::string &name, std::map<std::string, u64> params, Triple t) {
  Certificate c;
  c.kind = CertKind::rule;
  c.name = name;
  c.params = std::move(params);
  c.triple = t;
  return c;
}

Certificate leaf_group(const std::string &name, std::map<std::string, u64> params, Triple t) {
  Certificate c;
  c.kind = CertKind::group;
  c.name = name;
  c.params = std::move(params);
  c.triple = t;
  return c;
}

Certificate refutation(const std::string &theorem, std::map<std::string, u64> params,
                       Triple t) {
  Certificate c;
  c.kind = CertKind::theorem_refutation;
  c.name = theorem;
  c.params = std::move(params);
  c.triple = t;
  return c;
}

Certificate product_cert(std::vector<Certificate> factors, Triple t,
                         std::map<std::string, u64> params = {}) {
  Certificate c;
  c.kind = CertKind::product;
  c.factors = std::move(factors);
  c.triple = t;
  c.params = std::move(params);
  return c;
}

Certificate cb(u64 a, u64 b) {
  return leaf_rule("complete_bipartite", {{"a", a}, {"b", b}}, Triple{a, b, a * b});
}

// Wraps a base certificate for (n, n, c0) into one for (n, n*e, c0*e) by
// multiplying with the (1, e, e) triple, exactly as the scaled families do.
Certificate scaled(Certificate base, u64 e) {
  if (e == 1) return base;
  Triple t{base.triple.a, base.triple.b * e, base.triple.c * e};
  std::vector<Certificate> factors;
  factors.push_back(std::move(base));
  factors.push_back(cb(1, e));
  return product_cert(std::move(factors), t);
}

} // namespace

Triple normalize(const Triple &t) { return t.a <= t.b ? t : Triple{t.b, t.a, t.c}; }

std::optional<Certificate> check_necessary(const Triple &t) {
  check(t.a >= 1 && t.b >= 1 && t.c >= 1, Errc::invalid_argument,
        "triples must have positive entries");
  u64 g = std::gcd(t.a, t.b);
  // lcm as a 128-bit quantity; it divides c only if it fits alongside it.
  u128 lcm = static_cast<u128>(t.a / g) * t.b;
  Certificate c;
  c.kind = CertKind::necessary_failure;
  c.triple = t;
  if (lcm > t.c || t.c % static_cast<u64>(lcm) != 0) {
    c.name = "lcm_divides";
    return c;
  }
  if (!le_mul(t.c, t.a, t.b)) {
    c.name = "c_le_ab";
    return c;
  }
  return std::nullopt;
}

std::optional<Certificate> rule_divisor_sandwich(const Triple &t0) {
  Triple t = normalize(t0);
  u64 g = std::gcd(t.a, t.b);
  u128 lcm = static_cast<u128>(t.a / g) * t.b;
  if (lcm > t.c || t.c % static_cast<u64>(lcm) != 0) return std::nullopt;
  if (static_cast<u128>(t.a) * t.b % t.c != 0) return std::nullopt;
  u64 m = t.a / g, n = t.b / g;
  u64 e = t.c / static_cast<u64>(lcm);
  check(g % e == 0, Errc::internal_check, "divisor sandwich: e does not divide gcd");
  u64 f = g / e;
  std::vector<Certificate> factors;
  factors.push_back(cb(e, e));
  factors.push_back(leaf_rule("perfect_matching", {{"n", f}}, Triple{f, f, f}));
  factors.push_back(cb(m, n));
  return product_cert(std::move(factors), t,
                      {{"d", g}, {"e", e}, {"f", f}, {"m", m}, {"n", n}});
}

std::optional<Certificate> rule_catalog(const Triple &t0) {
  Triple t = normalize(t0);
  if (t == Triple{8, 8, 24}) return leaf_group("s4_sylow", {}, t);
  if (t == Triple{10, 10, 30}) return leaf_group("s5_two_subsets", {}, t);
  return std::nullopt;
}

std::optional<Certificate> rule_nminus1(const Triple &t0) {
  Triple t = normalize(t0);
  if (t.a < 2 || t.b % t.a != 0) return std::nullopt;
  u64 n = t.a, e = t.b / t.a;
  if (!eq_mul3(n, n - 1, e, t.c)) return std::nullopt;
  Certificate base =
      leaf_rule("matching_complement", {{"n", n}}, Triple{n, n, n * (n - 1)});
  return scaled(std::move(base), e);
}

std::optional<Certificate> rule_phi_prime(const Triple &t0) {
  Triple t = normalize(t0);
  if (t.a < 3 || t.a > kFactorBound || t.b % t.a != 0) return std::nullopt;
  u64 n = t.a, e = t.b / t.a;
  if (t.c % t.b != 0) return std::nullopt;
  u64 p = t.c / t.b; // c = n p e
  if (p < 2 || p > kFactorBound || !is_prime(p)) return std::nullopt;
  if (n % p == 0) return std::nullopt;
  if (euler_phi(n) % p != 0) return std::nullopt;
  Certificate base = leaf_group("affine", {{"n", n}, {"p", p}}, Triple{n, n, n * p});
  return scaled(std::move(base), e);
}

std::optional<Certificate> rule_thm_nminus2(const Triple &t0) {
  Triple t = normalize(t0);
  if (t.a < 3 || t.b % t.a != 0) return std::nullopt;
  u64 n = t.a, l = t.b / t.a;
  if (!eq_mul3(n, n - 2, l, t.c)) return std::nullopt;
  if (n % 2 == 1) {
    if ((2 * l) % (n - 1) != 0)
      return refutation("n_minus_2", {{"n", n}, {"l", l}}, t);
    return leaf_rule("pair_block", {{"n", n}, {"l", l}}, t);
  }
  // Even n = 2m: (n, nl, n(n-2)l) = (m, m, m(m-1)) · (2, 2l, 4l), the second
  // factor being divisor-sandwich realizable.
  u64 m = n / 2;
  std::vector<Certificate> factors;
  if (m == 1) {
    // (2, 2l, 0·l) never reaches here since c >= 1 forces n >= 3.
    return std::nullopt;
  }
  factors.push_back(
      leaf_rule("matching_complement", {{"n", m}}, Triple{m, m, m * (m - 1)}));
  auto second = rule_divisor_sandwich(Triple{2, 2 * l, 4 * l});
  check(second.has_value(), Errc::internal_check,
        "(2, 2l, 4l) must be divisor-sandwich realizable");
  factors.push_back(std::move(*second));
  return product_cert(std::move(factors), t, {{"n", n}, {"l", l}});
}

std::optional<Certificate> rule_thm_prime_window(const Triple &t0) {
  Triple t = normalize(t0);
  if (t.a < 3 || t.b % t.a != 0) return std::nullopt;
  u64 n = t.a, l = t.b / t.a;
  if (t.c % t.b != 0) return std::nullopt;
  u64 p = t.c / t.b; // c = n p l
  if (p > kFactorBound || !is_prime(p) || !(p + 1 < n && n < 2 * p)) return std::nullopt;
  u64 count = 0; // 0 encodes "beyond 64 bits", which certainly does not divide b
  try {
    count = binomial(n, p);
  } catch (const Error &) {
  }
  if (count == 0 || t.b % count != 0)
    return refutation("prime_window", {{"n", n}, {"l", l}, {"p", p}}, t);
  u64 mult = t.b / count;
  return leaf_rule("p_subsets", {{"n", n}, {"p", p}, {"mult", mult}, {"l", l}}, t);
}

std::optional<Certificate> rule_geometric(const Triple &t0, const Config &cfg) {
  Triple t = normalize(t0);
  if (t.a != t.b) return std::nullopt;
  for (u64 q = 2; q <= cfg.geometric_q_max; ++q) {
    if (!is_prime(q)) continue;
    for (unsigned n = 2; n <= cfg.geometric_n_max; ++n)
      for (unsigned d = 1; d < n; ++d) {
        u64 side = 0, degree = 0;
        try {
          side = q_binomial(n, d, q);
          degree = checked_pow(q, d * (n - d));
        } catch (const Error &) {
          continue; // beyond 64-bit range, certainly not equal to t
        }
        if (side != t.a) continue;
        if (eq_mul(degree, side, t.c))
          return leaf_rule("subspace", {{"q", q}, {"n", n}, {"d", d}}, t);
      }
  }
  return std::nullopt;
}

std::optional<Verdict> DecideSession::lookup(const Triple &t) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(t);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void DecideSession::store(const Triple &t, const Verdict &v) {
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(t, v);
}

bool DecideSession::known_unrealizable_by_rules(const Triple &t) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = rules_failed_.find(t);
  return it != rules_failed_.end() && it->second;
}

void DecideSession::mark_unrealizable_by_rules(const Triple &t) {
  std::lock_guard<std::mutex> lock(mu_);
  rules_failed_[t] = true;
}

namespace {

// Rule pipeline on a normalized triple, oracle excluded. Returns nothing when
// no rule and no product decomposition decides.
std::optional<Verdict> decide_by_rules(const Triple &t, DecideSession &session, int depth) {
  if (auto memo = session.lookup(t)) return memo;

  auto decided = [&](Outcome outcome, Certificate cert) {
    Verdict v{t, false, outcome, std::move(cert)};
    session.store(t, v);
    return v;
  };

  if (auto cert = check_necessary(t))
    return decided(Outcome::not_realizable, std::move(*cert));
  if (auto cert = rule_divisor_sandwich(t)) return decided(Outcome::realizable, std::move(*cert));
  if (auto cert = rule_catalog(t)) return decided(Outcome::realizable, std::move(*cert));
  if (auto cert = rule_nminus1(t)) return decided(Outcome::realizable, std::move(*cert));
  if (auto cert = rule_phi_prime(t)) return decided(Outcome::realizable, std::move(*cert));
  if (auto cert = rule_thm_nminus2(t)) {
    Outcome o = cert->kind == CertKind::theorem_refutation ? Outcome::not_realizable
                                                           : Outcome::realizable;
    return decided(o, std::move(*cert));
  }
  if (auto cert = rule_thm_prime_window(t)) {
    Outcome o = cert->kind == CertKind::theorem_refutation ? Outcome::not_realizable
                                                           : Outcome::realizable;
    return decided(o, std::move(*cert));
  }
  if (auto cert = rule_geometric(t, session.config()))
    return decided(Outcome::realizable, std::move(*cert));
  if (auto cert = decompose_product(t, session, depth))
    return decided(Outcome::realizable, std::move(*cert));
  return std::nullopt;
}

// Decides an arbitrarily oriented factor triple by rules and reorients its
// certificate to that orientation.
std::optional<Certificate> factor_certificate(const Triple &t, DecideSession &session,
                                              int depth) {
  Triple norm = normalize(t);
  if (session.known_unrealizable_by_rules(norm)) return std::nullopt;
  auto v = decide_by_rules(norm, session, depth);
  if (!v) {
    session.mark_unrealizable_by_rules(norm);
    return std::nullopt;
  }
  if (v->outcome != Outcome::realizable) return std::nullopt;
  Certificate cert = v->certificate;
  if (norm != t) cert = transpose_certificate(std::move(cert));
  return cert;
}

} // namespace

std::optional<Certificate> decompose_product(const Triple &t, DecideSession &session,
                                             int depth) {
  if (depth <= 0) return std::nullopt;
  if (t.a > kFactorBound || t.b > kFactorBound || t.c > kFactorBound) return std::nullopt;
  // Proper splits only; factors are scanned in ascending divisor order, so
  // the first decomposition found is deterministic.
  for (u64 a1 : divisors(t.a))
    for (u64 b1 : divisors(t.b))
      for (u64 c1 : divisors(t.c)) {
        Triple t1{a1, b1, c1};
        Triple t2{t.a / a1, t.b / b1, t.c / c1};
        Triple unit{1, 1, 1};
        if (t1 == unit || t2 == unit) continue;
        if (check_necessary(t1) || check_necessary(t2)) continue;
        auto cert1 = factor_certificate(t1, session, depth - 1);
        if (!cert1) continue;
        auto cert2 = factor_certificate(t2, session, depth - 1);
        if (!cert2) continue;
        std::vector<Certificate> factors;
        factors.push_back(std::move(*cert1));
        factors.push_back(std::move(*cert2));
        return product_cert(std::move(factors), t);
      }
  return std::nullopt;
}

Verdict decide(const Triple &t, DecideSession &session) {
  check(t.a >= 1 && t.b >= 1 && t.c >= 1, Errc::invalid_argument,
        "triples must have positive entries");
  Triple norm = normalize(t);
  bool swapped = norm != t;

  auto oriented = [&](const Verdict &v) {
    return Verdict{t, swapped, v.outcome, v.certificate};
  };

  if (auto v = decide_by_rules(norm, session, session.config().product_depth))
    return oriented(*v);

  const Config &cfg = session.config();
  Certificate cert;
  cert.kind = CertKind::oracle_exhausted;
  cert.triple = norm;
  cert.oracle_stats = OracleStats{};
  cert.oracle_ran = false;

  if (cfg.oracle_enabled && norm.a <= UINT32_MAX && norm.b <= UINT32_MAX) {
    try {
      OracleResult res =
          oracle_decide(static_cast<std::uint32_t>(norm.a),
                        static_cast<std::uint32_t>(norm.b), norm.c, cfg);
      cert.oracle_ran = true;
      cert.oracle_stats = res.stats;
      if (res.outcome == OracleOutcome::realizable) {
        Certificate witness;
        witness.kind = CertKind::graph;
        witness.triple = norm;
        witness.graph = std::move(res.witness);
        Verdict v{norm, false, Outcome::realizable, std::move(witness)};
        session.store(norm, v);
        return oriented(v);
      }
      if (res.outcome == OracleOutcome::not_realizable) {
        Verdict v{norm, false, Outcome::not_realizable, cert};
        session.store(norm, v);
        return oriented(v);
      }
    } catch (const Error &e) {
      if (e.code() != Errc::cap_exceeded && e.code() != Errc::budget_exceeded) throw;
      cert.oracle_ran = true;
    }
  }
  // Budget exhaustion and a disabled oracle both yield an honest Unknown;
  // unknowns are never memoized since they depend on the configured budgets.
  return Verdict{t, swapped, Outcome::unknown, std::move(cert)};
}

Verdict decide(const Triple &t, const Config &cfg) {
  DecideSession session(cfg);
  return decide(t, session);
}

std::vector<Verdict> classify(std::uint32_t a_max, std::uint32_t b_max, const Config &cfg) {
  std::vector<Triple> rows;
  for (u64 a = 1; a <= a_max; ++a)
    for (u64 b = 1; b <= b_max; ++b) {
      u64 l = std::lcm(a, b);
      for (u64 c = l; c <= a * b; c += l) rows.push_back(Triple{a, b, c});
    }

  DecideSession session(cfg);
  std::vector<Verdict> out(rows.size());
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = decide(rows[i], session);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1))
        out[i] = decide(rows[i], session);
    });
  for (auto &th : workers) th.join();
  return out;
}

} // namespace itriple
