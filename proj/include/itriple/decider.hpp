#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "itriple/certificate.hpp"
#include "itriple/config.hpp"
#include "itriple/permgroup.hpp"

namespace itriple {

Triple normalize(const Triple &t);

// Individual decision rules. Each returns a certificate when its shape
// matches (Realizable certificates for the sufficient rules, refutations for
// the matched iff-theorem criteria) and nullopt when it does not apply.
// Rules accept either orientation of the triple.
std::optional<Certificate> check_necessary(const Triple &t);      // failure certificate or nullopt = pass
std::optional<Certificate> rule_divisor_sandwich(const Triple &t);
std::optional<Certificate> rule_catalog(const Triple &t);
std::optional<Certificate> rule_nminus1(const Triple &t);
std::optional<Certificate> rule_phi_prime(const Triple &t);
std::optional<Certificate> rule_thm_nminus2(const Triple &t);
std::optional<Certificate> rule_thm_prime_window(const Triple &t);
std::optional<Certificate> rule_geometric(const Triple &t, const Config &cfg);

// Shared memo across decide calls (classify rows, product recursion).
class DecideSession {
public:
  explicit DecideSession(Config cfg) : cfg_(std::move(cfg)) {}
  const Config &config() const { return cfg_; }

  std::optional<Verdict> lookup(const Triple &t);
  void store(const Triple &t, const Verdict &v);
  bool known_unrealizable_by_rules(const Triple &t);
  void mark_unrealizable_by_rules(const Triple &t);

private:
  Config cfg_;
  std::mutex mu_;
  std::map<Triple, Verdict> memo_;           // decided outcomes only
  std::map<Triple, bool> rules_failed_;      // rule pipeline found no realization
};

// Proper-factor product search; proves realizability only.
std::optional<Certificate> decompose_product(const Triple &t, DecideSession &session,
                                             int depth);

Verdict decide(const Triple &t, const Config &cfg);
Verdict decide(const Triple &t, DecideSession &session);

// One verdict per triple with a <= a_max, b <= b_max, lcm(a,b) | c <= ab,
// rows in ascending (a, b, c) order. Uses cfg.jobs worker threads; the result
// is independent of the thread count.
std::vector<Verdict> classify(std::uint32_t a_max, std::uint32_t b_max, const Config &cfg);

} // namespace itriple
