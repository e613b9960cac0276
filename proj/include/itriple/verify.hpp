#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itriple/config.hpp"
#include "itriple/permgroup.hpp"

namespace itriple {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double millis = 0.0;
};

struct CheckOptions {
  // Test hook: replaces the frozen refutation list so harness tests can
  // demonstrate failure reporting.
  std::optional<std::vector<Triple>> golden_override;
};

// Names accepted by `only`: classify-box, oracle-5-5-15, cig-bijection,
// cig-edge-transitive, geometric-family, aut-brute-equivalence,
// iff-spot-values, oracle-decider-agreement. Empty string runs all.
std::vector<CheckResult> run_paper_checks(const Config &cfg, const std::string &only = "",
                                          const CheckOptions &opts = {});

std::vector<std::string> paper_check_names();

// Named witness corpus: trivial, cyclic product pairs, S_n stabilizer pairs
// (n <= 6), affine (n, p) pairs, the S_4 Sylow pair, S_5 on 2-subsets, and
// all pairwise direct products with |G|·|G'| <= product_bound.
struct CorpusEntry {
  std::string name;
  GroupTriple triple;
};
std::vector<CorpusEntry> witness_corpus(u64 cap);
std::vector<CorpusEntry> witness_corpus_with_products(u64 cap, u64 product_bound);

// Frozen NotRealizable set for the 10x10 classification box (triples passing
// the arithmetic necessary conditions that the rules refute), normalized
// a <= b.
const std::vector<Triple> &golden_refutations_10();

} // namespace itriple
