#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "itriple/bigraph.hpp"
#include "itriple/config.hpp"
#include "itriple/numtheory.hpp"

namespace itriple {

struct OracleStats {
  u64 graphs_generated = 0;
  u64 graphs_after_dedup = 0;
  u64 nodes_explored = 0;
  bool completed = false;
};

enum class OracleOutcome { realizable, not_realizable, exceeded };

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::exceeded;
  std::optional<BiGraph> witness; // edge-transitive, exact (a, b, c) parameters
  OracleStats stats;
};

// All biregular bipartite graphs with parts (a, b) and degrees (c/a, c/b),
// exactly one per isomorphism class. Empty when a or b does not divide c or
// c > ab. Generation is row-wise backtracking with nondecreasing rows;
// deduplication is by canonical certificate.
std::vector<BiGraph> enumerate_biregular(std::uint32_t a, std::uint32_t b, u64 c,
                                         const Config &cfg, OracleStats *stats = nullptr);

// Unconditional decision for small triples: a triple is realizable iff some
// bipartite graph with these parameters and no isolated vertices is
// edge-transitive. The returned witness is the class with the
// lexicographically smallest canonical certificate.
OracleResult oracle_decide(std::uint32_t a, std::uint32_t b, u64 c, const Config &cfg);

} // namespace itriple
