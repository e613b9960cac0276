#pragma once

#include <cstdint>

namespace itriple {

// Tunable limits shared across the decision pipeline. All defaults are sized
// for desk-scale instances; exceeding a limit is a reported condition, never a
// wrong answer.
struct Config {
  std::uint64_t group_cap = 100000;             // max explicit group order
  std::uint64_t search_budget = 10'000'000;     // automorphism search tree nodes
  std::uint64_t oracle_max_candidates = 1'000'000;
  std::uint64_t max_graph_side = 10000;         // witness replay size guard
  int product_depth = 8;                        // recursion bound for product decomposition
  bool oracle_enabled = true;
  std::uint64_t geometric_q_max = 13;           // prime field scan bound (q <= 13)
  unsigned geometric_n_max = 6;                 // ambient dimension scan bound
  int jobs = 1;                                 // classify parallelism
};

} // namespace itriple
