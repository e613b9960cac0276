#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itriple/bigraph.hpp"
#include "itriple/permgroup.hpp"

namespace itriple {

// Partition-preserving automorphism: a pair of permutations acting on the two
// sides separately. Side-swapping maps are never considered, even when a = b.
struct BiAut {
  Perm eta, kappa;
  friend bool operator==(const BiAut &, const BiAut &) = default;
  friend auto operator<=>(const BiAut &, const BiAut &) = default;
};

bool is_automorphism(const BiGraph &g, const BiAut &f);

// Combined result of one backtracking search over the refinement tree.
struct AutAnalysis {
  std::vector<BiAut> generators; // generate the full side-preserving group
  std::string canonical;         // relabeling-invariant byte string
  std::uint64_t nodes = 0;       // search tree nodes visited
};

// Individualization-refinement backtracking with orbit pruning. Deterministic
// for a fixed graph; throws Errc::budget_exceeded past node_budget.
AutAnalysis analyze_graph(const BiGraph &g, std::uint64_t node_budget);

std::vector<BiAut> automorphism_generators(const BiGraph &g, std::uint64_t node_budget);
u64 aut_order(const BiGraph &g, std::uint64_t node_budget, u64 cap);
std::string canonical_certificate(const BiGraph &g, std::uint64_t node_budget);
std::string certificate_digest(const std::string &certificate);

// Orbits of E(g) under the generated automorphism group, each orbit sorted,
// orbits ordered by their least edge.
std::vector<std::vector<Edge>> edge_orbits(const BiGraph &g, std::uint64_t node_budget);
std::vector<std::vector<Edge>> edge_orbits_under(const BiGraph &g,
                                                 const std::vector<BiAut> &gens);

// True iff E(g) is nonempty and forms a single orbit. The empty graph is not
// edge-transitive by definition here.
bool is_edge_transitive(const BiGraph &g, std::uint64_t node_budget);

// Exhaustive a!*b! sweep; the test oracle for the search above. Rejects
// sides larger than 6.
std::vector<BiAut> brute_force_aut(const BiGraph &g);

// Embedding of a BiAut as a single permutation on a+b points (kappa shifted
// by a); used to run group closure over automorphisms.
Perm combined_perm(const BiAut &f, std::uint32_t a);

} // namespace itriple
