#pragma once

#include <cstdint>
#include <vector>

#include "itriple/bigraph.hpp"
#include "itriple/permgroup.hpp"

namespace itriple {

// Coset intersection graph of (G, H, K) together with the coset
// representatives labelling its vertices and edges. Edge (i, j) carries the
// least element of (coset i) ∩ (coset j); those elements represent the
// cosets of H ∩ K, one per edge.
struct LabeledCIG {
  BiGraph graph;
  std::vector<Perm> eta_labels;   // representatives for G/H
  std::vector<Perm> kappa_labels; // representatives for G/K
  std::vector<Perm> edge_labels;  // representatives for G/(H ∩ K), aligned with graph.edges()
};

LabeledCIG coset_intersection_graph(const GroupTriple &t, u64 cap);

// Witness graph families. Each realizes the stated index triple and is
// edge-transitive by construction.
BiGraph complete_bipartite(std::uint32_t a, std::uint32_t b); // (a, b, ab)
BiGraph perfect_matching(std::uint32_t n);                    // (n, n, n)
BiGraph matching_complement(std::uint32_t n);                 // (n, n, n(n-1)), n >= 2

// K kappa-vertices are 2l/(n-1) copies of each unordered pair in an n-set;
// the complement of the pair-incidence graph realizes (n, nl, n(n-2)l).
// Requires n >= 3 and (n-1) | 2l.
BiGraph pair_block_complement(std::uint32_t n, u64 l);

// Kappa-vertices are all p-subsets of an n-set, each with the given
// multiplicity; edges are memberships. Realizes (n, C(n,p)*mult, p*C(n,p)*mult).
BiGraph p_subsets_graph(std::uint32_t n, std::uint32_t p, u64 mult);

// Eta = d-dimensional subspaces of F_q^n, kappa = (n-d)-dimensional ones,
// edges between complementary pairs. q must be prime. Realizes
// (C(n,d)_q, C(n,d)_q, q^{d(n-d)} C(n,d)_q).
BiGraph subspace_complement_graph(u64 q, unsigned n, unsigned d, u64 max_side);

// All d-dimensional subspaces of F_q^n as reduced row-echelon bases
// (canonical, one per subspace), each a d*n row-major byte matrix.
std::vector<std::vector<std::uint8_t>> enumerate_subspaces(u64 q, unsigned n, unsigned d);

// Componentwise product within sides: the coset intersection graph of a
// direct product of group triples is exactly this product of their graphs.
BiGraph tensor_product(const BiGraph &g1, const BiGraph &g2);

// Explicit group witnesses used by the decision rules and the test corpus.
GroupTriple lemma_ab_triple(unsigned a, unsigned b, u64 cap);            // (a, b, ab)
GroupTriple stabilizer_pair_triple(const PermGroup &G, u64 cap);         // (G, Stab(0), Stab(1))
GroupTriple s4_sylow_triple(u64 cap);                                    // (8, 8, 24)
GroupTriple s5_two_subsets_triple(u64 cap);                              // (10, 10, 30)

} // namespace itriple
