#include <doctest.h>

#include <random>
#include <set>

#include "itriple/autgraph.hpp"
#include "itriple/errors.hpp"
#include "itriple/realize.hpp"

using namespace itriple;

namespace {

constexpr std::uint64_t kBudget = 10'000'000;
constexpr u64 kCap = 1'000'000;

BiGraph random_graph(std::mt19937 &rng, std::uint32_t amax, std::uint32_t bmax) {
  std::uint32_t a = rng() % amax + 1, b = rng() % bmax + 1;
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < a; ++i)
    for (std::uint32_t j = 0; j < b; ++j)
      if (rng() & 1) edges.emplace_back(i, j);
  return BiGraph(a, b, std::move(edges));
}

BiAut random_relabeling(std::mt19937 &rng, std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> pe(a), pk(b);
  for (std::uint32_t i = 0; i < a; ++i) pe[i] = i;
  for (std::uint32_t j = 0; j < b; ++j) pk[j] = j;
  std::shuffle(pe.begin(), pe.end(), rng);
  std::shuffle(pk.begin(), pk.end(), rng);
  return BiAut{Perm(std::move(pe)), Perm(std::move(pk))};
}

BiGraph relabel(const BiGraph &g, const BiAut &f) {
  std::vector<Edge> edges;
  for (const auto &[i, j] : g.edges()) edges.emplace_back(f.eta(i), f.kappa(j));
  return BiGraph(g.eta_size(), g.kappa_size(), std::move(edges));
}

u64 generated_order(const BiGraph &g) {
  auto gens = automorphism_generators(g, kBudget);
  std::vector<Perm> combined;
  for (const BiAut &f : gens) combined.push_back(combined_perm(f, g.eta_size()));
  return PermGroup::closure(g.eta_size() + g.kappa_size(), std::move(combined), kCap).order();
}

} // namespace

TEST_SUITE("autgraph") {

TEST_CASE("is_automorphism") {
  BiGraph k22 = complete_bipartite(2, 2);
  CHECK(is_automorphism(k22, {Perm::identity(2), Perm::identity(2)}));
  CHECK(is_automorphism(k22, {Perm::from_cycles(2, {{0, 1}}), Perm::identity(2)}));
  BiGraph path(2, 2, {{0, 0}, {0, 1}, {1, 1}});
  CHECK_FALSE(is_automorphism(path, {Perm::from_cycles(2, {{0, 1}}), Perm::identity(2)}));
  CHECK_THROWS_AS(is_automorphism(k22, {Perm::identity(3), Perm::identity(2)}), Error);
}

TEST_CASE("aut_order on known graphs") {
  CHECK(aut_order(BiGraph(1, 1, {{0, 0}}), kBudget, kCap) == 1);
  CHECK(aut_order(complete_bipartite(2, 2), kBudget, kCap) == 4);
  CHECK(aut_order(complete_bipartite(3, 3), kBudget, kCap) == 36);
  CHECK(aut_order(matching_complement(3), kBudget, kCap) == 6); // 6-cycle
  // 10-cycle as a 5x5 bipartite graph: only the side-preserving half of the
  // dihedral group counts.
  BiGraph ten(5, 5, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}, {0, 4}});
  CHECK(aut_order(ten, kBudget, kCap) == 10);
  CHECK(generated_order(BiGraph(2, 2, {})) == 4);
}

TEST_CASE("edge orbits") {
  BiGraph k23 = complete_bipartite(2, 3);
  auto orbits = edge_orbits(k23, kBudget);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].size() == 6);

  // Side-preserving automorphisms only: degrees pin every vertex of the
  // 3-edge path, so each edge sits in its own orbit (the path reversal that
  // would merge the outer edges exchanges the sides).
  BiGraph path(2, 2, {{0, 0}, {0, 1}, {1, 1}});
  auto path_orbits = edge_orbits(path, kBudget);
  CHECK(path_orbits.size() == 3);
  CHECK(edge_orbits_under(path, brute_force_aut(path)).size() == 3);

  u64 order = aut_order(path, kBudget, kCap);
  for (const auto &orbit : path_orbits) CHECK(order % orbit.size() == 0);
}

TEST_CASE("edge transitivity") {
  CHECK(is_edge_transitive(complete_bipartite(4, 2), kBudget));
  CHECK(is_edge_transitive(matching_complement(3), kBudget));
  CHECK_FALSE(is_edge_transitive(BiGraph(3, 3, {}), kBudget)); // empty: defined false
  // K_{1,1} + K_{2,2} disjoint: degree invariant separates the orbits.
  BiGraph mixed(3, 3, {{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK_FALSE(is_edge_transitive(mixed, kBudget));
}

TEST_CASE("edge transitivity forces biregularity") {
  std::mt19937 rng(41);
  int transitive_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    BiGraph g = random_graph(rng, 4, 4);
    if (g.edges().empty()) continue;
    auto [de, dk] = degree_profile(g);
    bool isolated = de.front() == 0 || dk.front() == 0;
    if (!is_edge_transitive(g, kBudget) || isolated) continue;
    ++transitive_seen;
    CHECK(de.front() == de.back());
    CHECK(dk.front() == dk.back());
  }
  CHECK(transitive_seen > 0);
}

TEST_CASE("brute force oracle equivalence, small sweep") {
  // The acceptance suite runs the full exhaustive sweep; this covers a quick
  // sample of structured and random graphs.
  std::mt19937 rng(5);
  std::vector<BiGraph> graphs;
  graphs.push_back(complete_bipartite(1, 2));
  graphs.push_back(BiGraph(2, 2, {}));
  graphs.push_back(matching_complement(3));
  graphs.push_back(perfect_matching(4));
  graphs.push_back(complement(perfect_matching(4)));
  for (int i = 0; i < 25; ++i) graphs.push_back(random_graph(rng, 4, 4));
  for (const BiGraph &g : graphs) {
    std::vector<BiAut> brute = brute_force_aut(g);
    CHECK(generated_order(g) == brute.size());
    for (const BiAut &f : brute) CHECK(is_automorphism(g, f));
  }
  CHECK(brute_force_aut(complete_bipartite(1, 2)).size() == 2);
  CHECK(brute_force_aut(BiGraph(2, 2, {})).size() == 4);
  CHECK(brute_force_aut(matching_complement(3)).size() == 6);
  CHECK_THROWS_AS(brute_force_aut(complete_bipartite(7, 2)), Error);
}

TEST_CASE("canonical certificate is a relabeling invariant") {
  std::mt19937 rng(17);
  std::vector<BiGraph> corpus;
  corpus.push_back(matching_complement(4));
  corpus.push_back(complete_bipartite(3, 2));
  corpus.push_back(pair_block_complement(5, 2));
  for (int i = 0; i < 7; ++i) corpus.push_back(random_graph(rng, 5, 5));
  for (const BiGraph &g : corpus) {
    std::string cert = canonical_certificate(g, kBudget);
    for (int trial = 0; trial < 100; ++trial) {
      BiAut f = random_relabeling(rng, g.eta_size(), g.kappa_size());
      CHECK(canonical_certificate(relabel(g, f), kBudget) == cert);
    }
  }
}

TEST_CASE("canonical certificate separates non-isomorphic graphs") {
  // 3-edge path vs 3-edge star in 2x3.
  BiGraph path(2, 3, {{0, 0}, {0, 1}, {1, 1}});
  BiGraph star(2, 3, {{0, 0}, {0, 1}, {0, 2}});
  CHECK(canonical_certificate(path, kBudget) != canonical_certificate(star, kBudget));
  CHECK(canonical_certificate(perfect_matching(3), kBudget) !=
        canonical_certificate(matching_complement(3), kBudget));
  // Same iso class, different labelings.
  BiGraph c4(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(canonical_certificate(c4, kBudget) ==
        canonical_certificate(complete_bipartite(2, 2), kBudget));
}

TEST_CASE("exhaustive certificate equality matches isomorphism on 2x3") {
  // Certificates agree exactly when some relabeling pair maps one edge set
  // onto the other.
  std::vector<BiGraph> graphs;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 3; ++j)
        if (mask >> (i * 3 + j) & 1) edges.emplace_back(i, j);
    graphs.emplace_back(2, 3, std::move(edges));
  }
  auto isomorphic = [](const BiGraph &x, const BiGraph &y) {
    if (x.edge_count() != y.edge_count()) return false;
    std::vector<std::uint32_t> pe{0, 1}, pk{0, 1, 2};
    std::sort(pk.begin(), pk.end());
    do {
      std::vector<std::uint32_t> qe = pe;
      do {
        std::set<Edge> mapped;
        for (const auto &[i, j] : x.edges()) mapped.insert({qe[i], pk[j]});
        std::set<Edge> target(y.edges().begin(), y.edges().end());
        if (mapped == target) return true;
      } while (std::next_permutation(qe.begin(), qe.end()));
    } while (std::next_permutation(pk.begin(), pk.end()));
    return false;
  };
  for (const BiGraph &x : graphs)
    for (const BiGraph &y : graphs)
      CHECK((canonical_certificate(x, kBudget) == canonical_certificate(y, kBudget)) ==
            isomorphic(x, y));
}

TEST_CASE("search budget is an error, not a wrong answer") {
  CHECK_THROWS_AS(analyze_graph(complete_bipartite(6, 6), 5), Error);
}

} // TEST_SUITE
