#include <doctest.h>

#include <random>
#include <set>

#include "itriple/autgraph.hpp"
#include "itriple/realize.hpp"
#include "itriple/verify.hpp"

using namespace itriple;

namespace {

constexpr std::uint64_t kBudget = 10'000'000;
constexpr u64 kCap = 1'000'000;

std::set<Perm> group_elements(const BiGraph &g, const std::vector<BiAut> &gens) {
  std::vector<Perm> combined;
  for (const BiAut &f : gens) combined.push_back(combined_perm(f, g.eta_size()));
  PermGroup grp =
      PermGroup::closure(g.eta_size() + g.kappa_size(), std::move(combined), kCap);
  return {grp.elements().begin(), grp.elements().end()};
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("check names are stable") {
  auto names = paper_check_names();
  CHECK(names.size() == 8);
  CHECK(names.front() == "classify-box");
  Config cfg;
  CHECK_THROWS(run_paper_checks(cfg, "no-such-check"));
}

TEST_CASE("a mutated golden list makes the failing item name visible") {
  Config cfg;
  CheckOptions opts;
  opts.golden_override = std::vector<Triple>{{5, 5, 15}}; // deliberately incomplete
  auto results = run_paper_checks(cfg, "classify-box", opts);
  REQUIRE(results.size() == 1);
  CHECK(results[0].name == "classify-box");
  CHECK_FALSE(results[0].pass);
  CHECK(results[0].detail.find("mismatch") != std::string::npos);
}

TEST_CASE("corpus entries have the advertised shapes") {
  auto corpus = witness_corpus(100000);
  CHECK(corpus.size() == 13);
  for (const CorpusEntry &e : corpus) {
    validate_group_triple(e.triple);
    CHECK(e.triple.G.order() <= 100000);
  }
  auto with_products = witness_corpus_with_products(100000, 5000);
  CHECK(with_products.size() > corpus.size());
  for (std::size_t i = corpus.size(); i < with_products.size(); ++i)
    CHECK(with_products[i].triple.G.order() <= 5000);
}

TEST_CASE("fast and canonical search modes generate the same group") {
  std::mt19937 rng(2024);
  std::vector<BiGraph> graphs;
  graphs.push_back(complete_bipartite(3, 4));
  graphs.push_back(matching_complement(5));
  graphs.push_back(pair_block_complement(5, 2));
  graphs.push_back(subspace_complement_graph(2, 3, 1, 1000));
  graphs.push_back(tensor_product(complete_bipartite(2, 2), matching_complement(3)));
  for (int trial = 0; trial < 20; ++trial) {
    std::uint32_t a = rng() % 7 + 1, b = rng() % 7 + 1;
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < a; ++i)
      for (std::uint32_t j = 0; j < b; ++j)
        if (rng() & 1) edges.emplace_back(i, j);
    graphs.emplace_back(a, b, std::move(edges));
  }
  for (const BiGraph &g : graphs) {
    auto fast = group_elements(g, automorphism_generators(g, kBudget));
    auto full = group_elements(g, analyze_graph(g, kBudget).generators);
    CHECK(fast == full);
  }
}

TEST_CASE("automorphism group orders of structured graphs") {
  CHECK(aut_order(complete_bipartite(3, 4), kBudget, kCap) == 144);   // 3! * 4!
  CHECK(aut_order(perfect_matching(4), kBudget, kCap) == 24);         // kappa follows eta
  CHECK(aut_order(matching_complement(4), kBudget, kCap) == 24);      // complement of the above
  CHECK(aut_order(subspace_complement_graph(2, 3, 1, 1000), kBudget, kCap) == 168);
  CHECK(aut_order(pair_block_complement(5, 2), kBudget, kCap) == 120);
  CHECK(aut_order(p_subsets_graph(5, 3, 1), kBudget, kCap) == 120);
  // K_{2,2} ⊗ K_{2,2} = K_{4,4}; side swaps are excluded, so 4! * 4!.
  CHECK(aut_order(tensor_product(complete_bipartite(2, 2), complete_bipartite(2, 2)),
                  kBudget, kCap) == 576);
}

} // TEST_SUITE
