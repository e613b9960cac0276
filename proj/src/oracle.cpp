#include "itriple/oracle.hpp"

#include <algorithm>
#include <set>

#include "itriple/autgraph.hpp"
#include "itriple/errors.hpp"

namespace itriple {

namespace {

// Row-wise backtracking over (c/a)-subsets of kappa, rows nondecreasing as
// bitmasks (any graph can be relabeled to sorted rows, so every isomorphism
// class is hit); kappa degrees are capped at c/b with a remaining-capacity
// feasibility prune.
class RowGenerator {
public:
  RowGenerator(std::uint32_t a, std::uint32_t b, std::uint32_t r_eta, std::uint32_t r_kappa,
               const Config &cfg, OracleStats &stats)
      : a_(a), b_(b), r_eta_(r_eta), r_kappa_(r_kappa), cfg_(cfg), stats_(stats) {
    std::vector<std::uint32_t> subset(r_eta_);
    gen_subsets(subset, 0, 0);
  }

  // Returns true when the enumeration ran to completion.
  bool run(std::vector<BiGraph> &candidates) {
    col_deg_.assign(b_, 0);
    rows_.clear();
    return extend(0, 0, candidates);
  }

private:
  void gen_subsets(std::vector<std::uint32_t> &subset, std::uint32_t next,
                   std::uint32_t depth) {
    if (depth == r_eta_) {
      std::uint64_t mask = 0;
      for (std::uint32_t j : subset) mask |= 1ull << j;
      mask_options_.push_back(mask);
      return;
    }
    for (std::uint32_t j = next; j + (r_eta_ - depth) <= b_; ++j) {
      subset[depth] = j;
      gen_subsets(subset, j + 1, depth + 1);
    }
  }

  bool extend(std::uint32_t row, std::size_t min_option, std::vector<BiGraph> &candidates) {
    if (++stats_.nodes_explored > cfg_.search_budget) return false;
    if (row == a_) {
      if (++stats_.graphs_generated > cfg_.oracle_max_candidates) return false;
      std::vector<Edge> edges;
      edges.reserve(static_cast<std::size_t>(a_) * r_eta_);
      for (std::uint32_t i = 0; i < a_; ++i)
        for (std::uint32_t j = 0; j < b_; ++j)
          if (rows_[i] >> j & 1) edges.emplace_back(i, j);
      candidates.emplace_back(a_, b_, std::move(edges));
      return true;
    }
    for (std::size_t oi = min_option; oi < mask_options_.size(); ++oi) {
      std::uint64_t mask = mask_options_[oi];
      bool ok = true;
      for (std::uint32_t j = 0; j < b_ && ok; ++j)
        if (mask >> j & 1)
          if (col_deg_[j] + 1 > r_kappa_) ok = false;
      if (!ok) continue;
      for (std::uint32_t j = 0; j < b_; ++j)
        if (mask >> j & 1) ++col_deg_[j];
      // Every remaining row adds at most one to each kappa degree.
      std::uint32_t remaining = a_ - row - 1;
      for (std::uint32_t j = 0; j < b_ && ok; ++j)
        if (r_kappa_ - col_deg_[j] > remaining) ok = false;
      if (ok) {
        rows_.push_back(mask);
        if (!extend(row + 1, oi, candidates)) return false;
        rows_.pop_back();
      }
      for (std::uint32_t j = 0; j < b_; ++j)
        if (mask >> j & 1) --col_deg_[j];
    }
    return true;
  }

  std::uint32_t a_, b_, r_eta_, r_kappa_;
  const Config &cfg_;
  OracleStats &stats_;
  std::vector<std::uint64_t> mask_options_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint32_t> col_deg_;
};

// Generates candidates and deduplicates by canonical certificate, preserving
// first occurrence. Returns whether generation and certification completed.
bool enumerate_classes(std::uint32_t a, std::uint32_t b, u64 c, const Config &cfg,
                       OracleStats &stats, std::vector<BiGraph> &classes) {
  check(a >= 1 && b >= 1 && c >= 1, Errc::invalid_argument,
        "biregular enumeration requires positive parameters");
  check(b <= 63, Errc::cap_exceeded, "kappa side limited to 63 vertices");
  // Degree forcing: a biregular realization needs integer degrees c/a and c/b.
  if (c % a != 0 || c % b != 0 || c > checked_mul(a, b)) {
    stats.completed = true;
    return true;
  }
  std::uint32_t r_eta = static_cast<std::uint32_t>(c / a);
  std::uint32_t r_kappa = static_cast<std::uint32_t>(c / b);

  std::vector<BiGraph> candidates;
  RowGenerator gen(a, b, r_eta, r_kappa, cfg, stats);
  bool complete = gen.run(candidates);

  std::set<std::string> seen;
  for (BiGraph &g : candidates) {
    std::string cert;
    try {
      cert = canonical_certificate(g, cfg.search_budget);
    } catch (const Error &e) {
      if (e.code() != Errc::budget_exceeded) throw;
      complete = false;
      continue;
    }
    if (seen.insert(std::move(cert)).second) classes.push_back(std::move(g));
  }
  stats.graphs_after_dedup = classes.size();
  stats.completed = complete;
  return complete;
}

} // namespace

std::vector<BiGraph> enumerate_biregular(std::uint32_t a, std::uint32_t b, u64 c,
                                         const Config &cfg, OracleStats *stats_out) {
  OracleStats stats;
  std::vector<BiGraph> classes;
  bool complete = enumerate_classes(a, b, c, cfg, stats, classes);
  if (stats_out) *stats_out = stats;
  if (!complete) fail(Errc::budget_exceeded, "biregular enumeration budget exceeded");
  return classes;
}

OracleResult oracle_decide(std::uint32_t a, std::uint32_t b, u64 c, const Config &cfg) {
  OracleResult result;
  std::vector<BiGraph> classes;
  bool complete = enumerate_classes(a, b, c, cfg, result.stats, classes);

  // The witness reported is the transitive class with the smallest canonical
  // certificate, independent of enumeration order.
  std::optional<std::pair<std::string, BiGraph>> best;
  for (const BiGraph &g : classes) {
    AutAnalysis analysis;
    try {
      analysis = analyze_graph(g, cfg.search_budget);
    } catch (const Error &e) {
      if (e.code() != Errc::budget_exceeded) throw;
      complete = false;
      continue;
    }
    if (edge_orbits_under(g, analysis.generators).size() != 1) continue;
    // Edge-transitivity plus no isolated vertices forces biregularity.
    check(is_biregular(g, static_cast<std::uint32_t>(c / a),
                       static_cast<std::uint32_t>(c / b)),
          Errc::internal_check, "edge-transitive candidate is not biregular");
    if (!best || analysis.canonical < best->first)
      best.emplace(std::move(analysis.canonical), g);
  }

  result.stats.completed = complete;
  if (best) {
    const BiGraph &w = best->second;
    // Independent re-check of everything the witness claims.
    check(w.eta_size() == a && w.kappa_size() == b && w.edge_count() == c,
          Errc::internal_check, "oracle witness has wrong parameters");
    check(is_edge_transitive(w, cfg.search_budget), Errc::internal_check,
          "oracle witness is not edge-transitive");
    result.outcome = OracleOutcome::realizable;
    result.witness = w;
  } else if (complete) {
    result.outcome = OracleOutcome::not_realizable;
  } else {
    result.outcome = OracleOutcome::exceeded;
  }
  return result;
}

} // namespace itriple
