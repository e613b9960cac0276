#include "itriple.h"

#include <cstring>
#include <string>

#include "itriple/autgraph.hpp"
#include "itriple/bigraph.hpp"
#include "itriple/certificate.hpp"
#include "itriple/config.hpp"
#include "itriple/decider.hpp"
#include "itriple/errors.hpp"
#include "itriple/oracle.hpp"
#include "itriple/verify.hpp"

using namespace itriple;

struct it_context {
  Config cfg;
  std::string last_error;
};

struct it_result {
  Verdict verdict;
  mutable std::string json_cache;
};

struct it_graph {
  BiGraph graph;
};

namespace {

int errc_to_code(Errc c) {
  switch (c) {
    case Errc::parse_error: return IT_ERR_PARSE;
    case Errc::cap_exceeded: return IT_ERR_CAP_EXCEEDED;
    case Errc::budget_exceeded: return IT_ERR_BUDGET_EXCEEDED;
    case Errc::internal_check: return IT_ERR_INTERNAL;
    default: return IT_ERR_INVALID_ARGUMENT;
  }
}

template <typename Fn>
int guarded(it_context *ctx, Fn &&fn) {
  if (!ctx) return IT_ERR_INVALID_ARGUMENT;
  try {
    ctx->last_error.clear();
    return fn();
  } catch (const Error &e) {
    ctx->last_error = e.what();
    return errc_to_code(e.code());
  } catch (const std::exception &e) {
    ctx->last_error = e.what();
    return IT_ERR_INTERNAL;
  }
}

char *dup_string(const std::string &s) {
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

} // namespace

extern "C" {

it_context *it_context_new(void) { return new it_context{}; }

void it_context_free(it_context *ctx) { delete ctx; }

const char *it_context_last_error(const it_context *ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

int it_context_set_option(it_context *ctx, const char *key, long long value) {
  return guarded(ctx, [&]() -> int {
    check(key != nullptr, Errc::invalid_argument, "option key is null");
    std::string k = key;
    if (k != "oracle_enabled")
      check(value >= 0, Errc::invalid_argument, "option value must be nonnegative");
    if (k == "group_cap") ctx->cfg.group_cap = static_cast<u64>(value);
    else if (k == "search_budget") ctx->cfg.search_budget = static_cast<u64>(value);
    else if (k == "oracle_max_candidates") ctx->cfg.oracle_max_candidates = static_cast<u64>(value);
    else if (k == "max_graph_side") ctx->cfg.max_graph_side = static_cast<u64>(value);
    else if (k == "product_depth") ctx->cfg.product_depth = static_cast<int>(value);
    else if (k == "oracle_enabled") ctx->cfg.oracle_enabled = value != 0;
    else if (k == "jobs") ctx->cfg.jobs = static_cast<int>(value);
    else fail(Errc::invalid_argument, "unknown option: " + k);
    return IT_OK;
  });
}

int it_decide(it_context *ctx, unsigned long long a, unsigned long long b,
              unsigned long long c, it_result **out) {
  return guarded(ctx, [&]() -> int {
    check(out != nullptr, Errc::invalid_argument, "output pointer is null");
    Verdict v = decide(Triple{a, b, c}, ctx->cfg);
    *out = new it_result{std::move(v), {}};
    return IT_OK;
  });
}

int it_oracle(it_context *ctx, unsigned long long a, unsigned long long b,
              unsigned long long c, it_result **out) {
  return guarded(ctx, [&]() -> int {
    check(out != nullptr, Errc::invalid_argument, "output pointer is null");
    check(a >= 1 && b >= 1 && c >= 1, Errc::invalid_argument,
          "triples must have positive entries");
    check(a <= UINT32_MAX && b <= UINT32_MAX, Errc::cap_exceeded,
          "oracle sides exceed representable range");
    OracleResult res = oracle_decide(static_cast<std::uint32_t>(a),
                                     static_cast<std::uint32_t>(b), c, ctx->cfg);
    Verdict v;
    v.triple = Triple{a, b, c};
    v.normalized = false;
    if (res.outcome == OracleOutcome::realizable) {
      v.outcome = Outcome::realizable;
      v.certificate.kind = CertKind::graph;
      v.certificate.triple = v.triple;
      v.certificate.graph = std::move(res.witness);
    } else {
      v.outcome = res.outcome == OracleOutcome::not_realizable ? Outcome::not_realizable
                                                               : Outcome::unknown;
      v.certificate.kind = CertKind::oracle_exhausted;
      v.certificate.triple = v.triple;
      v.certificate.oracle_stats = res.stats;
      v.certificate.oracle_ran = true;
    }
    *out = new it_result{std::move(v), {}};
    return IT_OK;
  });
}

int it_result_outcome(const it_result *r) {
  if (!r) return IT_OUTCOME_UNKNOWN;
  switch (r->verdict.outcome) {
    case Outcome::realizable: return IT_OUTCOME_REALIZABLE;
    case Outcome::not_realizable: return IT_OUTCOME_NOT_REALIZABLE;
    case Outcome::unknown: return IT_OUTCOME_UNKNOWN;
  }
  return IT_OUTCOME_UNKNOWN;
}

int it_result_json(const it_result *r, char **json_out) {
  if (!r || !json_out) return IT_ERR_INVALID_ARGUMENT;
  try {
    if (r->json_cache.empty()) r->json_cache = to_json(r->verdict).dump(2);
    *json_out = dup_string(r->json_cache);
    return IT_OK;
  } catch (...) {
    return IT_ERR_INTERNAL;
  }
}

int it_result_oracle_completed(const it_result *r) {
  if (!r) return 0;
  const Certificate &c = r->verdict.certificate;
  return c.kind == CertKind::oracle_exhausted && c.oracle_stats && c.oracle_stats->completed
             ? 1
             : 0;
}

int it_result_witness(it_context *ctx, const it_result *r, it_graph **out) {
  return guarded(ctx, [&]() -> int {
    check(r != nullptr && out != nullptr, Errc::invalid_argument, "null argument");
    if (r->verdict.outcome != Outcome::realizable) {
      ctx->last_error = "no witness: verdict is " + std::string(to_string(r->verdict.outcome));
      return IT_ERR_NO_WITNESS;
    }
    ReplayOutcome rep = replay_verdict(r->verdict, ctx->cfg);
    if (!rep.ok) {
      ctx->last_error = "certificate replay failed: " + rep.message;
      return IT_ERR_INTERNAL;
    }
    if (!rep.explicit_witness) {
      ctx->last_error = "witness verified symbolically; exceeds the explicit size guard";
      return IT_ERR_CAP_EXCEEDED;
    }
    *out = new it_graph{std::move(*rep.witness)};
    return IT_OK;
  });
}

void it_result_free(it_result *r) { delete r; }

int it_classify_json(it_context *ctx, unsigned a_max, unsigned b_max, char **json_out) {
  return guarded(ctx, [&]() -> int {
    check(json_out != nullptr, Errc::invalid_argument, "output pointer is null");
    check(a_max >= 1 && b_max >= 1, Errc::invalid_argument, "bounds must be positive");
    std::vector<Verdict> rows = classify(a_max, b_max, ctx->cfg);
    nlohmann::json arr = nlohmann::json::array();
    for (const Verdict &v : rows) arr.push_back(to_json(v));
    *json_out = dup_string(arr.dump(2));
    return IT_OK;
  });
}

int it_verify_paper_json(it_context *ctx, const char *only, char **json_out) {
  return guarded(ctx, [&]() -> int {
    check(json_out != nullptr, Errc::invalid_argument, "output pointer is null");
    auto results = run_paper_checks(ctx->cfg, only ? only : "");
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult &r : results)
      arr.push_back({{"name", r.name},
                     {"pass", r.pass},
                     {"detail", r.detail},
                     {"millis", r.millis}});
    *json_out = dup_string(arr.dump(2));
    return IT_OK;
  });
}

int it_graph_parse(it_context *ctx, const char *text, it_graph **out) {
  return guarded(ctx, [&]() -> int {
    check(text != nullptr && out != nullptr, Errc::invalid_argument, "null argument");
    *out = new it_graph{parse_bigraph(text)};
    return IT_OK;
  });
}

int it_graph_serialize(const it_graph *g, char **text_out) {
  if (!g || !text_out) return IT_ERR_INVALID_ARGUMENT;
  *text_out = dup_string(serialize(g->graph));
  return IT_OK;
}

int it_graph_to_dot(const it_graph *g, char **dot_out) {
  if (!g || !dot_out) return IT_ERR_INVALID_ARGUMENT;
  *dot_out = dup_string(to_dot(g->graph));
  return IT_OK;
}

int it_graph_complement(it_context *ctx, const it_graph *g, it_graph **out) {
  return guarded(ctx, [&]() -> int {
    check(g != nullptr && out != nullptr, Errc::invalid_argument, "null argument");
    *out = new it_graph{complement(g->graph)};
    return IT_OK;
  });
}

unsigned it_graph_eta_size(const it_graph *g) { return g ? g->graph.eta_size() : 0; }
unsigned it_graph_kappa_size(const it_graph *g) { return g ? g->graph.kappa_size() : 0; }
unsigned long long it_graph_edge_count(const it_graph *g) {
  return g ? g->graph.edge_count() : 0;
}

int it_graph_aut_order(it_context *ctx, const it_graph *g, unsigned long long *out) {
  return guarded(ctx, [&]() -> int {
    check(g != nullptr && out != nullptr, Errc::invalid_argument, "null argument");
    *out = aut_order(g->graph, ctx->cfg.search_budget, ctx->cfg.group_cap);
    return IT_OK;
  });
}

int it_graph_edge_orbit_count(it_context *ctx, const it_graph *g, unsigned long long *out) {
  return guarded(ctx, [&]() -> int {
    check(g != nullptr && out != nullptr, Errc::invalid_argument, "null argument");
    *out = edge_orbits(g->graph, ctx->cfg.search_budget).size();
    return IT_OK;
  });
}

int it_graph_is_edge_transitive(it_context *ctx, const it_graph *g, int *out) {
  return guarded(ctx, [&]() -> int {
    check(g != nullptr && out != nullptr, Errc::invalid_argument, "null argument");
    *out = is_edge_transitive(g->graph, ctx->cfg.search_budget) ? 1 : 0;
    return IT_OK;
  });
}

int it_graph_canonical_digest(it_context *ctx, const it_graph *g, char **hex_out) {
  return guarded(ctx, [&]() -> int {
    check(g != nullptr && hex_out != nullptr, Errc::invalid_argument, "null argument");
    *hex_out = dup_string(
        certificate_digest(canonical_certificate(g->graph, ctx->cfg.search_budget)));
    return IT_OK;
  });
}

void it_graph_free(it_graph *g) { delete g; }

void it_string_free(char *s) { delete[] s; }

} // extern "C"
