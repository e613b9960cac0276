#include "itriple/certificate.hpp"

#include <sstream>

#include "itriple/autgraph.hpp"
#include "itriple/errors.hpp"
#include "itriple/numtheory.hpp"
#include "itriple/realize.hpp"

namespace itriple {

const char *to_string(Outcome o) {
  switch (o) {
    case Outcome::realizable: return "realizable";
    case Outcome::not_realizable: return "not_realizable";
    case Outcome::unknown: return "unknown";
  }
  return "unknown";
}

const char *to_string(CertKind k) {
  switch (k) {
    case CertKind::rule: return "rule";
    case CertKind::group: return "group";
    case CertKind::graph: return "graph";
    case CertKind::product: return "product";
    case CertKind::theorem_refutation: return "theorem_refutation";
    case CertKind::oracle_exhausted: return "oracle_exhausted";
    case CertKind::necessary_failure: return "necessary_failure";
  }
  return "?";
}

namespace {

CertKind kind_from_string(const std::string &s) {
  for (CertKind k : {CertKind::rule, CertKind::group, CertKind::graph, CertKind::product,
                     CertKind::theorem_refutation, CertKind::oracle_exhausted,
                     CertKind::necessary_failure})
    if (s == to_string(k)) return k;
  fail(Errc::parse_error, "unknown certificate kind: " + s);
}

Outcome outcome_from_string(const std::string &s) {
  for (Outcome o : {Outcome::realizable, Outcome::not_realizable, Outcome::unknown})
    if (s == to_string(o)) return o;
  fail(Errc::parse_error, "unknown outcome: " + s);
}

nlohmann::json triple_json(const Triple &t) { return nlohmann::json::array({t.a, t.b, t.c}); }

Triple triple_from_json(const nlohmann::json &j) {
  check(j.is_array() && j.size() == 3, Errc::parse_error, "triple must be a 3-element array");
  Triple t{j[0].get<u64>(), j[1].get<u64>(), j[2].get<u64>()};
  check(t.a >= 1 && t.b >= 1 && t.c >= 1, Errc::parse_error, "triple entries must be positive");
  return t;
}

const char *name_field(CertKind k) {
  switch (k) {
    case CertKind::rule: return "rule";
    case CertKind::group: return "construction";
    case CertKind::theorem_refutation: return "theorem";
    case CertKind::necessary_failure: return "condition";
    default: return nullptr;
  }
}

} // namespace

nlohmann::json to_json(const Certificate &c) {
  nlohmann::json j;
  j["kind"] = to_string(c.kind);
  j["triple"] = triple_json(c.triple);
  if (const char *field = name_field(c.kind)) j[field] = c.name;
  if (!c.params.empty()) j["params"] = c.params;
  if (c.kind == CertKind::product) {
    nlohmann::json factors = nlohmann::json::array();
    for (const Certificate &f : c.factors) factors.push_back(to_json(f));
    j["factors"] = std::move(factors);
  }
  if (c.kind == CertKind::graph) {
    check(c.graph.has_value(), Errc::internal_check, "graph certificate without a graph");
    j["bigraph"] = serialize(*c.graph);
  }
  if (c.kind == CertKind::oracle_exhausted) {
    const OracleStats stats = c.oracle_stats.value_or(OracleStats{});
    j["stats"] = nlohmann::json{{"generated", stats.graphs_generated},
                  {"unique", stats.graphs_after_dedup},
                  {"nodes", stats.nodes_explored},
                  {"completed", stats.completed},
                  {"ran", c.oracle_ran}};
  }
  return j;
}

nlohmann::json to_json(const Verdict &v) {
  nlohmann::json j;
  j["triple"] = triple_json(v.triple);
  j["outcome"] = to_string(v.outcome);
  j["normalized"] = v.normalized;
  j["certificate"] = to_json(v.certificate);
  return j;
}

Certificate certificate_from_json(const nlohmann::json &j) {
  check(j.is_object(), Errc::parse_error, "certificate must be an object");
  Certificate c;
  c.kind = kind_from_string(j.at("kind").get<std::string>());
  c.triple = triple_from_json(j.at("triple"));
  if (const char *field = name_field(c.kind)) c.name = j.at(field).get<std::string>();
  if (j.contains("params"))
    c.params = j.at("params").get<std::map<std::string, u64>>();
  if (c.kind == CertKind::product)
    for (const auto &f : j.at("factors")) c.factors.push_back(certificate_from_json(f));
  if (c.kind == CertKind::graph) c.graph = parse_bigraph(j.at("bigraph").get<std::string>());
  if (c.kind == CertKind::oracle_exhausted) {
    const auto &s = j.at("stats");
    OracleStats stats;
    stats.graphs_generated = s.at("generated").get<u64>();
    stats.graphs_after_dedup = s.at("unique").get<u64>();
    stats.nodes_explored = s.at("nodes").get<u64>();
    stats.completed = s.at("completed").get<bool>();
    c.oracle_stats = stats;
    c.oracle_ran = s.at("ran").get<bool>();
  }
  return c;
}

Verdict verdict_from_json(const nlohmann::json &j) {
  Verdict v;
  v.triple = triple_from_json(j.at("triple"));
  v.outcome = outcome_from_string(j.at("outcome").get<std::string>());
  v.normalized = j.at("normalized").get<bool>();
  v.certificate = certificate_from_json(j.at("certificate"));
  return v;
}

Certificate transpose_certificate(Certificate c) {
  std::swap(c.triple.a, c.triple.b);
  if (c.kind == CertKind::product) {
    for (Certificate &f : c.factors) f = transpose_certificate(std::move(f));
  } else if (c.kind == CertKind::graph) {
    if (c.graph) c.graph = transpose(*c.graph);
  } else {
    c.params["transposed"] ^= 1;
    if (c.params["transposed"] == 0) c.params.erase("transposed");
  }
  return c;
}

namespace {

u64 param(const Certificate &c, const std::string &key) {
  auto it = c.params.find(key);
  check(it != c.params.end(), Errc::parse_error,
        "certificate missing parameter '" + key + "'");
  return it->second;
}

bool is_transposed(const Certificate &c) {
  auto it = c.params.find("transposed");
  return it != c.params.end() && it->second != 0;
}

Triple oriented(const Triple &natural, bool transposed) {
  return transposed ? Triple{natural.b, natural.a, natural.c} : natural;
}

ReplayOutcome replay_fail(const std::string &msg) {
  ReplayOutcome r;
  r.ok = false;
  r.message = msg;
  return r;
}

ReplayOutcome replay_symbolic(const std::string &msg) {
  ReplayOutcome r;
  r.ok = true;
  r.explicit_witness = false;
  r.message = msg;
  return r;
}

ReplayOutcome replay_witness(BiGraph g) {
  ReplayOutcome r;
  r.ok = true;
  r.explicit_witness = true;
  r.witness = std::move(g);
  return r;
}

bool within_guard(const Triple &t, const Config &cfg) {
  return t.a <= cfg.max_graph_side && t.b <= cfg.max_graph_side &&
         t.c <= checked_mul(cfg.max_graph_side, 64);
}

// Builds the family graph for a realizable leaf certificate after re-checking
// its arithmetic hypotheses. Returns symbolic success past the size guard.
ReplayOutcome replay_rule(const Certificate &c, const Config &cfg) {
  const Triple &t = c.triple;
  const bool tr = is_transposed(c);
  auto finish = [&](BiGraph g) {
    return replay_witness(tr ? transpose(g) : std::move(g));
  };
  if (c.name == "complete_bipartite") {
    u64 a = param(c, "a"), b = param(c, "b");
    if (oriented(Triple{a, b, checked_mul(a, b)}, tr) != t)
      return replay_fail("complete_bipartite parameters do not match the triple");
    if (!within_guard(t, cfg)) return replay_symbolic("verified symbolically (size guard)");
    return finish(complete_bipartite(static_cast<std::uint32_t>(a),
                                     static_cast<std::uint32_t>(b)));
  }
  if (c.name == "perfect_matching") {
    u64 n = param(c, "n");
    if (Triple{n, n, n} != t)
      return replay_fail("perfect_matching parameters do not match the triple");
    if (!within_guard(t, cfg)) return replay_symbolic("verified symbolically (size guard)");
    return finish(perfect_matching(static_cast<std::uint32_t>(n)));
  }
  if (c.name == "matching_complement") {
    u64 n = param(c, "n");
    if (n < 2 || Triple{n, n, checked_mul(n, n - 1)} != t)
      return replay_fail("matching_complement parameters do not match the triple");
    if (!within_guard(t, cfg)) return replay_symbolic("verified symbolically (size guard)");
    return finish(matching_complement(static_cast<std::uint32_t>(n)));
  }
  if (c.name == "pair_block") {
    u64 n = param(c, "n"), l = param(c, "l");
    if (n < 3 || (2 * l) % (n - 1) != 0)
      return replay_fail("pair_block hypothesis (n-1) | 2l fails");
    if (oriented(Triple{n, checked_mul(n, l), checked_mul(n, checked_mul(n - 2, l))}, tr) != t)
      return replay_fail("pair_block parameters do not match the triple");
    if (!within_guard(t, cfg)) return replay_symbolic("verified symbolically (size guard)");
    return finish(pair_block_complement(static_cast<std::uint32_t>(n), l));
  }
  if (c.name == "p_subsets") {
    u64 n = param(c, "n"), p = param(c, "p"), mult = param(c, "mult");
    if (!is_prime(p) || p >= n) return replay_fail("p_subsets requires a prime p < n");
    u64 count = binomial(n, p);
    if (oriented(Triple{n, checked_mul(count, mult),
                        checked_mul(p, checked_mul(count, mult))}, tr) != t)
      return replay_fail("p_subsets parameters do not match the triple");
    if (!within_guard(t, cfg)) return replay_symbolic("verified symbolically (size guard)");
    return finish(p_subsets_graph(static_cast<std::uint32_t>(n),
                                  static_cast<std::uint32_t>(p), mult));
  }
  if (c.name == "subspace") {
    u64 q = param(c, "q"), n = param(c, "n"), d = param(c, "d");
    if (!is_prime(q) || d < 1 || d >= n) return replay_fail("subspace requires prime q, 0 < d < n");
    u64 side = q_binomial(n, d, q);
    u64 degree = checked_pow(q, static_cast<unsigned>(d * (n - d)));
    if (Triple{side, side, checked_mul(degree, side)} != t)
      return replay_fail("subspace parameters do not match the triple");
    if (!within_guard(t, cfg)) return replay_symbolic("verified symbolically (size guard)");
    return finish(subspace_complement_graph(q, static_cast<unsigned>(n),
                                            static_cast<unsigned>(d), cfg.max_graph_side));
  }
  return replay_fail("unknown rule certificate: " + c.name);
}

ReplayOutcome replay_group(const Certificate &c, const Config &cfg) {
  const bool tr = is_transposed(c);
  GroupTriple gt;
  if (c.name == "affine") {
    u64 n = param(c, "n"), p = param(c, "p");
    if (!is_prime(p) || euler_phi(n) % p != 0)
      return replay_fail("affine hypothesis p | phi(n) fails");
    if (Triple{n, n, checked_mul(n, p)} != c.triple)
      return replay_fail("affine parameters do not match the triple");
    if (checked_mul(n, p) > cfg.group_cap)
      return replay_symbolic("verified symbolically (group cap)");
    gt = semidirect_affine(static_cast<unsigned>(n), static_cast<unsigned>(p), cfg.group_cap);
  } else if (c.name == "s4_sylow") {
    gt = s4_sylow_triple(cfg.group_cap);
  } else if (c.name == "s5_two_subsets") {
    gt = s5_two_subsets_triple(cfg.group_cap);
  } else {
    return replay_fail("unknown group construction: " + c.name);
  }
  if (oriented(triple_indices(gt), tr) != c.triple)
    return replay_fail("group construction indices do not match the certified triple");
  BiGraph g = coset_intersection_graph(gt, cfg.group_cap).graph;
  return replay_witness(tr ? transpose(g) : std::move(g));
}

ReplayOutcome replay_node(const Certificate &c, const Config &cfg);

ReplayOutcome replay_product(const Certificate &c, const Config &cfg) {
  if (c.factors.empty()) return replay_fail("product certificate with no factors");
  Triple acc{1, 1, 1};
  std::optional<BiGraph> graph;
  bool symbolic = false;
  for (const Certificate &f : c.factors) {
    ReplayOutcome sub = replay_node(f, cfg);
    if (!sub.ok) return sub;
    acc = Triple{checked_mul(acc.a, f.triple.a), checked_mul(acc.b, f.triple.b),
                 checked_mul(acc.c, f.triple.c)};
    if (!sub.explicit_witness || symbolic) {
      symbolic = true;
      continue;
    }
    graph = graph ? tensor_product(*graph, *sub.witness) : std::move(*sub.witness);
  }
  if (acc != c.triple)
    return replay_fail("product factors do not multiply to the certified triple");
  if (symbolic || !within_guard(c.triple, cfg))
    return replay_symbolic("verified symbolically (size guard)");
  return replay_witness(std::move(*graph));
}

ReplayOutcome replay_refutation(const Certificate &c) {
  const Triple &t = c.triple;
  if (c.name == "n_minus_2") {
    u64 n = param(c, "n"), l = param(c, "l");
    if (n <= 2 || Triple{n, checked_mul(n, l), checked_mul(n, checked_mul(n - 2, l))} != t)
      return replay_fail("n_minus_2 shape does not match");
    if (n % 2 == 0) return replay_fail("n_minus_2 requires odd n");
    if ((2 * l) % (n - 1) == 0) return replay_fail("n_minus_2 requires (n-1) not dividing 2l");
    ReplayOutcome r;
    r.ok = true;
    r.message = "refutation hypotheses re-checked";
    return r;
  }
  if (c.name == "prime_window") {
    u64 n = param(c, "n"), l = param(c, "l"), p = param(c, "p");
    if (!is_prime(p) || !(p + 1 < n && n < 2 * p))
      return replay_fail("prime_window requires prime p with p+1 < n < 2p");
    if (Triple{n, checked_mul(n, l), checked_mul(n, checked_mul(p, l))} != t)
      return replay_fail("prime_window shape does not match");
    u64 count = 0; // 0 encodes a binomial beyond 64 bits, which divides nothing here
    try {
      count = binomial(n, p);
    } catch (const Error &) {
    }
    if (count != 0 && checked_mul(n, l) % count == 0)
      return replay_fail("prime_window requires C(n,p) not dividing nl");
    ReplayOutcome r;
    r.ok = true;
    r.message = "refutation hypotheses re-checked";
    return r;
  }
  return replay_fail("unknown theorem refutation: " + c.name);
}

ReplayOutcome replay_necessary(const Certificate &c) {
  const Triple &t = c.triple;
  auto [g, l] = gcd_lcm(t.a, t.b);
  (void)g;
  if (c.name == "lcm_divides") {
    if (t.c % l == 0) return replay_fail("lcm(a,b) does divide c");
  } else if (c.name == "c_le_ab") {
    if (t.c <= checked_mul(t.a, t.b)) return replay_fail("c <= ab holds");
  } else {
    return replay_fail("unknown necessary condition: " + c.name);
  }
  ReplayOutcome r;
  r.ok = true;
  r.message = "necessary-condition failure re-checked";
  return r;
}

ReplayOutcome replay_node(const Certificate &c, const Config &cfg) {
  switch (c.kind) {
    case CertKind::rule: return replay_rule(c, cfg);
    case CertKind::group: return replay_group(c, cfg);
    case CertKind::graph: {
      check(c.graph.has_value(), Errc::parse_error, "graph certificate without a graph");
      return replay_witness(*c.graph);
    }
    case CertKind::product: return replay_product(c, cfg);
    case CertKind::theorem_refutation: return replay_refutation(c);
    case CertKind::necessary_failure: return replay_necessary(c);
    case CertKind::oracle_exhausted: {
      ReplayOutcome r;
      r.ok = c.oracle_stats.has_value();
      r.message = r.ok ? "oracle run recorded (re-run not attempted)"
                       : "oracle certificate without stats";
      return r;
    }
  }
  return replay_fail("unhandled certificate kind");
}

} // namespace

ReplayOutcome replay_certificate(const Certificate &c, const Config &cfg) {
  ReplayOutcome r = replay_node(c, cfg);
  if (!r.ok || !r.explicit_witness) return r;
  const BiGraph &g = *r.witness;
  const Triple &t = c.triple;
  if (g.eta_size() != t.a || g.kappa_size() != t.b || g.edge_count() != t.c)
    return replay_fail("witness graph parameters differ from " + to_string(t));
  if (!is_biregular(g, static_cast<std::uint32_t>(t.c / t.a),
                    static_cast<std::uint32_t>(t.c / t.b)))
    return replay_fail("witness graph is not biregular");
  if (!is_edge_transitive(g, cfg.search_budget))
    return replay_fail("witness graph is not edge-transitive");
  return r;
}

ReplayOutcome replay_verdict(const Verdict &v, const Config &cfg) {
  Triple expect = v.normalized ? Triple{v.triple.b, v.triple.a, v.triple.c} : v.triple;
  if (v.certificate.triple != expect &&
      !(v.outcome == Outcome::unknown))
    return replay_fail("certificate triple does not match the verdict triple");

  switch (v.outcome) {
    case Outcome::realizable:
      if (v.certificate.kind == CertKind::theorem_refutation ||
          v.certificate.kind == CertKind::necessary_failure)
        return replay_fail("realizable verdict with a refutation certificate");
      break;
    case Outcome::not_realizable:
      if (v.certificate.kind != CertKind::theorem_refutation &&
          v.certificate.kind != CertKind::necessary_failure &&
          !(v.certificate.kind == CertKind::oracle_exhausted && v.certificate.oracle_stats &&
            v.certificate.oracle_stats->completed))
        return replay_fail("not_realizable verdict lacks a refutation or completed oracle run");
      break;
    case Outcome::unknown:
      break;
  }

  ReplayOutcome r = replay_certificate(v.certificate, cfg);
  if (r.ok && r.explicit_witness && v.normalized) r.witness = transpose(*r.witness);
  return r;
}

} // namespace itriple
