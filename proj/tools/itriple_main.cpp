// Command-line surface over the itriple C API: decide / witness / classify /
// oracle / graph tools / verify-paper.
//
// Exit codes: 0 decided or succeeded, 1 usage or input error, 2 unknown,
// 3 budget exceeded where distinguishable.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "itriple.h"

namespace {

using nlohmann::json;

struct ContextDeleter {
  void operator()(it_context *ctx) const { it_context_free(ctx); }
};
struct ResultDeleter {
  void operator()(it_result *r) const { it_result_free(r); }
};
struct GraphDeleter {
  void operator()(it_graph *g) const { it_graph_free(g); }
};
using ContextPtr = std::unique_ptr<it_context, ContextDeleter>;
using ResultPtr = std::unique_ptr<it_result, ResultDeleter>;
using GraphPtr = std::unique_ptr<it_graph, GraphDeleter>;

std::string take_string(char *s) {
  std::string out = s ? s : "";
  it_string_free(s);
  return out;
}

int fail_with(const it_context *ctx, const std::string &prefix) {
  std::cerr << "error: " << prefix;
  const char *msg = it_context_last_error(ctx);
  if (msg && *msg) std::cerr << ": " << msg;
  std::cerr << "\n";
  return 1;
}

std::string render_params(const json &params) {
  std::ostringstream out;
  bool first = true;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!first) out << ", ";
    out << it.key() << '=' << it.value();
    first = false;
  }
  return out.str();
}

std::string render_certificate(const json &cert) {
  const std::string kind = cert.at("kind").get<std::string>();
  std::ostringstream out;
  if (kind == "rule") {
    out << cert.at("rule").get<std::string>();
    if (cert.contains("params")) out << '(' << render_params(cert["params"]) << ')';
  } else if (kind == "group") {
    out << "group " << cert.at("construction").get<std::string>();
    if (cert.contains("params")) out << '(' << render_params(cert["params"]) << ')';
  } else if (kind == "graph") {
    out << "explicit graph witness";
  } else if (kind == "product") {
    out << "product[";
    bool first = true;
    for (const auto &f : cert.at("factors")) {
      if (!first) out << " * ";
      out << render_certificate(f);
      first = false;
    }
    out << ']';
  } else if (kind == "theorem_refutation") {
    out << "refutation " << cert.at("theorem").get<std::string>() << '('
        << render_params(cert.at("params")) << ')';
  } else if (kind == "oracle_exhausted") {
    const auto &s = cert.at("stats");
    out << "oracle(generated=" << s.at("generated") << ", unique=" << s.at("unique")
        << ", completed=" << (s.at("completed").get<bool>() ? "yes" : "no")
        << ", ran=" << (s.at("ran").get<bool>() ? "yes" : "no") << ')';
  } else if (kind == "necessary_failure") {
    out << "necessary condition failed: " << cert.at("condition").get<std::string>();
  } else {
    out << kind;
  }
  return out.str();
}

int unknown_exit_code(const json &verdict) {
  // Budget exhaustion is distinguishable from a missing rule or a disabled
  // oracle via the certificate's oracle record.
  const auto &cert = verdict.at("certificate");
  if (cert.at("kind") == "oracle_exhausted" && cert.contains("stats")) {
    const auto &s = cert["stats"];
    if (s.at("ran").get<bool>() && !s.at("completed").get<bool>()) return 3;
  }
  return 2;
}

json result_json(const it_result *res) {
  char *raw = nullptr;
  if (it_result_json(res, &raw) != IT_OK) throw std::runtime_error("result JSON failed");
  return json::parse(take_string(raw));
}

int cmd_decide(it_context *ctx, unsigned long long a, unsigned long long b,
               unsigned long long c, bool as_json) {
  it_result *raw = nullptr;
  if (it_decide(ctx, a, b, c, &raw) != IT_OK) return fail_with(ctx, "decide failed");
  ResultPtr res(raw);
  json v = result_json(res.get());
  if (as_json) {
    std::cout << v.dump(2) << "\n";
  } else {
    std::cout << "triple: (" << a << ", " << b << ", " << c << ")\n";
    std::cout << "outcome: " << v.at("outcome").get<std::string>() << "\n";
    std::cout << "certificate: " << render_certificate(v.at("certificate")) << "\n";
  }
  return it_result_outcome(res.get()) == IT_OUTCOME_UNKNOWN ? unknown_exit_code(v) : 0;
}

int cmd_witness(it_context *ctx, unsigned long long a, unsigned long long b,
                unsigned long long c, const std::string &out_path,
                const std::string &dot_path) {
  it_result *raw = nullptr;
  if (it_decide(ctx, a, b, c, &raw) != IT_OK) return fail_with(ctx, "decide failed");
  ResultPtr res(raw);
  if (it_result_outcome(res.get()) != IT_OUTCOME_REALIZABLE) {
    json v = result_json(res.get());
    std::cerr << "error: no witness, triple is " << v.at("outcome").get<std::string>()
              << "\n";
    return 1;
  }
  it_graph *graw = nullptr;
  if (it_result_witness(ctx, res.get(), &graw) != IT_OK)
    return fail_with(ctx, "witness replay failed");
  GraphPtr g(graw);

  char *text_raw = nullptr;
  it_graph_serialize(g.get(), &text_raw);
  std::string text = take_string(text_raw);

  // The written graph must re-verify before it is reported.
  it_graph *reparsed_raw = nullptr;
  if (it_graph_parse(ctx, text.c_str(), &reparsed_raw) != IT_OK)
    return fail_with(ctx, "witness did not reparse");
  GraphPtr reparsed(reparsed_raw);
  int transitive = 0;
  if (it_graph_is_edge_transitive(ctx, reparsed.get(), &transitive) != IT_OK)
    return fail_with(ctx, "witness verification failed");
  if (!transitive || it_graph_eta_size(reparsed.get()) != a ||
      it_graph_kappa_size(reparsed.get()) != b ||
      it_graph_edge_count(reparsed.get()) != c) {
    std::cerr << "error: replayed witness failed verification\n";
    return 1;
  }

  bool wrote = false;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    out << text;
    wrote = true;
  }
  if (!dot_path.empty()) {
    char *dot_raw = nullptr;
    it_graph_to_dot(g.get(), &dot_raw);
    std::string dot = take_string(dot_raw);
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << dot_path << "\n";
      return 1;
    }
    out << dot;
    wrote = true;
  }
  if (!wrote) std::cout << text;
  return 0;
}

int cmd_classify(it_context *ctx, unsigned a_max, unsigned b_max, bool as_json) {
  char *raw = nullptr;
  if (it_classify_json(ctx, a_max, b_max, &raw) != IT_OK)
    return fail_with(ctx, "classify failed");
  json rows = json::parse(take_string(raw));
  std::size_t realizable = 0, refuted = 0, unknown = 0;
  for (const auto &row : rows) {
    const std::string outcome = row.at("outcome").get<std::string>();
    if (outcome == "realizable") ++realizable;
    else if (outcome == "not_realizable") ++refuted;
    else ++unknown;
  }
  if (as_json) {
    std::cout << rows.dump(2) << "\n";
  } else {
    std::printf("%5s %5s %7s  %-15s %s\n", "a", "b", "c", "outcome", "certificate");
    for (const auto &row : rows) {
      const auto &t = row.at("triple");
      std::printf("%5llu %5llu %7llu  %-15s %s\n", t[0].get<unsigned long long>(),
                  t[1].get<unsigned long long>(), t[2].get<unsigned long long>(),
                  row.at("outcome").get<std::string>().c_str(),
                  render_certificate(row.at("certificate")).c_str());
    }
    std::printf("summary: rows=%zu realizable=%zu not_realizable=%zu unknown=%zu\n",
                rows.size(), realizable, refuted, unknown);
  }
  return unknown == 0 ? 0 : 2;
}

int cmd_oracle(it_context *ctx, unsigned long long a, unsigned long long b,
               unsigned long long c, bool as_json) {
  it_result *raw = nullptr;
  if (it_oracle(ctx, a, b, c, &raw) != IT_OK) return fail_with(ctx, "oracle failed");
  ResultPtr res(raw);
  json v = result_json(res.get());
  if (as_json) {
    std::cout << v.dump(2) << "\n";
  } else {
    std::cout << "triple: (" << a << ", " << b << ", " << c << ")\n";
    std::cout << "outcome: " << v.at("outcome").get<std::string>() << "\n";
    std::cout << "certificate: " << render_certificate(v.at("certificate")) << "\n";
  }
  return it_result_outcome(res.get()) == IT_OUTCOME_UNKNOWN ? 3 : 0;
}

GraphPtr load_graph(it_context *ctx, const std::string &path, int *err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    *err = 1;
    return nullptr;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  it_graph *raw = nullptr;
  if (it_graph_parse(ctx, buffer.str().c_str(), &raw) != IT_OK) {
    *err = fail_with(ctx, "parse failed for " + path);
    return nullptr;
  }
  *err = 0;
  return GraphPtr(raw);
}

int cmd_graph_aut(it_context *ctx, const std::string &path) {
  int err = 0;
  GraphPtr g = load_graph(ctx, path, &err);
  if (!g) return err;
  unsigned long long order = 0, orbits = 0;
  if (it_graph_aut_order(ctx, g.get(), &order) != IT_OK)
    return fail_with(ctx, "automorphism search failed");
  if (it_graph_edge_orbit_count(ctx, g.get(), &orbits) != IT_OK)
    return fail_with(ctx, "edge orbit computation failed");
  std::cout << "aut_order: " << order << "\n";
  std::cout << "edge_orbits: " << orbits << "\n";
  return 0;
}

int cmd_graph_canon(it_context *ctx, const std::string &path) {
  int err = 0;
  GraphPtr g = load_graph(ctx, path, &err);
  if (!g) return err;
  char *raw = nullptr;
  if (it_graph_canonical_digest(ctx, g.get(), &raw) != IT_OK)
    return fail_with(ctx, "canonical form failed");
  std::cout << take_string(raw) << "\n";
  return 0;
}

int cmd_graph_complement(it_context *ctx, const std::string &path,
                         const std::string &out_path) {
  int err = 0;
  GraphPtr g = load_graph(ctx, path, &err);
  if (!g) return err;
  it_graph *raw = nullptr;
  if (it_graph_complement(ctx, g.get(), &raw) != IT_OK)
    return fail_with(ctx, "complement failed");
  GraphPtr comp(raw);
  char *text_raw = nullptr;
  it_graph_serialize(comp.get(), &text_raw);
  std::string text = take_string(text_raw);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    out << text;
  }
  return 0;
}

int cmd_verify_paper(it_context *ctx, const std::string &only, bool as_json,
                     bool timings) {
  char *raw = nullptr;
  if (it_verify_paper_json(ctx, only.empty() ? nullptr : only.c_str(), &raw) != IT_OK)
    return fail_with(ctx, "verification run failed");
  json results = json::parse(take_string(raw));
  bool all_pass = true;
  if (as_json) {
    if (!timings)
      for (auto &r : results) r.erase("millis");
    std::cout << results.dump(2) << "\n";
    for (const auto &r : results) all_pass = all_pass && r.at("pass").get<bool>();
  } else {
    for (const auto &r : results) {
      bool pass = r.at("pass").get<bool>();
      all_pass = all_pass && pass;
      std::cout << (pass ? "PASS" : "FAIL") << ' ' << r.at("name").get<std::string>();
      if (timings) std::printf(" (%.0f ms)", r.at("millis").get<double>());
      const std::string detail = r.at("detail").get<std::string>();
      if (!detail.empty()) std::cout << ": " << detail;
      std::cout << "\n";
    }
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"index-realizability of integer triples (a, b, c), with certificates"};
  app.require_subcommand(1);

  ContextPtr ctx(it_context_new());
  long long group_cap = -1, search_budget = -1, oracle_max = -1;
  app.add_option("--group-cap", group_cap, "max explicit group order");
  app.add_option("--search-budget", search_budget, "automorphism search node budget");
  app.add_option("--oracle-max-candidates", oracle_max, "oracle candidate budget");

  unsigned long long a = 0, b = 0, c = 0;
  bool as_json = false, no_oracle = false, timings = false;
  std::string out_path, dot_path, file_path, only;
  unsigned a_max = 10, b_max = 10;
  long long jobs = 1;

  CLI::App *decide = app.add_subcommand("decide", "decide one triple");
  decide->add_option("a", a, "index [G:H]")->required();
  decide->add_option("b", b, "index [G:K]")->required();
  decide->add_option("c", c, "index [G:H∩K]")->required();
  decide->add_flag("--json", as_json, "machine-readable output");
  decide->add_flag("--no-oracle", no_oracle, "rule pipeline only, skip the graph oracle");

  CLI::App *witness = app.add_subcommand("witness", "write a witness graph for a realizable triple");
  witness->add_option("a", a)->required();
  witness->add_option("b", b)->required();
  witness->add_option("c", c)->required();
  witness->add_option("--out", out_path, "write graph in bipartite text format");
  witness->add_option("--dot", dot_path, "write graph in DOT format");

  CLI::App *classify = app.add_subcommand("classify", "decide every triple in a box");
  classify->add_option("--a-max", a_max, "bound on a")->required();
  classify->add_option("--b-max", b_max, "bound on b")->required();
  classify->add_flag("--json", as_json);
  classify->add_option("--jobs", jobs, "worker threads (output independent of this)");

  CLI::App *oracle = app.add_subcommand("oracle", "exhaustive graph-enumeration decision");
  oracle->add_option("a", a)->required();
  oracle->add_option("b", b)->required();
  oracle->add_option("c", c)->required();
  oracle->add_flag("--json", as_json);

  CLI::App *graph = app.add_subcommand("graph", "bipartite graph tools");
  graph->require_subcommand(1);
  CLI::App *graph_aut = graph->add_subcommand("aut", "automorphism group order and edge orbits");
  graph_aut->add_option("file", file_path, "graph file")->required();
  CLI::App *graph_canon = graph->add_subcommand("canon", "canonical certificate digest");
  graph_canon->add_option("file", file_path, "graph file")->required();
  CLI::App *graph_comp = graph->add_subcommand("complement", "bipartite complement");
  graph_comp->add_option("file", file_path, "graph file")->required();
  graph_comp->add_option("--out", out_path, "output file (default stdout)");

  CLI::App *verify = app.add_subcommand("verify-paper", "run the built-in verification checklist");
  verify->add_option("--only", only, "run a single named check");
  verify->add_flag("--json", as_json);
  verify->add_flag("--timings", timings, "include wall-clock timings in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (group_cap >= 0 && it_context_set_option(ctx.get(), "group_cap", group_cap) != IT_OK)
    return fail_with(ctx.get(), "bad --group-cap");
  if (search_budget >= 0 &&
      it_context_set_option(ctx.get(), "search_budget", search_budget) != IT_OK)
    return fail_with(ctx.get(), "bad --search-budget");
  if (oracle_max >= 0 &&
      it_context_set_option(ctx.get(), "oracle_max_candidates", oracle_max) != IT_OK)
    return fail_with(ctx.get(), "bad --oracle-max-candidates");

  if (decide->parsed()) {
    if (a == 0 || b == 0 || c == 0) {
      std::cerr << "error: triple entries must be positive\n";
      return 1;
    }
    if (no_oracle) it_context_set_option(ctx.get(), "oracle_enabled", 0);
    return cmd_decide(ctx.get(), a, b, c, as_json);
  }
  if (witness->parsed()) {
    if (a == 0 || b == 0 || c == 0) {
      std::cerr << "error: triple entries must be positive\n";
      return 1;
    }
    return cmd_witness(ctx.get(), a, b, c, out_path, dot_path);
  }
  if (classify->parsed()) {
    it_context_set_option(ctx.get(), "jobs", jobs);
    return cmd_classify(ctx.get(), a_max, b_max, as_json);
  }
  if (oracle->parsed()) {
    if (a == 0 || b == 0 || c == 0) {
      std::cerr << "error: triple entries must be positive\n";
      return 1;
    }
    return cmd_oracle(ctx.get(), a, b, c, as_json);
  }
  if (graph->parsed()) {
    if (graph_aut->parsed()) return cmd_graph_aut(ctx.get(), file_path);
    if (graph_canon->parsed()) return cmd_graph_canon(ctx.get(), file_path);
    if (graph_comp->parsed()) return cmd_graph_complement(ctx.get(), file_path, out_path);
  }
  if (verify->parsed()) return cmd_verify_paper(ctx.get(), only, as_json, timings);
  return 1;
}
