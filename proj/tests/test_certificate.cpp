#include <doctest.h>

#include "itriple/certificate.hpp"
#include "itriple/decider.hpp"
#include "itriple/oracle.hpp"
#include "itriple/realize.hpp"

using namespace itriple;

namespace {
const Config kCfg{};
}

TEST_SUITE("certificate") {

TEST_CASE("verdict JSON schema") {
  Verdict v = decide(Triple{5, 5, 15}, kCfg);
  nlohmann::json j = to_json(v);
  CHECK(j.at("triple") == nlohmann::json::array({5, 5, 15}));
  CHECK(j.at("outcome") == "not_realizable");
  CHECK(j.at("certificate").at("kind") == "theorem_refutation");
  CHECK(j.at("certificate").at("theorem") == "n_minus_2");

  Verdict r = decide(Triple{7, 7, 28}, kCfg);
  nlohmann::json jr = to_json(r);
  CHECK(jr.at("outcome") == "realizable");
  CHECK(jr.at("certificate").at("kind") == "rule");
  CHECK(jr.at("certificate").at("rule") == "subspace");
}

TEST_CASE("JSON round-trips through the verifier") {
  for (Triple t : std::vector<Triple>{{1, 1, 1}, {5, 5, 15}, {7, 7, 28}, {9, 9, 36},
                                      {10, 5, 20}, {2, 3, 7}, {4, 12, 24}}) {
    Verdict v = decide(t, kCfg);
    Verdict back = verdict_from_json(to_json(v));
    CHECK(to_json(back) == to_json(v));
    ReplayOutcome rep = replay_verdict(back, kCfg);
    CHECK(rep.ok);
    if (v.outcome == Outcome::realizable) {
      REQUIRE(rep.explicit_witness);
      CHECK(rep.witness->eta_size() == t.a);
      CHECK(rep.witness->kappa_size() == t.b);
      CHECK(rep.witness->edge_count() == t.c);
    }
  }
}

TEST_CASE("graph certificates embed the text format") {
  OracleResult res = oracle_decide(3, 3, 6, kCfg);
  REQUIRE(res.outcome == OracleOutcome::realizable);
  Certificate cert;
  cert.kind = CertKind::graph;
  cert.triple = Triple{3, 3, 6};
  cert.graph = res.witness;
  nlohmann::json j = to_json(cert);
  CHECK(j.at("kind") == "graph");
  BiGraph g = parse_bigraph(j.at("bigraph").get<std::string>());
  CHECK(g == *res.witness);
  ReplayOutcome rep = replay_certificate(certificate_from_json(j), kCfg);
  CHECK(rep.ok);
  CHECK(rep.explicit_witness);
}

TEST_CASE("tampered certificates are rejected on replay") {
  Verdict v = decide(Triple{7, 7, 21}, kCfg);
  REQUIRE(v.outcome == Outcome::realizable);

  Verdict wrong_triple = v;
  wrong_triple.certificate.triple = Triple{7, 7, 22};
  CHECK_FALSE(replay_verdict(wrong_triple, kCfg).ok);

  nlohmann::json j = to_json(v);
  // Claim a different prime in the affine construction.
  nlohmann::json &cert = j.at("certificate");
  if (cert.at("kind") == "group") cert.at("params")["p"] = 5;
  else cert.at("factors")[0].at("params")["p"] = 5;
  CHECK_FALSE(replay_certificate(certificate_from_json(cert), kCfg).ok);

  Verdict refuted = decide(Triple{5, 5, 15}, kCfg);
  Verdict lying = refuted;
  lying.certificate.params["l"] = 2; // (5,10,30) is realizable, hypotheses fail
  CHECK_FALSE(replay_verdict(lying, kCfg).ok);
}

TEST_CASE("product certificates must multiply out") {
  Verdict v = decide(Triple{9, 9, 36}, kCfg);
  REQUIRE(v.certificate.kind == CertKind::product);
  Certificate broken = v.certificate;
  broken.factors.pop_back();
  CHECK_FALSE(replay_certificate(broken, kCfg).ok);
}

TEST_CASE("transposed certificates replay to transposed witnesses") {
  Verdict v = decide(Triple{5, 10, 30}, kCfg);
  REQUIRE(v.outcome == Outcome::realizable);
  Certificate swapped = transpose_certificate(v.certificate);
  CHECK(swapped.triple == Triple{10, 5, 30});
  ReplayOutcome rep = replay_certificate(swapped, kCfg);
  REQUIRE(rep.ok);
  REQUIRE(rep.explicit_witness);
  CHECK(rep.witness->eta_size() == 10);
  CHECK(rep.witness->kappa_size() == 5);
  CHECK(transpose_certificate(std::move(swapped)).triple == Triple{5, 10, 30});
}

TEST_CASE("normalized verdicts orient the witness to the original triple") {
  Verdict v = decide(Triple{10, 5, 30}, kCfg);
  REQUIRE(v.outcome == Outcome::realizable);
  CHECK(v.normalized);
  ReplayOutcome rep = replay_verdict(v, kCfg);
  REQUIRE(rep.ok);
  REQUIRE(rep.explicit_witness);
  CHECK(rep.witness->eta_size() == 10);
  CHECK(rep.witness->kappa_size() == 5);
  CHECK(rep.witness->edge_count() == 30);
}

TEST_CASE("symbolic verification past the size guard") {
  Config tiny = kCfg;
  tiny.max_graph_side = 4;
  Verdict v = decide(Triple{7, 7, 28}, tiny);
  REQUIRE(v.outcome == Outcome::realizable);
  ReplayOutcome rep = replay_verdict(v, tiny);
  CHECK(rep.ok);
  CHECK_FALSE(rep.explicit_witness);
}

} // TEST_SUITE
