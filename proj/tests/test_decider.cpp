#include <doctest.h>

#include <fstream>
#include <numeric>

#include "itriple/certificate.hpp"
#include "itriple/decider.hpp"
#include "itriple/errors.hpp"
#include "itriple/oracle.hpp"
#include "itriple/verify.hpp"

using namespace itriple;

namespace {
const Config kCfg{};

Verdict run(u64 a, u64 b, u64 c) { return decide(Triple{a, b, c}, kCfg); }

bool replays_to_witness(const Verdict &v) {
  ReplayOutcome r = replay_verdict(v, kCfg);
  return r.ok && r.explicit_witness;
}
}

TEST_SUITE("decider") {

TEST_CASE("check_necessary") {
  CHECK(check_necessary({2, 3, 7}).has_value());  // lcm 6 does not divide 7
  CHECK(check_necessary({3, 3, 12}).has_value()); // 12 > 9
  CHECK_FALSE(check_necessary({5, 5, 15}).has_value());
  CHECK(check_necessary({2, 3, 7})->name == "lcm_divides");
  CHECK(check_necessary({3, 3, 12})->name == "c_le_ab");
}

TEST_CASE("rule_divisor_sandwich") {
  auto c1 = rule_divisor_sandwich({4, 6, 12});
  REQUIRE(c1.has_value());
  CHECK(c1->params.at("e") == 1);
  CHECK(c1->params.at("f") == 2);
  CHECK(c1->params.at("m") == 2);
  CHECK(c1->params.at("n") == 3);

  auto c2 = rule_divisor_sandwich({4, 6, 24});
  REQUIRE(c2.has_value());
  CHECK(c2->params.at("e") == 2);
  CHECK(c2->params.at("f") == 1);

  CHECK_FALSE(rule_divisor_sandwich({5, 5, 15}).has_value()); // 15 does not divide 25
}

TEST_CASE("rule_nminus1") {
  CHECK(rule_nminus1({5, 5, 20}).has_value());
  CHECK(rule_nminus1({5, 10, 40}).has_value());
  CHECK_FALSE(rule_nminus1({5, 5, 15}).has_value());
}

TEST_CASE("rule_phi_prime") {
  CHECK(rule_phi_prime({7, 7, 21}).has_value());  // 3 | phi(7) = 6
  CHECK(rule_phi_prime({5, 5, 10}).has_value());  // 2 | phi(5) = 4
  CHECK_FALSE(rule_phi_prime({8, 8, 24}).has_value()); // 3 does not divide phi(8) = 4
}

TEST_CASE("rule_thm_nminus2") {
  auto r1 = rule_thm_nminus2({5, 5, 15});
  REQUIRE(r1.has_value());
  CHECK(r1->kind == CertKind::theorem_refutation);

  auto r2 = rule_thm_nminus2({5, 10, 30});
  REQUIRE(r2.has_value());
  CHECK(r2->kind == CertKind::rule); // pair_block witness

  auto r3 = rule_thm_nminus2({5, 15, 45});
  REQUIRE(r3.has_value());
  CHECK(r3->kind == CertKind::theorem_refutation);

  auto r4 = rule_thm_nminus2({4, 12, 24}); // even n: product decomposition
  REQUIRE(r4.has_value());
  CHECK(r4->kind == CertKind::product);
  CHECK(replay_certificate(*r4, kCfg).ok);
}

TEST_CASE("rule_thm_prime_window") {
  auto r1 = rule_thm_prime_window({5, 5, 15});
  REQUIRE(r1.has_value());
  CHECK(r1->kind == CertKind::theorem_refutation);

  auto r2 = rule_thm_prime_window({5, 10, 30});
  REQUIRE(r2.has_value());
  CHECK(r2->kind == CertKind::rule);

  auto r3 = rule_thm_prime_window({8, 8, 40});
  REQUIRE(r3.has_value());
  CHECK(r3->kind == CertKind::theorem_refutation);
  CHECK(r3->params.at("p") == 5);
}

TEST_CASE("rule_geometric") {
  auto r1 = rule_geometric({7, 7, 28}, kCfg);
  REQUIRE(r1.has_value());
  CHECK(r1->params.at("q") == 2);
  CHECK(r1->params.at("n") == 3);
  CHECK(r1->params.at("d") == 1);
  CHECK(rule_geometric({3, 3, 6}, kCfg).has_value()); // (q,n,d) = (2,2,1)
  CHECK_FALSE(rule_geometric({5, 5, 15}, kCfg).has_value());
}

TEST_CASE("rule_catalog") {
  CHECK(rule_catalog({8, 8, 24}).has_value());
  CHECK(rule_catalog({10, 10, 30}).has_value());
  CHECK_FALSE(rule_catalog({6, 6, 12}).has_value());
}

TEST_CASE("decompose_product") {
  DecideSession session(kCfg);
  auto p1 = decompose_product({9, 9, 36}, session, kCfg.product_depth);
  REQUIRE(p1.has_value());
  CHECK(replay_certificate(*p1, kCfg).ok);

  auto p2 = decompose_product({10, 5, 20}, session, kCfg.product_depth);
  REQUIRE(p2.has_value());
  Triple prod{1, 1, 1};
  for (const Certificate &f : p2->factors) {
    prod.a *= f.triple.a;
    prod.b *= f.triple.b;
    prod.c *= f.triple.c;
  }
  CHECK(prod == Triple{10, 5, 20});
}

TEST_CASE("decide spot values") {
  CHECK(run(5, 5, 15).outcome == Outcome::not_realizable);
  CHECK(run(1, 1, 1).outcome == Outcome::realizable);
  CHECK(run(7, 7, 28).outcome == Outcome::realizable);
  CHECK(run(2, 3, 7).outcome == Outcome::not_realizable);
  CHECK(run(10, 10, 70).outcome == Outcome::not_realizable);
}

TEST_CASE("decide is symmetric in a and b") {
  DecideSession session(kCfg);
  for (u64 a = 1; a <= 8; ++a)
    for (u64 b = 1; b <= 8; ++b) {
      u64 l = std::lcm(a, b);
      for (u64 c = l; c <= a * b; c += l) {
        Verdict v1 = decide(Triple{a, b, c}, session);
        Verdict v2 = decide(Triple{b, a, c}, session);
        CHECK(v1.outcome == v2.outcome);
      }
    }
}

TEST_CASE("no rule contradicts another on the scanned range") {
  for (u64 a = 1; a <= 10; ++a)
    for (u64 b = a; b <= 10; ++b) {
      u64 l = std::lcm(a, b);
      for (u64 c = l; c <= a * b; c += l) {
        Triple t{a, b, c};
        bool realizable_seen = false, refuted_seen = false;
        auto tally = [&](const std::optional<Certificate> &cert) {
          if (!cert) return;
          if (cert->kind == CertKind::theorem_refutation) refuted_seen = true;
          else realizable_seen = true;
        };
        tally(rule_divisor_sandwich(t));
        tally(rule_catalog(t));
        tally(rule_nminus1(t));
        tally(rule_phi_prime(t));
        tally(rule_thm_nminus2(t));
        tally(rule_thm_prime_window(t));
        tally(rule_geometric(t, kCfg));
        CHECK_FALSE((realizable_seen && refuted_seen));
      }
    }
}

TEST_CASE("refutations come only from the stated sources") {
  std::vector<Verdict> rows = classify(8, 8, kCfg);
  for (const Verdict &v : rows) {
    if (v.outcome != Outcome::not_realizable) continue;
    CHECK((v.certificate.kind == CertKind::theorem_refutation ||
           v.certificate.kind == CertKind::necessary_failure ||
           (v.certificate.kind == CertKind::oracle_exhausted &&
            v.certificate.oracle_stats->completed)));
  }
}

TEST_CASE("product closure of realizable verdicts") {
  DecideSession session(kCfg);
  std::vector<Triple> realizable;
  for (u64 a = 1; a <= 4; ++a)
    for (u64 b = a; b <= 4; ++b) {
      u64 l = std::lcm(a, b);
      for (u64 c = l; c <= a * b; c += l)
        if (decide(Triple{a, b, c}, session).outcome == Outcome::realizable)
          realizable.push_back(Triple{a, b, c});
    }
  for (const Triple &x : realizable)
    for (const Triple &y : realizable) {
      Triple prod{x.a * y.a, x.b * y.b, x.c * y.c};
      if (prod.a > 12 || prod.b > 12 || prod.c > 144) continue;
      CHECK(decide(prod, session).outcome == Outcome::realizable);
    }
}

TEST_CASE("decide falls back to the oracle") {
  // (11,11,44) matches no rule shape and has no proper decomposition; the
  // bounded oracle is the only route, so disabling it yields Unknown.
  Config no_oracle = kCfg;
  no_oracle.oracle_enabled = false;
  Verdict v = decide(Triple{11, 11, 44}, no_oracle);
  CHECK(v.outcome == Outcome::unknown);
  CHECK(v.certificate.kind == CertKind::oracle_exhausted);
  CHECK_FALSE(v.certificate.oracle_ran);
}

TEST_CASE("unknown absorbs budget exhaustion") {
  Config tight = kCfg;
  tight.search_budget = 3;
  tight.oracle_max_candidates = 2;
  Verdict v = decide(Triple{11, 11, 44}, tight);
  CHECK(v.outcome == Outcome::unknown);
  CHECK(v.certificate.oracle_ran);
  REQUIRE(v.certificate.oracle_stats.has_value());
  CHECK_FALSE(v.certificate.oracle_stats->completed);
}

TEST_CASE("classify rows and order") {
  std::vector<Verdict> rows = classify(3, 3, kCfg);
  // Rows filtered to lcm(a,b) | c <= ab, ascending.
  std::vector<Triple> expect = {{1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {2, 1, 2}, {2, 2, 2},
                                {2, 2, 4}, {2, 3, 6}, {3, 1, 3}, {3, 2, 6}, {3, 3, 3},
                                {3, 3, 6}, {3, 3, 9}};
  REQUIRE(rows.size() == expect.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].triple == expect[i]);
  for (const Verdict &v : rows) CHECK(v.outcome == Outcome::realizable);
}

TEST_CASE("classify at 5 refutes exactly (5,5,15)") {
  for (const Verdict &v : classify(5, 5, kCfg)) {
    if (v.triple == Triple{5, 5, 15}) CHECK(v.outcome == Outcome::not_realizable);
    else CHECK(v.outcome == Outcome::realizable);
  }
}

TEST_CASE("classify is independent of the job count") {
  Config parallel = kCfg;
  parallel.jobs = 4;
  std::vector<Verdict> seq = classify(6, 6, kCfg);
  std::vector<Verdict> par = classify(6, 6, parallel);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].triple == par[i].triple);
    CHECK(seq[i].outcome == par[i].outcome);
    CHECK(to_json(seq[i]) == to_json(par[i]));
  }
}

TEST_CASE("named realizable verdicts replay to explicit witnesses") {
  for (Triple t : std::vector<Triple>{{7, 7, 21}, {8, 8, 24}, {9, 9, 27}, {9, 9, 36},
                                      {10, 10, 30}, {10, 5, 20}, {10, 5, 30}}) {
    Verdict v = run(t.a, t.b, t.c);
    REQUIRE(v.outcome == Outcome::realizable);
    CHECK(replays_to_witness(v));
  }
}

TEST_CASE("golden refutation list is frozen in the repository") {
  // The embedded list and the data file must stay in sync.
  std::ifstream in(std::string(ITRIPLE_TEST_DATA_DIR) + "/classify_nr_10.txt");
  REQUIRE(in.good());
  std::vector<Triple> from_file;
  u64 a, b, c;
  while (in >> a >> b >> c) from_file.push_back(Triple{a, b, c});
  CHECK(from_file == golden_refutations_10());
}

} // TEST_SUITE
