#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "itriple/bigraph.hpp"
#include "itriple/config.hpp"
#include "itriple/oracle.hpp"
#include "itriple/permgroup.hpp"

#include <json.hpp>

namespace itriple {

enum class Outcome { realizable, not_realizable, unknown };

const char *to_string(Outcome o);

enum class CertKind {
  rule,               // named graph-family construction with parameters
  group,              // explicit group construction, replayed via its coset graph
  graph,              // embedded witness graph
  product,            // componentwise product of certified factors
  theorem_refutation, // matched non-realizability criterion
  oracle_exhausted,   // exhaustive enumeration completed (or budget record)
  necessary_failure,  // arithmetic precondition violated
};

const char *to_string(CertKind k);

// Replayable justification of a verdict. `triple` is what this node
// certifies; product factors certify their own sub-triples.
struct Certificate {
  CertKind kind = CertKind::rule;
  std::string name; // rule / construction / theorem / condition name
  std::map<std::string, u64> params;
  Triple triple;
  std::vector<Certificate> factors;
  std::optional<BiGraph> graph;
  std::optional<OracleStats> oracle_stats;
  bool oracle_ran = false; // distinguishes budget exhaustion from a disabled oracle
};

struct Verdict {
  Triple triple;           // as asked (original orientation)
  bool normalized = false; // whether (a, b) were swapped before deciding
  Outcome outcome = Outcome::unknown;
  Certificate certificate; // certifies the normalized orientation
};

nlohmann::json to_json(const Certificate &c);
nlohmann::json to_json(const Verdict &v);
Certificate certificate_from_json(const nlohmann::json &j);
Verdict verdict_from_json(const nlohmann::json &j);

// Reorients a realizability certificate to the swapped triple (b, a, c).
// Constructions record a "transposed" marker parameter; embedded graphs are
// transposed directly; products transpose factorwise.
Certificate transpose_certificate(Certificate c);

struct ReplayOutcome {
  bool ok = false;
  bool explicit_witness = false; // false when verified symbolically (size guard)
  std::string message;
  std::optional<BiGraph> witness;
};

// Re-derives the verdict from the certificate alone: rebuilds witnesses and
// re-checks every hypothesis. Witness graphs exceeding the size guard are
// verified symbolically (hypotheses only).
ReplayOutcome replay_certificate(const Certificate &c, const Config &cfg);

// Additionally checks outcome/certificate coherence and orients the witness
// to the verdict's original (a, b, c).
ReplayOutcome replay_verdict(const Verdict &v, const Config &cfg);

} // namespace itriple
