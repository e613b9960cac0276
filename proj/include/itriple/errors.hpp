#pragma once

#include <stdexcept>
#include <string>

namespace itriple {

enum class Errc {
  invalid_argument,
  out_of_range,
  duplicate_edge,
  degree_mismatch,
  parse_error,
  cap_exceeded,
  budget_exceeded,
  no_such_unit,
  divisibility_violated,
  non_prime_field,
  not_in_group,
  overflow,
  internal_check,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &msg) { throw Error(code, msg); }

inline void check(bool ok, Errc code, const std::string &msg) {
  if (!ok) fail(code, msg);
}

} // namespace itriple
