#pragma once

#include <stdexcept>
#include <string>

namespace nzflow {

// Failure codes for operations whose contracts name a specific error condition.
enum class Errc {
  order_cap_exceeded,
  not_automorphism_group,
  odd_degree_vertex,
  not_bipartite,
  not_regular,
  valency_too_small,
  not_connected,
  partition_not_invariant,
  invalid_quotient_flow,
  budget_exceeded,
  parse_error,
  internal_invariant_violation,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace nzflow
