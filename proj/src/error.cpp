#include "nzflow/error.hpp"

namespace nzflow {

const char* to_string(Errc c) {
  switch (c) {
    case Errc::order_cap_exceeded: return "OrderCapExceeded";
    case Errc::not_automorphism_group: return "NotAutomorphismGroup";
    case Errc::odd_degree_vertex: return "OddDegreeVertex";
    case Errc::not_bipartite: return "NotBipartite";
    case Errc::not_regular: return "NotRegular";
    case Errc::valency_too_small: return "ValencyTooSmall";
    case Errc::not_connected: return "NotConnected";
    case Errc::partition_not_invariant: return "PartitionNotInvariant";
    case Errc::invalid_quotient_flow: return "InvalidQuotientFlow";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_invariant_violation: return "InternalInvariantViolation";
  }
  return "Error";
}

}  // namespace nzflow
