#include "davisforge/errors.hpp"

namespace davisforge {

const char* errc_name(errc c) {
  switch (c) {
    case errc::unknown_vertex: return "UNKNOWN_VERTEX";
    case errc::name_collision: return "NAME_COLLISION";
    case errc::not_subcomplex: return "NOT_SUBCOMPLEX";
    case errc::ambient_mismatch: return "AMBIENT_MISMATCH";
    case errc::empty_part: return "EMPTY_PART";
    case errc::not_flag: return "NOT_FLAG";
    case errc::shape_mismatch: return "SHAPE_MISMATCH";
    case errc::relation_violation: return "RELATION_VIOLATION";
    case errc::quotient_too_large: return "QUOTIENT_TOO_LARGE";
    case errc::not_spherical: return "NOT_SPHERICAL";
    case errc::parity_undefined: return "PARITY_UNDEFINED";
    case errc::not_q_invariant: return "NOT_Q_INVARIANT";
    case errc::not_admissible: return "NOT_ADMISSIBLE";
    case errc::not_connected: return "NOT_CONNECTED";
    case errc::coset_limit_exceeded: return "COSET_LIMIT_EXCEEDED";
    case errc::inapplicable_cover: return "INAPPLICABLE_COVER";
    case errc::bad_primes: return "BAD_PRIMES";
    case errc::constraint_violated: return "CONSTRAINT_VIOLATED";
    case errc::hypothesis_failed: return "HYPOTHESIS_FAILED";
    case errc::verification_failed: return "VERIFICATION_FAILED";
    case errc::unknown_example: return "UNKNOWN_EXAMPLE";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::invalid_input: return "INVALID_INPUT";
  }
  return "UNKNOWN_ERROR";
}

}  // namespace davisforge
