#ifndef DAVISFORGE_ERRORS_HPP_
#define DAVISFORGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace davisforge {

// Every failure mode the library reports deliberately.  The CLI maps these
// onto exit codes: input problems -> 2, resource caps -> 3, failed
// verification of a mathematical claim -> 1.
enum class errc {
  unknown_vertex,
  name_collision,
  not_subcomplex,
  ambient_mismatch,
  empty_part,
  not_flag,
  shape_mismatch,
  relation_violation,
  quotient_too_large,
  not_spherical,
  parity_undefined,
  not_q_invariant,
  not_admissible,
  not_connected,
  coset_limit_exceeded,
  inapplicable_cover,
  bad_primes,
  constraint_violated,
  hypothesis_failed,
  verification_failed,
  unknown_example,
  parse_error,
  invalid_input,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace davisforge

#endif
