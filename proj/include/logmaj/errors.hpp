#pragma once

#include <stdexcept>
#include <string>

namespace logmaj {

enum class errc {
  non_hermitian,
  convergence_failure,
  singular_negative_power,
  singular_log,
  function_singular_at_zero,
  bad_power,
  length_mismatch,
  negative_entry,
  bad_spec,
  bad_exponents,
  not_weakly_majorized,
  not_log_majorized,
  prerequisite_violated,
  bad_theta,
  bad_tol,
  measure_invalid,
  parse_error,
  certification_error,
  internal_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace logmaj
