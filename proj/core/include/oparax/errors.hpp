#ifndef OPARAX_ERRORS_HPP
#define OPARAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oparax {

// Error conditions surfaced by the library. Names follow the conditions they
// report; the CLI maps any of these to exit code 1.
enum class errc {
  non_unit_direction,
  non_positive_epsilon,
  non_positive_nu,
  zero_ky,
  non_finite_multiplier,
  branch_cut,
  support_violation,
  grid_mismatch,
  wrong_sign_ky,
  truncation_too_short,
  pointwise_undefined,
  io_error,
  bad_magic,
  length_mismatch,
  unknown_key,
  missing_key,
  type_error,
  invalid_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace oparax

#endif
