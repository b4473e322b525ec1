#pragma once

#include <stdexcept>
#include <string>

namespace chromlag {

// Typed domain errors. `code` is a stable machine-readable tag (also used by
// the CLI's structured output); `what()` carries the human-readable detail.
enum class errc {
  malformed_permutation,
  not_cubic,
  not_planar,
  vertex_out_of_range,
  edge_out_of_range,
  loop_edge,
  not_divisible,
  too_large,
  not_simple,
  presentation_assertion_failed,
  not_isotropic,
  not_dual,
  not_primitive,
  framing_not_symmetric,
  truncation_mismatch,
  non_unit_constant_term,
  singular_jacobian,
  seed_not_root,
  pole_at_origin,
  elimination_blowup,
  degenerate_configuration,
  face_relation_failed,
  relation_failed,
  triangular_solve_stuck,
  verification_failed,
  convention_error,
  not_closed,
  decomposition_failed,
  io_error,
  bad_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

} // namespace chromlag
