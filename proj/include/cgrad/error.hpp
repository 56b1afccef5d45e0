#pragma once

#include <stdexcept>
#include <string>

namespace cgrad {

enum class ErrorCode {
  field_mismatch,
  division_by_zero,
  no_such_root,
  bad_characteristic,
  parse_error,
  unknown_generator,
  group_mismatch,
  not_a_group,
  not_a_homomorphism,
  not_surjective,
  unsupported_shape,
  cone_does_not_commute,
  certificate_failure,
  not_associative,
  not_a_basis,
  zero_element,
  shape_mismatch,
  broken_chain,
  infinite_without_radius,
  star_mismatch,
  not_connected,
  action_failure,
  mismatch_bug,
  check_failure,
  unknown_tag,
  invalid_argument,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status and a machine-readable record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Three-valued answer for questions that are only semi-decidable here.
enum class Tri { no, yes, unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::no:
      return "no";
    case Tri::yes:
      return "yes";
    default:
      return "unknown";
  }
}

}  // namespace cgrad
