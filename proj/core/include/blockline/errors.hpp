#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockline {

enum class errc {
  validation,
  io,
  no_element_above,
  no_element_below,
  bracket_failure,
  extraction_failure,
  infeasible,
  cap_exceeded,
  empty_set,
  density_violation,
  membership_violation,
  infeasible_pattern,
  unlabeled_sequence,
  unsupported_primitive,
  internal,
};

std::string_view error_code_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

  // True for errors caused by bad input rather than an internal defect.
  bool user_error() const {
    return code_ != errc::extraction_failure &&
           code_ != errc::membership_violation && code_ != errc::internal;
  }

 private:
  errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(errc code, std::string detail) {
  throw Error(code, std::move(detail));
}

}  // namespace blockline
