#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace slabheat {

enum class ErrorCode {
  NonPositiveLength,
  NonPositiveDiffusivity,
  MalformedProfile,
  OutOfDomain,
  ZeroModeIndex,
  QuadratureNonConvergence,
  ModeOutOfRange,
  NonPositiveTime,
  TruncationCapExceeded,
  ProbeOutOfDomain,
  SnapshotNotFound,
  ResourceLimit,
  SingularSystem,
  ConfigError,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception. `payload` carries the best available numeric
/// result where one exists (quadrature best estimate, achievable tail bound
/// at the truncation cap); NaN otherwise.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message,
        double payload = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        payload_(payload) {}

  ErrorCode code() const { return code_; }
  double payload() const { return payload_; }

private:
  ErrorCode code_;
  double payload_;
};

}  // namespace slabheat
