#pragma once

#include <stdexcept>
#include <string>

namespace braidmat {

// Machine-readable failure codes surfaced through Error::code() and the CLI's
// JSON error reports.
enum class ErrorCode {
  MismatchedStrandCount,
  OffsetOutOfRange,
  NonZeroDiagonal,
  StrandCountTooLarge,
  BlackEdgePresent,
  IllegalMove,
  IndexOutOfRange,
  InvalidParameters,
  NotT0,
  SumNotT0,
  RealizationFailed,
  VertexNotFound,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  // For NotT0-style failures: the witnessing index triple i<j<k (0 when unset).
  Error(ErrorCode code, std::string message, int i, int j, int k)
      : std::runtime_error(std::move(message)), code_(code), i_(i), j_(j), k_(k) {}

  ErrorCode code() const noexcept { return code_; }
  int witness_i() const noexcept { return i_; }
  int witness_j() const noexcept { return j_; }
  int witness_k() const noexcept { return k_; }

private:
  ErrorCode code_;
  int i_ = 0, j_ = 0, k_ = 0;
};

}  // namespace braidmat
