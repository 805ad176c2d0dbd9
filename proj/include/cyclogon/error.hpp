#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cyclogon {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  CollinearSeed,
  NotConcyclic,
  DuplicateVertices,
  NonIntegerWinding,
  InvalidProfile,
  DegenerateProfile,
  DegenerateEdge,
  MarginalSign,
  MarginalOffset,
  NotApplicable,
  NoReduction,
  NoWitness,
  AllCollinear,
  Unsatisfiable,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Failure raised by every fallible operation in the library.
///
/// `index_pair` names the offending vertices when the failure is local
/// (duplicate vertices, a collapsed edge); `index` and `deviation` carry the
/// worst offender for tolerance failures such as NotConcyclic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  std::optional<std::pair<std::size_t, std::size_t>> index_pair;
  std::optional<std::size_t> index;
  std::optional<double> deviation;

 private:
  ErrorCode code_;
};

}  // namespace cyclogon
