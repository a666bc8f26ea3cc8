#pragma once

#include <stdexcept>
#include <string>

namespace phasekit {

// Requested basis size cannot represent the state or operator power faithfully.
struct TruncationInsufficient : std::runtime_error {
  explicit TruncationInsufficient(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& msg) : std::out_of_range(msg) {}
};

struct UnknownOperator : std::invalid_argument {
  explicit UnknownOperator(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace phasekit
