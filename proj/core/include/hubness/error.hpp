#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hubness {

// Broad failure classes; the CLI maps each to its own exit status.
enum class ErrorKind {
  usage,    // bad arguments or incompatible options
  data,     // malformed or inconsistent input files
  numeric,  // a numeric invariant does not hold (e.g. zero variance)
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void throw_usage(const std::string& message);
[[noreturn]] void throw_data(const std::string& message);
[[noreturn]] void throw_numeric(const std::string& message);

}  // namespace hubness
