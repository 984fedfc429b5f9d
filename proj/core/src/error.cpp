#include "hubness/error.hpp"

namespace hubness {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
      return "usage";
    case ErrorKind::data:
      return "data";
    case ErrorKind::numeric:
      return "numeric";
  }
  return "unknown";
}

void throw_usage(const std::string& message) { throw Error(ErrorKind::usage, message); }
void throw_data(const std::string& message) { throw Error(ErrorKind::data, message); }
void throw_numeric(const std::string& message) { throw Error(ErrorKind::numeric, message); }

}  // namespace hubness
