#pragma once

#include <stdexcept>
#include <string>

namespace graphicahedron {

enum class ErrorKind {
  parse,                   // malformed graph text or CLI graph source
  invalid_argument,        // loop edge, unknown preset, out-of-range index
  size_mismatch,           // permutations over different degrees
  disconnected,            // construction requires a connected graph
  capacity,                // enumeration bound exceeded
  internal_inconsistency,  // two independent routes disagree
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace graphicahedron
