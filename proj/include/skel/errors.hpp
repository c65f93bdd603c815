#ifndef SKEL_ERRORS_HPP
#define SKEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vectors or ideals of different arities were mixed.
struct ArityError : Error {
  using Error::Error;
};

// Ill-formed input text; carries the 1-based line number.
struct ParseError : Error {
  ParseError(int line_number, const std::string& message)
      : Error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct EmptyPosetError : Error {
  using Error::Error;
};

struct ZeroModuleError : Error {
  using Error::Error;
};

}  // namespace skel

#endif
