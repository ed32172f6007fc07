#ifndef CUTLIFT_ERRORS_HPP
#define CUTLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cutlift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration/search size limits. The CLI maps this to exit code 2.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed text input; carries the 1-based line and the offending token.
class ParseError : public Error {
 public:
  ParseError(int line, std::string token, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message +
              (token.empty() ? "" : " (near '" + token + "')")),
        line(line),
        token(std::move(token)) {}

  int line;
  std::string token;
};

}  // namespace cutlift

#endif
