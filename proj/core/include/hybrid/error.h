#ifndef HYBRID_ERROR_H_
#define HYBRID_ERROR_H_

#include <stdexcept>
#include <string>

namespace hybrid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Line is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InvalidReferenceError : public Error {
 public:
  using Error::Error;
};

class IllFormedPhraseError : public Error {
 public:
  using Error::Error;
};

class NonProjectiveError : public Error {
 public:
  using Error::Error;
};

class IllegalTransitionError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hybrid

#endif  // HYBRID_ERROR_H_
