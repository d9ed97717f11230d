#ifndef PI2CUT_ERROR_H_
#define PI2CUT_ERROR_H_

#include <stdexcept>
#include <string>

namespace pi2cut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries a 1-based position when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line = 0, int col = 0)
      : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(col) +
                             ": " + msg
                       : msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class CaptureError : public Error {
 public:
  using Error::Error;
};

// A formula was not of the shape an operation requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class VariableConditionError : public Error {
 public:
  using Error::Error;
};

class CoverFailure : public Error {
 public:
  using Error::Error;
};

class MixedAtomError : public Error {
 public:
  using Error::Error;
};

class NotTautologyError : public Error {
 public:
  using Error::Error;
};

}  // namespace pi2cut

#endif  // PI2CUT_ERROR_H_
