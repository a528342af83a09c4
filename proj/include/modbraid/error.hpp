#ifndef MODBRAID_ERROR_HPP_
#define MODBRAID_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace modbraid {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class DegreeMismatch : public Error {
   public:
    using Error::Error;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // A winding vector was requested for a braid whose permutation is not
  // the identity.
  class NotPure : public Error {
   public:
    using Error::Error;
  };

  // A pure braid produced an odd crossing count. Unreachable unless the
  // crossing sweep is broken.
  class OddCrossing : public Error {
   public:
    using Error::Error;
  };

  class UnsupportedScale : public Error {
   public:
    using Error::Error;
  };

  class OddScale : public Error {
   public:
    using Error::Error;
  };

  class SearchSpaceTooLarge : public Error {
   public:
    using Error::Error;
  };

  class Overflow : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, size_t line, size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + msg),
          _line(line),
          _column(column) {}

    size_t line() const noexcept {
      return _line;
    }
    size_t column() const noexcept {
      return _column;
    }

   private:
    size_t _line;
    size_t _column;
  };

}  // namespace modbraid

#endif  // MODBRAID_ERROR_HPP_
