#pragma once

#include <stdexcept>
#include <string>

namespace vcg {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // The input violates a documented precondition.
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  // A computational cap (group order, coset count, ...) was exceeded.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // An internal cross-check failed. Never caused by user input.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    [[noreturn]] inline void invariant_failed(std::string const& what) {
      throw InvariantViolation("invariant violated: " + what);
    }

    inline void ensure(bool cond, std::string const& what) {
      if (!cond) {
        invariant_failed(what);
      }
    }
  }  // namespace detail

}  // namespace vcg
