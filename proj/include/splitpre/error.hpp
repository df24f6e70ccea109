#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitpre {

  // Base class of everything the library throws on a contract violation.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An exhaustive enumeration or function-space sweep would exceed its cap.
  class BoundExceeded : public Error {
   public:
    using Error::Error;
  };

  // Arrows that are not composable, or endpoints that do not line up.
  class SizeMismatch : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside of the hypothesis it is defined under.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)),
          _offset(offset) {}

    std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

  // Ill-typed derivation: composite endpoints do not match.
  class TypeError : public Error {
   public:
    using Error::Error;
  };

  // A constructor or connective that the active fragment does not contain.
  class FragmentError : public Error {
   public:
    using Error::Error;
  };

  // Two derivations compared for equivalence do not share endpoints.
  class EndpointMismatch : public Error {
   public:
    using Error::Error;
  };

}  // namespace splitpre
