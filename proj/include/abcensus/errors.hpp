#ifndef ABCENSUS_ERRORS_HPP
#define ABCENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abcensus {

// Error taxonomy maps onto the CLI exit codes (see tools/abcensus.cpp).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

// Invalid mathematical input, e.g. delta not dividing the exponent.
struct DomainError : Error {
  using Error::Error;
};

// A configured work cap would be exceeded.
struct CapExceeded : Error {
  using Error::Error;
};

// A 128-bit intermediate would wrap.
struct OverflowError : Error {
  using Error::Error;
};

}  // namespace abcensus

#endif  // ABCENSUS_ERRORS_HPP
