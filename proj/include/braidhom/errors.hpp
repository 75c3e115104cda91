#ifndef BRAIDHOM_ERRORS_HPP
#define BRAIDHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidhom {

// Error classes used across the library. Each maps to one CLI exit code,
// see docs/formats.md.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated precondition or invalid input (wrong group kind, sphere surface,
// non-local braid, duplicate generators, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A numerical routine failed or produced results outside its validity
// window (Newton non-convergence, degenerate Hessian, flow step failure,
// numeric/symbolic differential mismatch).
struct NumericalError : Error {
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Malformed textual input (words, elements, config files, reports).
struct FormatError : Error {
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Input is valid but lies outside the class of problems the algorithm
// supports (e.g. a differential block without a unit pivot).
struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

}  // namespace braidhom

#endif
