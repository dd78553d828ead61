#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace k3 {

// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class InvalidAutomorphism : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DegenerateLattice : public Error {
 public:
  using Error::Error;
};

class NotTwoElementary : public Error {
 public:
  using Error::Error;
};

class UnsupportedLattice : public Error {
 public:
  using Error::Error;
};

class DegenerateModel : public Error {
 public:
  using Error::Error;
};

class InvalidPlace : public Error {
 public:
  using Error::Error;
};

class InconsistentOrders : public Error {
 public:
  using Error::Error;
};

class UnresolvedCluster : public Error {
 public:
  using Error::Error;
};

class UnknownPredicate : public Error {
 public:
  using Error::Error;
};

}  // namespace k3
