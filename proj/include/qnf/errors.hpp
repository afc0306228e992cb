#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnf {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedPrime : public Error {
 public:
  using Error::Error;
};
class PrimeMismatch : public Error {
 public:
  PrimeMismatch() : Error("operands carry different primes") {}
};
class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("0 has no multiplicative inverse") {}
};
class ZeroArgument : public Error {
 public:
  using Error::Error;
};
class NotDivisible : public Error {
 public:
  NotDivisible() : Error("element is not divisible by chi = 1 - w") {}
};
class DenominatorTooLarge : public Error {
 public:
  using Error::Error;
};
class NotClifford : public Error {
 public:
  NotClifford() : Error("matrix is not a Clifford operator") {}
};
class NotInP : public Error {
 public:
  NotInP() : Error("Clifford element has a frame with b != 0") {}
};
class DomainError : public Error {
 public:
  using Error::Error;
};
class EntriesOutsideRing : public Error {
 public:
  using Error::Error;
};
class FormatError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qnf
