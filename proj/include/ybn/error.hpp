#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: unparsable files, unknown names, bad option values.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownName : public InputError {
 public:
  explicit UnknownName(const std::string& name) : InputError("unknown name: " + name) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class BadPrime : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvolutive : public Error {
 public:
  using Error::Error;
};

class NotNondegenerate : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class PositionOutOfRange : public Error {
 public:
  using Error::Error;
};

class MalformedBlocks : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InhomogeneousElement : public Error {
 public:
  using Error::Error;
};

class HypothesesNotMet : public Error {
 public:
  using Error::Error;
};

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class HexagonViolation : public Error {
 public:
  HexagonViolation(std::vector<std::array<std::uint32_t, 3>> witnesses)
      : Error("hexagon identity fails on " + std::to_string(witnesses.size()) + " triple(s)"),
        witnesses_(std::move(witnesses)) {}

  const std::vector<std::array<std::uint32_t, 3>>& witnesses() const { return witnesses_; }

 private:
  std::vector<std::array<std::uint32_t, 3>> witnesses_;
};

}  // namespace ybn
