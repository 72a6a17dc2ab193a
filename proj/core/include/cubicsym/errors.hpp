#pragma once

#include <stdexcept>
#include <string>

namespace cubicsym {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDivision : public Error {
 public:
  ZeroDivision() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotFinite : public Error {
 public:
  using Error::Error;
};

class NotFiniteOrder : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  GroupMismatch() : Error("class functions belong to different groups") {}
};

class MissingPowerMap : public Error {
 public:
  explicit MissingPowerMap(int k)
      : Error("power map for k = " + std::to_string(k) + " is not available") {}
};

class BadPrime : public Error {
 public:
  using Error::Error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

class NotProjectivelyFaithful : public Error {
 public:
  NotProjectivelyFaithful()
      : Error("group contains a nontrivial scalar matrix") {}
};

}  // namespace cubicsym
