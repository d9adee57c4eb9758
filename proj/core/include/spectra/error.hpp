#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: mismatched groups, out-of-range parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A size guard was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A filter or truncation produced a signed "distribution".
class NegativeMass : public Error {
 public:
  NegativeMass(double total, const std::string& filter)
      : Error("negative mass " + std::to_string(total) + " from filter " +
              filter),
        total_(total) {}
  double total() const { return total_; }

 private:
  double total_;
};

class NegativeConditional : public Error {
 public:
  NegativeConditional(const std::string& prefix, double value)
      : Error("negative conditional " + std::to_string(value) +
              " after prefix '" + prefix + "'"),
        prefix_(prefix) {}
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

class ZeroSuccessProbability : public Error {
 public:
  explicit ZeroSuccessProbability(double p)
      : Error("postselection success probability " + std::to_string(p) +
              " is below threshold") {}
};

class ZeroPosteriorMass : public Error {
 public:
  ZeroPosteriorMass() : Error("likelihood has no overlap with the prior") {}
};

}  // namespace spectra
