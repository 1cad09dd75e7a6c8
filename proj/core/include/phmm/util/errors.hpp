#pragma once

#include <stdexcept>
#include <string>

namespace phmm {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid user-supplied configuration (sizes, ranges, missing fields).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

// Malformed or mismatched data artifacts (files, labels, dimensions).
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error("data: " + msg) {}
};

// A requested computation has no legal solution (e.g. too few frames).
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& msg) : Error("infeasible: " + msg) {}
};

}  // namespace phmm
