#pragma once

#include <stdexcept>
#include <string>

namespace clustercut {

// Malformed input file or JSON document. The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, int line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg),
        file_(std::move(file)),
        line_(line) {}
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_ = 0;
};

// A configured resource cap was exceeded (instance too large for exhaustive
// search, weight overflow, table too big). CLI exit code 3.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation precondition does not hold (empty cluster, graph not regular,
// CNF not in gadget form, ...). CLI exit code 4.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace clustercut
