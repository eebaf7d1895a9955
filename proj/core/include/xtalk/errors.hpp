#pragma once

#include <stdexcept>
#include <string>

namespace xtalk {

// Malformed input text (BLIF, .xtn, stimulus, library JSON).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  explicit ParseError(const std::string& reason)
      : std::runtime_error(reason), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input that violates a semantic contract (unknown template,
// key width mismatch, cycle, unmappable node, ...).
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xtalk
