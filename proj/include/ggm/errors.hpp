#pragma once

#include <stdexcept>
#include <string>

namespace ggm {

/// A sample is not generic enough for the requested construction
/// (some down-set submatrix or pivot block is rank deficient).
class degenerate_sample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is only defined for a restricted class of graphs
/// (chordal, transitive, ...).
class unsupported_graph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix claimed to lie in the stabilizing group does not.
class not_a_member : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class numeric_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; carries the 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace ggm
