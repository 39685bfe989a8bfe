#ifndef HECKE_ERRORS_HPP
#define HECKE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hecke {

// Base class for all library errors. CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct InvalidPermutation : Error {
  explicit InvalidPermutation(const std::string &msg) : Error(msg) {}
};

struct GroupTooLarge : Error {
  explicit GroupTooLarge(const std::string &msg) : Error(msg) {}
};

struct NotAMember : Error {
  explicit NotAMember(const std::string &msg) : Error(msg) {}
};

struct PairMismatch : Error {
  explicit PairMismatch(const std::string &msg) : Error(msg) {}
};

struct NonSquare : Error {
  explicit NonSquare(const std::string &msg) : Error(msg) {}
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string &msg) : Error(msg) {}
};

// Parse errors carry a 1-based line/column of the offending token.
struct SyntaxError : Error {
  int line, column;
  SyntaxError(const std::string &msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_), column(col_) {}
};

struct SemanticError : Error {
  int line, column;
  SemanticError(const std::string &msg, int line_ = 0, int col_ = 0)
      : Error(msg), line(line_), column(col_) {}
};

} // namespace hecke

#endif
