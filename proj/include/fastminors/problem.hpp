#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fastminors/fastcheck.hpp"

namespace fastminors {

/// Syntax or semantic error in a problem file, with a 1-based line number.
class ProblemFileError : public Error {
 public:
  ProblemFileError(const std::string& what, std::size_t line)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Problem file:
///
///   # comment
///   ring: 101; x1,...,x7          (characteristic 0 or a prime; also QQ, ZZ/p)
///   ideal: f1; f2; ...            (';' or ',' separated)
///   matrix: [[a, b], [c, d]]
///   complex: d1=[[...]]; d2=[[...]]
///
/// A block runs until the next line that starts a block; `#` comments run to
/// the end of the line.
struct ProblemFile {
  RingPtr ring;
  std::optional<Ideal> ideal;
  std::optional<PolyMatrix> matrix;
  std::optional<ChainComplex> complex;
};

ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

/// Expands "x1..x3" and "x1,...,x3" style lists; plain names pass through.
std::vector<std::string> expand_variables(std::string_view list);

}  // namespace fastminors
