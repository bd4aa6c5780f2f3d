#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seatcfn/seating_problem.hpp"

namespace seatcfn {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Parses the line-oriented problem format (see README.md). Throws ParseError
// with the offending line number on any syntax or reference error.
SeatingProblem parse_problem(std::string_view text);

SeatingProblem load_problem_file(const std::string& path);

// Canonical text form; parse_problem(serialize_problem(p)) compiles to the
// same CFN as p.
std::string serialize_problem(const SeatingProblem& p);

enum class BuiltinProblem { kProb1, kProb2, kProb3, kProb4, kProb5s, kProb5 };

SeatingProblem builtin_problem(BuiltinProblem which);
std::string_view builtin_problem_text(BuiltinProblem which);
std::optional<BuiltinProblem> builtin_by_name(std::string_view name);
const std::vector<std::string>& builtin_names();

}  // namespace seatcfn
