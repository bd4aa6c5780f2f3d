#include "seatcfn/problem_io.hpp"

#include "seatcfn/builtin_problem_text.hpp"

namespace seatcfn {

std::string_view builtin_problem_text(BuiltinProblem which) {
  switch (which) {
    case BuiltinProblem::kProb1: return embedded::k_prob1;
    case BuiltinProblem::kProb2: return embedded::k_prob2;
    case BuiltinProblem::kProb3: return embedded::k_prob3;
    case BuiltinProblem::kProb4: return embedded::k_prob4;
    case BuiltinProblem::kProb5s: return embedded::k_prob5s;
    case BuiltinProblem::kProb5: return embedded::k_prob5;
  }
  return {};
}

SeatingProblem builtin_problem(BuiltinProblem which) {
  return parse_problem(builtin_problem_text(which));
}

std::optional<BuiltinProblem> builtin_by_name(std::string_view name) {
  if (name == "prob1") return BuiltinProblem::kProb1;
  if (name == "prob2") return BuiltinProblem::kProb2;
  if (name == "prob3") return BuiltinProblem::kProb3;
  if (name == "prob4") return BuiltinProblem::kProb4;
  if (name == "prob5s") return BuiltinProblem::kProb5s;
  if (name == "prob5") return BuiltinProblem::kProb5;
  return std::nullopt;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"prob1", "prob2", "prob3",
                                                 "prob4", "prob5s", "prob5"};
  return names;
}

}  // namespace seatcfn
