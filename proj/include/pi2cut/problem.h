#ifndef PI2CUT_PROBLEM_H_
#define PI2CUT_PROBLEM_H_

#include <optional>
#include <string>

#include "pi2cut/herbrand.h"

namespace pi2cut {

struct ProblemFile {
  PrenexProblem problem;
  SchematicPi2Grammar grammar;
  std::optional<HerbrandInstanceSet> herbrand;
};

// Throws ParseError (with line:col), ArityError, VariableConditionError.
ProblemFile ParseProblem(const std::string& text);
std::string PrintProblem(const ProblemFile& pf);

ProblemFile LoadProblem(const std::string& path);
std::string ReadFile(const std::string& path);

}  // namespace pi2cut

#endif  // PI2CUT_PROBLEM_H_
