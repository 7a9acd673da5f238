#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace su11net::verify {

// One acceptance criterion of the reproduction suite: a named group of
// closed-form checks with a wall-clock budget.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::vector<std::string> notes;  // failed checks, with values
};

std::vector<CriterionResult> run_all();

// Prints one [PASS]/[FAIL] line per criterion (plus indented notes for
// failures) and returns the number of failed criteria.
int report(std::ostream& out);

}  // namespace su11net::verify
