#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fig8 {

struct CriterionResult {
  int index = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  std::vector<std::string> details;
};

// Runs acceptance criterion `index` (1-based).  quick=true shrinks the
// heaviest grids for smoke testing (not the official gate).
CriterionResult run_criterion(int index, bool quick = false);

inline constexpr int criteria_count = 11;

// Runs all criteria (or the given subset), printing one PASS/FAIL line per
// criterion plus detail lines to `out`.  Returns true when all pass.
bool run_acceptance(std::ostream& out, const std::vector<int>& subset = {},
                    bool quick = false);

}  // namespace fig8
