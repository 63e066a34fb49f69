#pragma once

#include "lackwalk/subspace.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace lackwalk {

struct CheckResult
{
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct VerifyOptions
{
  // Applied to every reduced model before the cross-engine comparison. Lets
  // tests inject a transcription error and watch the check catch it.
  std::function<void(SubspaceModelD &)> perturb_model;
  // Largest n1, n2 in the cross-engine sweep.
  Index max_set_size = 6;
  Index steps = 60;
};

// Invariant suite: unitarity, involutions, stationarity, model orthogonality,
// full vs reduced agreement, subspace closure, set-swap symmetry and the
// O(1/sqrt N) decay of perturbative eigen-residuals.
std::vector<CheckResult> run_verification(VerifyOptions const &options = {});

bool all_passed(std::vector<CheckResult> const &results);
void print_report(std::ostream &out, std::vector<CheckResult> const &results);

} // namespace lackwalk
