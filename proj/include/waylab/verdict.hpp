#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "waylab/matrix.hpp"

namespace waylab {

/// One thresholded check. A Verdict passes iff every check's defect is at or
/// below its threshold.
struct Check {
  std::string name;
  double defect = 0.0;
  double threshold = 0.0;

  bool holds() const { return defect <= threshold; }
};

/// Structured pass/fail report. `checks` define `pass`; `metrics` and `flags`
/// are informational (reported defect norms, derived scalars, predicate
/// outcomes) and never affect `pass`. `witnesses` carry matrices that
/// demonstrate a failure or document a derived operator.
struct Verdict {
  bool pass = true;
  std::vector<Check> checks;
  std::map<std::string, double> metrics;
  std::map<std::string, bool> flags;
  std::vector<std::pair<std::string, Matrix>> witnesses;

  Verdict& add_check(std::string name, double defect, double threshold) {
    checks.push_back({std::move(name), defect, threshold});
    pass = pass && checks.back().holds();
    return *this;
  }

  const Check* find(const std::string& name) const {
    for (const Check& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// A violated precondition of a theorem verifier: the instance does not
/// satisfy the hypotheses, so no conclusion is asserted. Distinct from a
/// failing Verdict (exit code 2 vs 1 at the CLI).
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(const std::string& condition, double defect,
                  const std::string& detail)
      : std::runtime_error("hypothesis violated: " + condition + " (defect " +
                           std::to_string(defect) + "): " + detail),
        condition_(condition),
        defect_(defect) {}

  const std::string& condition() const { return condition_; }
  double defect() const { return defect_; }

 private:
  std::string condition_;
  double defect_;
};

}  // namespace waylab
