#include "tauq/check_report.hpp"

#include <cmath>

namespace tauq {

CheckReport CheckReport::make(std::string name, double computed, double target,
                              double bound, double tolerance) {
  CheckReport r;
  r.name = std::move(name);
  r.computed = computed;
  r.target = target;
  r.bound = bound;
  const double diff = std::fabs(computed - target);
  r.passed = diff <= std::fmax(bound, tolerance);
  return r;
}

CheckReport CheckReport::info(std::string name, double computed) {
  CheckReport r;
  r.name = std::move(name);
  r.computed = computed;
  r.informational = true;
  return r;
}

}  // namespace tauq
