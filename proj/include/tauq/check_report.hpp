#pragma once

#include <string>

namespace tauq {

// Structured outcome of one verification. `passed` is exactly
// |computed - target| <= max(bound, tolerance); `bound` is the analytic
// error bound when one is available (0 otherwise).
struct CheckReport {
  std::string name;
  double computed = 0.0;
  double target = 0.0;
  double bound = 0.0;
  bool passed = false;

  // Report-only rows (no pass/fail semantics); excluded from exit codes.
  bool informational = false;
  // Optional exact value as "p/q" alongside the double rendering.
  std::string exact;

  static CheckReport make(std::string name, double computed, double target,
                          double bound, double tolerance = 0.0);
  static CheckReport info(std::string name, double computed);
};

}  // namespace tauq
