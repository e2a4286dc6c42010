#pragma once

#include <vector>

#include "tauq/biseq.hpp"
#include "tauq/check_report.hpp"

namespace tauq::series {

/// tau truncated to |k| <= window: coefficient (-1)^{k+1}/k at k != 0, 0 at 0,
/// tail_bound sqrt(Sum_{|k|>window} 1/k^2). window >= 1.
biseq::BilateralSequence tau(long window);

/// Same element built as Sum_{n=1}^{series_terms} (-1)^{n+1}(delta(n)-delta(-n))/n
/// then truncated; equals tau(window) exactly coefficientwise.
/// Requires series_terms >= window >= 1.
biseq::BilateralSequence tau_via_log_trick(long window, long series_terms);

/// Sum_{m=0}^{terms-1} a^{*m}/m! with every intermediate power re-truncated to
/// |n| <= window. The returned tail_bound accumulates all convolution,
/// truncation and series-remainder contributions.
biseq::BilateralSequence exp_direct(const biseq::BilateralSequence& a, int terms, long window);

/// For each |n| <= probe_range, two reports: the closed-form oracle partial
/// sum of c_n(exp tau) and the direct-convolution coefficient, both against
/// the target (n == 1 ? 1 : 0).
std::vector<CheckReport> verify_exp_tau(long window, int terms, long probe_range,
                                        double oracle_tolerance = 1e-12);

}  // namespace tauq::series
