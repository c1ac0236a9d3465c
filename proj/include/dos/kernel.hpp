#pragma once

#include <vector>

#include "dos/types.hpp"

namespace dos {

/// Limit selection probabilities of the threshold policy: out[j-1] is
/// lim_N P(ALG_t selects the item of global rank j), for j = 1..jmax, via
///   sum_i int_{t_i}^{t_{i+1}} (T_i / tau^i) P(Bin(j-1, tau) <= i-1) dtau.
/// Requires a tail_is_one schedule.
std::vector<double> limit_stop_distribution(const ThresholdSchedule& schedule, int jmax,
                                            double abs_tol = 1e-13);

/// F_k(t) for k = 1..kmax: probability of stopping with global rank <= k.
/// Prefix sums of the limit stop distribution.
std::vector<double> eval_Fk_all(const ThresholdSchedule& schedule, int kmax,
                                double abs_tol = 1e-13);
double eval_Fk(const ThresholdSchedule& schedule, int k, double abs_tol = 1e-13);

/// Reduced-problem objective Y_1 - sum_k (Y_k - Y_{k+1}) (1 - F_k(t)) for an
/// instance with finitely many values (ranks beyond the list pay the tail).
double rp_objective(const Instance& instance, const ThresholdSchedule& schedule,
                    double abs_tol = 1e-13);

/// Expected rank of the policy in the rank-minimization problem (Y_k = -k),
/// via the telescoped series sum_i T_i (i/2) (t_i^{-(i+1)} - t_{i+1}^{-(i+1)}).
/// Thresholds past the schedule length count as 1. Returns +infinity style
/// large values when the schedule never stops.
double min_rank_expected_rank(const ThresholdSchedule& schedule);

}  // namespace dos
