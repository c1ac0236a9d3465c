#pragma once

#include <string>
#include <vector>

#include "dos/lp_model.hpp"
#include "dos/types.hpp"

namespace dos {

/// k_max = ceil(ln 0.001 / ln p) so the ignored dominance tail p^k_max is
/// below 1e-3; at least 2.
int default_lbp_kmax(double p);

/// k_max = ceil(ln(N / (1-p))) as used for the truncated upper-bound LP.
int default_ubp_kmax(double p, int n);

/// Certified ratios of a threshold schedule against the k_max-truncated
/// dominance set: F_k / (1 - p^k) for k < k_max and F_{k_max} / 1 for the
/// last (the unit denominator makes the minimum a valid lower bound on the
/// untruncated problem). Entry k-1 holds ratio k.
std::vector<double> lbp_ratios(const ThresholdSchedule& schedule, double p, int k_max,
                               double quad_tol = 1e-13);

/// min over lbp_ratios: a certified lower bound on alpha(p) at this schedule.
double evaluate_lbp_objective(const ThresholdSchedule& schedule, double p, int k_max,
                              double quad_tol = 1e-13);

struct LbpOptions {
    int max_sweeps_per_phase = 60;
    double sweep_tol = 1e-11;
    double x_tol = 1e-8;
    int restarts = 3;
    unsigned long long seed = 42424242ull;
    double search_quad_tol = 1e-10;  // line-search accuracy
    double final_quad_tol = 1e-13;   // certification accuracy
};

struct LbpResult {
    double value = 0.0;  // certified: min of exactly evaluated ratios
    ThresholdSchedule schedule;
    std::vector<double> ratios;
    int sweeps = 0;
};

/// Maximizes the truncated min-ratio objective over non-decreasing schedules
/// in [p, 1]^k_max by coordinate ascent on a softmin ramp followed by the
/// exact minimum, over several starts. The returned value re-evaluates the
/// best schedule at certification accuracy.
LbpResult lbp_lower_bound(double p, int k_max, const LbpOptions& opts = {});

/// The truncated relaxation whose optimum upper-bounds alpha(p): variables
/// x_{i,ell} with ell <= k_max, relaxed feasibility rows, and dominance rows
/// with the per-interval upper-bounded coefficient
/// C(j-1, ell-1) (i/N)^ell (1 - (i-1)/N)^(j-ell). Requires p*N integral
/// within 1e-9 (the effective p is h/N).
LpModel build_ubp(double p, int n, int k_max);
double ubp_upper_bound(double p, int n, int k_max);

/// Two-sided certificate for alpha(p).
struct AlphaCertificate {
    double p = 0.0;
    double lower = 0.0;
    double upper = 1.0;
    std::string method_lower;  // ClosedForm1e | Construction | LBP
    std::string method_upper;  // ClosedForm1e | UBP | AlphaStarCap
    int n = 0;
    int k_max_lower = 0;
    int k_max_upper = 0;
    double runtime_ms = 0.0;
};

/// Best available lower and upper bounds at rate p: the closed form when
/// p <= 1/e, otherwise LBP vs. min(UBP at size n, alpha*).
AlphaCertificate compute_certificate(double p, int n, int k_max_lower = 0, int k_max_upper = 0);

}  // namespace dos
