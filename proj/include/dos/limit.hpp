#pragma once

#include <vector>

#include "dos/types.hpp"

namespace dos {

/// The i.i.d. prophet-inequality constant: unique root of
///   int_0^1 dy / (y(1 - ln y) + 1/a - 1) = 1,  about 0.745.
double alpha_star(double tol = 1e-12);

/// Residual of the defining integral at a given a: int - 1.
double alpha_star_residual(double a, double quad_tol = 1e-13);

/// gamma_k = 1 - a + a [k p^(k-1) - (k-1) p^k], k >= 1.
double construction_gamma(double p, double a, int k);

/// mu_k = p (1 - a + a p^(k-2)) / (k - 2), k >= 3.
double construction_mu(double p, double a, int k);

/// Explicit feasible solution of the limit problem at rate p and target
/// ratio a: t_1 = p, t_2 = p exp(a (1-p)^2 / p), and
/// (t_k / t_{k+1})^(k-1) = gamma_k / gamma_{k-1} for k >= 2.
struct ConstructionState {
    double p = 0.0;
    double alpha = 0.0;
    std::vector<double> gammas;  // gamma_1..gamma_K
    ThresholdSchedule times;
    bool limit_condition_holds = false;  // lim t_k <= 1
    double limit_log_t = 0.0;            // lim_k ln t_k
};

/// Builds K thresholds. Throws std::domain_error("LimitExceedsOne") when the
/// limit condition fails (the sequence would leave [0, 1]).
ConstructionState construct_thresholds(double p, double alpha, int K);

/// ln(lim_k t_k) = f(p, a) - g(p, a); the construction stays inside [0,1]
/// iff this is <= 0. f = ln p + a(1-p)^2/p, g = sum ln(gamma_{i+1})/(i(i+1)).
double construction_limit_log(double p, double a);

/// The unique a in (0,1) with construction_limit_log(p, a) = 0; the best
/// ratio the explicit construction certifies at rate p.
double alpha_tilde(double p, double tol = 1e-12);

/// alpha(p) = 1 / (e (1 - p)) for 0 <= p <= 1/e. Verifies on construction
/// that the secretary schedule (1/e, 1, 1, ...) attains it within 1e-9.
double closed_alpha_small_p(double p);

}  // namespace dos
