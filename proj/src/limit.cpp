#include "dos/limit.hpp"

#include <cmath>
#include <stdexcept>

#include "dos/combinatorics.hpp"
#include "dos/kernel.hpp"
#include "dos/quadrature.hpp"

namespace dos {

double alpha_star_residual(double a, double quad_tol) {
    auto f = [a](double y) {
        double denom = (y <= 0.0) ? (1.0 / a - 1.0) : y * (1.0 - std::log(y)) + 1.0 / a - 1.0;
        return 1.0 / denom;
    };
    return Quadrature::integrate_scalar(f, 0.0, 1.0, quad_tol) - 1.0;
}

double alpha_star(double tol) {
    // residual is increasing in a
    double lo = 0.5, hi = 0.95;
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        (alpha_star_residual(mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

double construction_gamma(double p, double a, int k) {
    if (k < 1) throw std::invalid_argument("construction_gamma: k >= 1");
    return 1.0 - a + a * (k * std::pow(p, k - 1) - (k - 1) * std::pow(p, k));
}

double construction_mu(double p, double a, int k) {
    if (k < 3) throw std::invalid_argument("construction_mu: k >= 3");
    return p * (1.0 - a + a * std::pow(p, k - 2)) / (k - 2);
}

double construction_limit_log(double p, double a) {
    if (!(0.0 < p && p < 1.0) || !(0.0 < a && a < 1.0))
        throw std::invalid_argument("construction_limit_log: p, a in (0,1)");
    const double f = std::log(p) + a * (1.0 - p) * (1.0 - p) / p;
    // g = sum_{i>=1} ln(gamma_{i+1}) / (i (i+1)); the summand tends to
    // ln(1-a), whose tail sums exactly to ln(1-a)/(I+1)
    const double log1ma = std::log1p(-a);
    double g = 0.0;
    const double ratio = a / (1.0 - a);
    long i = 1;
    for (;; ++i) {
        double correction = ratio * std::pow(p, i) * (1.0 + i * (1.0 - p));
        double term = (log1ma + std::log1p(correction)) / (static_cast<double>(i) * (i + 1));
        g += term;
        if (correction < 1e-16 || i > 50000000) break;
    }
    g += log1ma / static_cast<double>(i + 1);
    return f - g;
}

double alpha_tilde(double p, double tol) {
    if (!(0.0 < p && p < 1.0)) throw std::invalid_argument("alpha_tilde: p in (0,1)");
    // construction_limit_log is increasing in a (f increasing, g decreasing)
    double lo = 1e-9, hi = 1.0 - 1e-12;
    if (construction_limit_log(p, lo) > 0.0) return lo;
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        (construction_limit_log(p, mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

ConstructionState construct_thresholds(double p, double alpha, int K) {
    if (!(0.0 < p && p < 1.0) || !(0.0 < alpha && alpha < 1.0))
        throw std::invalid_argument("construct_thresholds: p, alpha in (0,1)");
    if (K < 2) throw std::invalid_argument("construct_thresholds: K >= 2");

    ConstructionState st{p, alpha, {}, ThresholdSchedule(0.0, {p}, true), false, 0.0};
    st.limit_log_t = construction_limit_log(p, alpha);
    st.limit_condition_holds = st.limit_log_t <= 1e-9;
    if (!st.limit_condition_holds)
        throw std::domain_error("LimitExceedsOne: construction leaves [0,1] at this alpha");

    st.gammas.resize(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k)
        st.gammas[static_cast<std::size_t>(k - 1)] = construction_gamma(p, alpha, k);

    std::vector<double> t(static_cast<std::size_t>(K));
    t[0] = p;
    if (K >= 2) t[1] = p * std::exp(alpha * (1.0 - p) * (1.0 - p) / p);
    for (int k = 2; k < K; ++k) {
        // t_{k+1} = t_k (gamma_{k-1} / gamma_k)^{1/(k-1)}
        double g_prev = st.gammas[static_cast<std::size_t>(k - 2)];
        double g_cur = st.gammas[static_cast<std::size_t>(k - 1)];
        t[static_cast<std::size_t>(k)] =
            t[static_cast<std::size_t>(k - 1)] * std::pow(g_prev / g_cur, 1.0 / (k - 1));
    }
    for (double& x : t) x = std::min(x, 1.0);  // guard rounding at the limit
    st.times = ThresholdSchedule(p, t, true);
    return st;
}

double closed_alpha_small_p(double p) {
    const double inv_e = std::exp(-1.0);
    if (!(0.0 <= p && p <= inv_e + 1e-15))
        throw std::invalid_argument("closed_alpha_small_p: requires p <= 1/e");
    const double value = 1.0 / (std::exp(1.0) * (1.0 - p));

    // the secretary schedule certifies the value: min_k F_k / (1 - p^k)
    ThresholdSchedule secretary(p, {inv_e}, true);
    const int kcap = 40;
    auto F = eval_Fk_all(secretary, kcap, 1e-13);
    double worst = 1e300;
    for (int k = 1; k <= kcap; ++k) {
        double denom = (p == 0.0) ? 1.0 : 1.0 - std::pow(p, k);
        worst = std::min(worst, F[static_cast<std::size_t>(k - 1)] / denom);
    }
    if (worst < value - 1e-9)
        throw std::logic_error("closed_alpha_small_p: certificate check failed");
    return value;
}

}  // namespace dos
