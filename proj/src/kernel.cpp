#include "dos/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "dos/quadrature.hpp"

namespace dos {

namespace {

// Integrand vector over j = 1..jmax on interval i:
//   out[j-1] = (T_i / tau^i) * P(Bin(j-1, tau) <= i-1).
// The binomial CDF runs over j with an O(1) pmf recurrence.
void stop_integrand(double log_Ti, int i, int jmax, double tau, double* out) {
    const double w = std::exp(log_Ti - i * std::log(tau));
    double cdf = 1.0;
    double pmf = std::pow(tau, i - 1);  // P(Bin(i-1, tau) = i-1)
    for (int j = 1; j <= jmax; ++j) {
        out[j - 1] = w * cdf;
        if (j >= i) {
            cdf -= tau * pmf;
            if (cdf < 0.0) cdf = 0.0;
            pmf *= (1.0 - tau) * static_cast<double>(j) / static_cast<double>(j + 1 - i);
        }
    }
}

}  // namespace

std::vector<double> limit_stop_distribution(const ThresholdSchedule& schedule, int jmax,
                                            double abs_tol) {
    if (jmax < 1) throw std::invalid_argument("limit_stop_distribution: jmax >= 1");
    if (!schedule.tail_is_one())
        throw std::invalid_argument("limit_stop_distribution: schedule must have unit tail");
    const int K = schedule.size();
    std::vector<double> acc(static_cast<std::size_t>(jmax), 0.0);
    std::vector<double> piece(static_cast<std::size_t>(jmax), 0.0);
    const double per_interval_tol = abs_tol / std::max(1, K);
    for (int i = 1; i <= K; ++i) {
        double a = schedule.time_for_rank(i);
        double b = (i < K) ? schedule.time_for_rank(i + 1) : 1.0;
        if (b - a <= 0.0) continue;
        if (a <= 0.0) a = std::min(b, 1e-12);  // t_1 = 0 stops immediately; measure-zero start
        const double log_Ti = schedule.log_prefix_product(i);
        auto f = [log_Ti, i, jmax](double tau, double* out) {
            stop_integrand(log_Ti, i, jmax, tau, out);
        };
        Quadrature::integrate(f, jmax, a, b, per_interval_tol, piece.data());
        for (int j = 0; j < jmax; ++j) acc[static_cast<std::size_t>(j)] += piece[static_cast<std::size_t>(j)];
    }
    return acc;
}

std::vector<double> eval_Fk_all(const ThresholdSchedule& schedule, int kmax, double abs_tol) {
    auto pj = limit_stop_distribution(schedule, kmax, abs_tol);
    double run = 0.0;
    for (auto& v : pj) {
        run += v;
        v = std::min(run, 1.0);
    }
    return pj;
}

double eval_Fk(const ThresholdSchedule& schedule, int k, double abs_tol) {
    if (k < 1) throw std::invalid_argument("eval_Fk: k >= 1");
    return eval_Fk_all(schedule, k, abs_tol).back();
}

double rp_objective(const Instance& instance, const ThresholdSchedule& schedule, double abs_tol) {
    const int m = instance.size();
    auto F = eval_Fk_all(schedule, m, abs_tol);
    double obj = instance.value(1);
    for (int k = 1; k <= m; ++k) {
        double diff = instance.value(k) - instance.value(k + 1);
        if (diff != 0.0) obj -= diff * (1.0 - F[static_cast<std::size_t>(k - 1)]);
    }
    return obj;
}

double min_rank_expected_rank(const ThresholdSchedule& schedule) {
    const int K = schedule.size();
    double sum = 0.0;
    for (int i = 1; i <= K; ++i) {
        const double ti = schedule.time_for_rank(i);
        const double tn = (i < K) ? schedule.time_for_rank(i + 1)
                                  : (schedule.tail_is_one() ? 1.0 : ti);
        if (ti <= 0.0) return 1e300;
        const double log_Ti = schedule.log_prefix_product(i);
        const double hi = std::exp(log_Ti - (i + 1) * std::log(ti));
        const double lo = std::exp(log_Ti - (i + 1) * std::log(tn));
        sum += 0.5 * i * (hi - lo);
    }
    return sum;
}

}  // namespace dos
