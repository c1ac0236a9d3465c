#include "dos/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dos/kernel.hpp"
#include "dos/rng.hpp"

namespace dos {

namespace {

constexpr double kInvPhi = 0.61803398874989484820;   // 1/phi
constexpr double kInvPhi2 = 0.38196601125010515180;  // 1/phi^2

}  // namespace

GoldenResult golden_max(const std::function<double(double)>& f, double lo, double hi,
                        double x_tol, int max_iter) {
    GoldenResult res;
    if (hi < lo) std::swap(lo, hi);
    double a = lo, b = hi;
    double h = b - a;
    if (h <= x_tol) {
        res.x = 0.5 * (a + b);
        res.fx = f(res.x);
        res.evals = 1;
        return res;
    }
    double c = a + kInvPhi2 * h;
    double d = a + kInvPhi * h;
    double fc = f(c), fd = f(d);
    res.evals = 2;
    for (int it = 0; it < max_iter && h > x_tol; ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            h = b - a;
            c = a + kInvPhi2 * h;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            h = b - a;
            d = a + kInvPhi * h;
            fd = f(d);
        }
        ++res.evals;
    }
    if (fc >= fd) {
        res.x = c;
        res.fx = fc;
    } else {
        res.x = d;
        res.fx = fd;
    }
    return res;
}

namespace {

/// Number of thresholds that matter: the last rank k with Y_k > Y_{k+1}.
int distinct_prefix(const Instance& inst) {
    int m = 0;
    for (int k = 1; k <= inst.size(); ++k)
        if (inst.value(k) > inst.value(k + 1)) m = k;
    return std::max(m, 1);
}

struct AscentProblem {
    std::function<double(const std::vector<double>&)> objective;
    double p;
    double upper_last;  // upper bound for the last coordinate
};

struct AscentOutcome {
    std::vector<double> t;
    double value;
    int sweeps;
    bool converged;
};

AscentOutcome coordinate_ascent(const AscentProblem& prob, std::vector<double> t,
                                const RpOptions& opts) {
    const int K = static_cast<int>(t.size());
    double value = prob.objective(t);
    int sweep = 0;
    bool converged = false;
    for (; sweep < opts.max_sweeps; ++sweep) {
        double before = value;
        for (int s = 0; s < K; ++s) {
            double lo = (s == 0) ? prob.p : t[static_cast<std::size_t>(s - 1)];
            double hi = (s + 1 < K) ? t[static_cast<std::size_t>(s + 1)] : prob.upper_last;
            auto line = [&](double x) {
                double old = t[static_cast<std::size_t>(s)];
                t[static_cast<std::size_t>(s)] = x;
                double v = prob.objective(t);
                t[static_cast<std::size_t>(s)] = old;
                return v;
            };
            GoldenResult g = golden_max(line, lo, hi, opts.x_tol);
            if (g.fx >= value) {
                t[static_cast<std::size_t>(s)] = g.x;
                value = g.fx;
            }
        }
        if (value - before < opts.sweep_tol) {
            converged = true;
            ++sweep;
            break;
        }
    }
    return {std::move(t), value, sweep, converged};
}

std::vector<double> linear_start(double p, int K, double upper) {
    std::vector<double> t(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i)
        t[static_cast<std::size_t>(i)] = p + (upper - p) * (i + 1) / static_cast<double>(K + 1);
    return t;
}

std::vector<double> random_start(double p, int K, double upper, Rng& rng) {
    std::vector<double> t(static_cast<std::size_t>(K));
    for (auto& x : t) x = rng.next_double(p, upper);
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

RpResult optimize_rp(const Instance& instance, double p, int K, const RpOptions& opts) {
    if (!(0.0 <= p && p < 1.0)) throw std::invalid_argument("optimize_rp: need 0 <= p < 1");
    const int m = distinct_prefix(instance);
    if (K < m) throw std::invalid_argument("optimize_rp: K must cover the distinct values");

    AscentProblem prob;
    prob.p = p;
    prob.upper_last = 1.0;
    prob.objective = [&instance, &opts](const std::vector<double>& t) {
        ThresholdSchedule sched(0.0, t, true);
        return rp_objective(instance, sched, opts.quad_tol);
    };

    Rng rng(opts.seed, 0);
    AscentOutcome best{{}, -1e300, 0, false};
    for (int r = 0; r <= opts.restarts; ++r) {
        std::vector<double> t0 = (r == 0) ? linear_start(p, m, 1.0) : random_start(p, m, 1.0, rng);
        AscentOutcome out = coordinate_ascent(prob, std::move(t0), opts);
        if (out.value > best.value) best = std::move(out);
    }
    if (!best.converged) throw std::runtime_error("optimize_rp: MaxSweeps exhausted");
    return {ThresholdSchedule(p, best.t, true), best.value, best.sweeps, best.converged};
}

namespace {

// ln s_I for the asymptotic tail, I large: sum_{m>=I} ln(1+2/m)/(m+1) = 2/I - 1/I^2 + O(I^-3)
constexpr int kTailStart = 1000000;

/// Thresholds of the infinite rank-minimization solution for i = 1..K+1 (log),
/// plus the exact continuation cost W beyond rank K given survival there.
struct MinRankTail {
    std::vector<double> log_s;  // index 0 -> s_1, ..., K -> s_{K+1}
    double continuation = 0.0;  // W
};

MinRankTail build_min_rank_tail(int K) {
    MinRankTail tail;
    tail.log_s.assign(static_cast<std::size_t>(K + 1), 0.0);
    const int I = std::max(kTailStart, 4 * K);
    // backward recurrence: ln s_i = ln s_{i+1} + ln(i/(i+2))/(i+1)
    double ls = -(2.0 / I - 1.0 / (static_cast<double>(I) * I));  // ln s_I
    for (int i = I - 1; i >= 1; --i) {
        ls += std::log(static_cast<double>(i) / (i + 2)) / (i + 1);
        if (i <= K + 1) tail.log_s[static_cast<std::size_t>(i - 1)] = ls;
    }
    // continuation cost W = sum_{i>K} (prod_{K<j<=i} s_j)(i/2)(s_i^-(i+1) - s_{i+1}^-(i+1))
    double log_prod = 0.0;  // log prod_{K<j<=i} s_j
    double w = 0.0;
    double log_si = tail.log_s[static_cast<std::size_t>(K)];  // ln s_{K+1}
    for (int i = K + 1; i < I; ++i) {
        double log_snext = log_si - std::log(static_cast<double>(i) / (i + 2)) / (i + 1);
        log_prod += log_si;
        double term = 0.5 * i *
                      (std::exp(log_prod - (i + 1) * log_si) - std::exp(log_prod - (i + 1) * log_snext));
        w += term;
        log_si = log_snext;
        if (term < 1e-18 * std::max(w, 1.0) && i > K + 64) break;
    }
    tail.continuation = w;
    return tail;
}

double min_rank_penalized(const std::vector<double>& t, double log_s_next, double w) {
    const int K = static_cast<int>(t.size());
    double log_T = 0.0;
    double sum = 0.0;
    for (int i = 1; i <= K; ++i) {
        const double ti = t[static_cast<std::size_t>(i - 1)];
        if (ti <= 0.0) return 1e300;
        log_T += std::log(ti);
        const double log_next = (i < K) ? std::log(t[static_cast<std::size_t>(i)]) : log_s_next;
        sum += 0.5 * i * (std::exp(log_T - (i + 1) * std::log(ti)) - std::exp(log_T - (i + 1) * log_next));
    }
    return sum + std::exp(log_T) * w;
}

}  // namespace

std::vector<double> min_rank_product_thresholds(int K) {
    if (K < 1) throw std::invalid_argument("min_rank_product_thresholds: K >= 1");
    MinRankTail tail = build_min_rank_tail(K);
    std::vector<double> t(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) t[static_cast<std::size_t>(i)] = std::exp(tail.log_s[static_cast<std::size_t>(i)]);
    return t;
}

double min_rank_optimal_rank() {
    const int I = kTailStart;
    long double acc = 0.0;
    for (int m = 1; m < I; ++m)
        acc += std::log((m + 2.0L) / m) / (m + 1);
    acc += 2.0L / I - 1.0L / (static_cast<long double>(I) * I);
    return std::exp(static_cast<double>(acc));
}

RpResult optimize_min_rank(int K, const RpOptions& opts) {
    if (K < 1) throw std::invalid_argument("optimize_min_rank: K >= 1");
    MinRankTail tail = build_min_rank_tail(K);
    const double log_s_next = tail.log_s[static_cast<std::size_t>(K)];

    AscentProblem prob;
    prob.p = 0.0;
    prob.upper_last = std::exp(log_s_next);
    prob.objective = [&tail, log_s_next](const std::vector<double>& t) {
        return -min_rank_penalized(t, log_s_next, tail.continuation);
    };

    Rng rng(opts.seed, 1);
    AscentOutcome best{{}, -1e300, 0, false};
    for (int r = 0; r <= std::min(opts.restarts, 2); ++r) {
        std::vector<double> t0 = (r == 0) ? linear_start(1e-3, K, prob.upper_last)
                                          : random_start(1e-3, K, prob.upper_last, rng);
        AscentOutcome out = coordinate_ascent(prob, std::move(t0), opts);
        if (out.value > best.value) best = std::move(out);
    }
    if (!best.converged) throw std::runtime_error("optimize_min_rank: MaxSweeps exhausted");
    return {ThresholdSchedule(0.0, best.t, true), -best.value, best.sweeps, best.converged};
}

ClassicSolution classic_closed_form(ClassicProblem problem, int K) {
    switch (problem) {
        case ClassicProblem::Secretary: {
            double t1 = std::exp(-1.0);
            return {ThresholdSchedule(0.0, {t1}, true), t1};
        }
        case ClassicProblem::OneTwoSecretary: {
            // t_1 solves x - ln x = 1 + ln(3/2); x - ln x is decreasing on (0,1)
            const double target = 1.0 + std::log(1.5);
            double lo = 0.05, hi = 0.999;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                ((mid - std::log(mid)) > target ? lo : hi) = mid;
            }
            double t1 = 0.5 * (lo + hi), t2 = 2.0 / 3.0;
            double value = t1 * t1 + 2.0 * t1 * (std::log(t2 / t1) + 1.0) - 3.0 * t1 * t2;
            return {ThresholdSchedule(0.0, {t1, t2}, true), value};
        }
        case ClassicProblem::MinRank: {
            return {ThresholdSchedule(0.0, min_rank_product_thresholds(K), true),
                    min_rank_optimal_rank()};
        }
    }
    throw std::invalid_argument("classic_closed_form: unknown problem");
}

}  // namespace dos
