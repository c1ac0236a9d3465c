#pragma once

#include <functional>
#include <vector>

#include "dos/types.hpp"

namespace dos {

struct GoldenResult {
    double x = 0.0;
    double fx = 0.0;
    int evals = 0;
};

/// Maximizes a per-coordinate-concave (hence unimodal) f on [lo, hi] by
/// golden-section search.
GoldenResult golden_max(const std::function<double(double)>& f, double lo, double hi,
                        double x_tol = 1e-9, int max_iter = 240);

struct RpOptions {
    int max_sweeps = 500;
    double sweep_tol = 1e-12;  // stop when a full sweep improves less than this
    double x_tol = 1e-9;
    int restarts = 5;  // random restarts on top of the deterministic start
    unsigned long long seed = 987654321ull;
    double quad_tol = 5e-14;
};

struct RpResult {
    ThresholdSchedule schedule;
    double value = 0.0;
    int sweeps = 0;
    bool converged = false;
};

/// Cyclic coordinate ascent for the known-values reduced problem over
/// thresholds in [p, 1]; thresholds beyond the last strict value drop are
/// pinned at 1. Throws on sweep-budget exhaustion across all restarts.
RpResult optimize_rp(const Instance& instance, double p, int K, const RpOptions& opts = {});

/// Rank minimization with K free thresholds and the continuation pinned to
/// the asymptotic optimal tail; value is the expected rank (positive).
RpResult optimize_min_rank(int K, const RpOptions& opts = {});

/// t_i = prod_{m=i}^inf (m/(m+2))^(1/(m+1)), i = 1..K.
std::vector<double> min_rank_product_thresholds(int K);

/// prod_{m=1}^inf ((m+2)/m)^(1/(m+1)) ~= 3.8695.
double min_rank_optimal_rank();

enum class ClassicProblem { Secretary, OneTwoSecretary, MinRank };

struct ClassicSolution {
    ThresholdSchedule schedule;
    double value = 0.0;  // success probability; expected rank for MinRank
};

/// Analytic solutions of the three classic problems (p = 0), used as oracles
/// for the optimizer.
ClassicSolution classic_closed_form(ClassicProblem problem, int K = 60);

}  // namespace dos
