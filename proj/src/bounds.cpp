#include "dos/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "dos/combinatorics.hpp"
#include "dos/kernel.hpp"
#include "dos/limit.hpp"
#include "dos/optimize.hpp"
#include "dos/quadrature.hpp"
#include "dos/rng.hpp"
#include "dos/simplex.hpp"

namespace dos {

int default_lbp_kmax(double p) {
    if (p <= 0.0) return 2;
    return std::max(2, static_cast<int>(std::ceil(std::log(0.001) / std::log(p))));
}

int default_ubp_kmax(double p, int n) {
    return std::max(3, static_cast<int>(std::ceil(std::log(n / (1.0 - p)))));
}

std::vector<double> lbp_ratios(const ThresholdSchedule& schedule, double p, int k_max,
                               double quad_tol) {
    if (k_max < 1) throw std::invalid_argument("lbp_ratios: k_max >= 1");
    auto F = eval_Fk_all(schedule, k_max, quad_tol);
    std::vector<double> r(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        double denom = (k == k_max || p <= 0.0) ? 1.0 : 1.0 - std::pow(p, k);
        r[static_cast<std::size_t>(k - 1)] = F[static_cast<std::size_t>(k - 1)] / denom;
    }
    return r;
}

double evaluate_lbp_objective(const ThresholdSchedule& schedule, double p, int k_max,
                              double quad_tol) {
    auto r = lbp_ratios(schedule, p, k_max, quad_tol);
    return *std::min_element(r.begin(), r.end());
}

namespace {

/// Incremental evaluator for the truncated min-ratio objective. Caches the
/// per-interval integrals J[i][j] = int_{t_i}^{t_{i+1}} tau^{-i} *
/// P(Bin(j-1,tau) <= i-1) dtau, which depend only on the interval endpoints,
/// so a single-coordinate probe recomputes two intervals and re-accumulates.
class LbpEvaluator {
public:
    LbpEvaluator(double p, int k_max, double quad_tol)
        : p_(p), K_(k_max), quad_tol_(quad_tol) {}

    void set_times(std::vector<double> t) {
        t_ = std::move(t);
        J_.assign(static_cast<std::size_t>(K_), std::vector<double>(static_cast<std::size_t>(K_), 0.0));
        for (int i = 0; i < K_; ++i) recompute_interval(i, lower_of(i), upper_of(i), J_[static_cast<std::size_t>(i)]);
    }

    const std::vector<double>& times() const { return t_; }

    /// Objective with coordinate s probed at x (not committed).
    double probe(int s, double x, double beta) {
        recompute_interval(s - 1, (s == 0) ? p_ : t_[static_cast<std::size_t>(s - 1)], x, scratch_prev_);
        recompute_interval(s, x, (s + 1 < K_) ? t_[static_cast<std::size_t>(s + 1)] : 1.0, scratch_cur_);
        return combine(s, x, &scratch_prev_, &scratch_cur_, beta);
    }

    void commit(int s, double x) {
        t_[static_cast<std::size_t>(s)] = x;
        recompute_interval(s - 1, lower_of(s - 1), upper_of(s - 1), s >= 1 ? J_[static_cast<std::size_t>(s - 1)] : scratch_prev_);
        recompute_interval(s, lower_of(s), upper_of(s), J_[static_cast<std::size_t>(s)]);
    }

    double objective(double beta) { return combine(-1, 0.0, nullptr, nullptr, beta); }

    std::vector<double> ratios() {
        compute_ratio_buffer(-1, 0.0, nullptr, nullptr);
        return ratio_buffer_;
    }

private:
    double lower_of(int i) const {  // lower endpoint of interval i (0-based)
        if (i < 0) return p_;
        return t_[static_cast<std::size_t>(i)];
    }
    double upper_of(int i) const {
        if (i + 1 < K_) return t_[static_cast<std::size_t>(i + 1)];
        return 1.0;
    }

    /// interval index i covers [t_{i+1-1}, t_{i+1}] with weight tau^{-(i+1)};
    /// i = -1 (the [p, t_1) stretch) never contributes.
    void recompute_interval(int i, double a, double b, std::vector<double>& row) {
        if (i < 0) return;
        row.assign(static_cast<std::size_t>(K_), 0.0);
        if (b - a <= 0.0) return;
        const int rank = i + 1;
        const int jmax = K_;
        auto f = [rank, jmax](double tau, double* out) {
            const double w = std::exp(-rank * std::log(tau));
            double cdf = 1.0;
            double pmf = std::pow(tau, rank - 1);
            for (int j = 1; j <= jmax; ++j) {
                out[j - 1] = w * cdf;
                if (j >= rank) {
                    cdf -= tau * pmf;
                    if (cdf < 0.0) cdf = 0.0;
                    pmf *= (1.0 - tau) * static_cast<double>(j) / static_cast<double>(j + 1 - rank);
                }
            }
        };
        Quadrature::integrate(f, K_, std::max(a, 1e-12), b, quad_tol_, row.data());
    }

    void compute_ratio_buffer(int s, double x, const std::vector<double>* prev, const std::vector<double>* cur) {
        // P_j = sum_i T_i J[i][j]; T_i in logs with coordinate s overridden
        ratio_buffer_.assign(static_cast<std::size_t>(K_), 0.0);
        double log_T = 0.0;
        for (int i = 0; i < K_; ++i) {
            double ti = (i == s) ? x : t_[static_cast<std::size_t>(i)];
            log_T += std::log(std::max(ti, 1e-300));
            const double Ti = std::exp(log_T);
            const std::vector<double>* row = &J_[static_cast<std::size_t>(i)];
            if (i == s - 1 && prev) row = prev;
            if (i == s && cur) row = cur;
            for (int j = 0; j < K_; ++j)
                ratio_buffer_[static_cast<std::size_t>(j)] += Ti * (*row)[static_cast<std::size_t>(j)];
        }
        // prefix sums -> F_k, then divide by denominators
        double run = 0.0;
        for (int k = 1; k <= K_; ++k) {
            run += ratio_buffer_[static_cast<std::size_t>(k - 1)];
            double denom = (k == K_ || p_ <= 0.0) ? 1.0 : 1.0 - std::pow(p_, k);
            ratio_buffer_[static_cast<std::size_t>(k - 1)] = run / denom;
        }
    }

    double combine(int s, double x, const std::vector<double>* prev, const std::vector<double>* cur,
                   double beta) {
        compute_ratio_buffer(s, x, prev, cur);
        double rmin = *std::min_element(ratio_buffer_.begin(), ratio_buffer_.end());
        if (beta <= 0.0) return rmin;  // exact min
        double acc = 0.0;
        for (double r : ratio_buffer_) acc += std::exp(-beta * (r - rmin));
        return rmin - std::log(acc) / beta;
    }

    double p_;
    int K_;
    double quad_tol_;
    std::vector<double> t_;
    std::vector<std::vector<double>> J_;
    std::vector<double> scratch_prev_, scratch_cur_;
    std::vector<double> ratio_buffer_;
};

int ascent_on_evaluator(LbpEvaluator& ev, double p, int K, const LbpOptions& opts) {
    static const double kBetas[] = {64.0, 512.0, 4096.0, 32768.0, 0.0};  // 0 = exact min
    int total_sweeps = 0;
    for (double beta : kBetas) {
        double value = ev.objective(beta);
        for (int sweep = 0; sweep < opts.max_sweeps_per_phase; ++sweep) {
            ++total_sweeps;
            double before = value;
            for (int s = 0; s < K; ++s) {
                double lo = (s == 0) ? p : ev.times()[static_cast<std::size_t>(s - 1)];
                double hi = (s + 1 < K) ? ev.times()[static_cast<std::size_t>(s + 1)] : 1.0;
                auto line = [&](double xx) { return ev.probe(s, xx, beta); };
                GoldenResult g = golden_max(line, lo, hi, opts.x_tol);
                if (g.fx > value) {
                    ev.commit(s, g.x);
                    value = g.fx;
                }
            }
            if (value - before < opts.sweep_tol) break;
        }
    }
    return total_sweeps;
}

std::vector<double> clip_monotone(std::vector<double> t, double lo, double hi) {
    double prev = lo;
    for (auto& x : t) {
        x = std::clamp(x, prev, hi);
        prev = x;
    }
    return t;
}

}  // namespace

LbpResult lbp_lower_bound(double p, int k_max, const LbpOptions& opts) {
    if (!(0.0 <= p && p < 1.0)) throw std::invalid_argument("lbp_lower_bound: 0 <= p < 1");
    if (k_max < 2) throw std::invalid_argument("lbp_lower_bound: k_max >= 2");
    const int K = k_max;

    std::vector<std::vector<double>> starts;
    // secretary-style: hold at max(p, 1/e), then close linearly
    {
        std::vector<double> t(static_cast<std::size_t>(K));
        double t1 = std::max(p, std::exp(-1.0));
        for (int i = 0; i < K; ++i)
            t[static_cast<std::size_t>(i)] = t1 + (1.0 - t1) * i / static_cast<double>(K);
        starts.push_back(clip_monotone(std::move(t), p, 1.0));
    }
    // the explicit construction at its certified ratio
    if (p > 0.0) {
        double at = alpha_tilde(p);
        auto st = construct_thresholds(p, at, K);
        starts.push_back(clip_monotone(st.times.times(), p, 1.0));
    }
    // linear ramp
    {
        std::vector<double> t(static_cast<std::size_t>(K));
        for (int i = 0; i < K; ++i)
            t[static_cast<std::size_t>(i)] = p + (1.0 - p) * (i + 1) / static_cast<double>(K + 1);
        starts.push_back(std::move(t));
    }
    Rng rng(opts.seed, static_cast<std::uint64_t>(K));
    for (int r = 0; r < opts.restarts; ++r) {
        std::vector<double> t(static_cast<std::size_t>(K));
        for (auto& x : t) x = rng.next_double(p, 1.0);
        std::sort(t.begin(), t.end());
        starts.push_back(std::move(t));
    }

    LbpEvaluator ev(p, K, opts.search_quad_tol);
    std::vector<double> best_t;
    double best_value = -1.0;
    int sweeps = 0;
    for (auto& t0 : starts) {
        ev.set_times(t0);
        sweeps += ascent_on_evaluator(ev, p, K, opts);
        double v = ev.objective(0.0);
        if (v > best_value) {
            best_value = v;
            best_t = ev.times();
        }
    }

    ThresholdSchedule sched(p, best_t, true);
    auto ratios = lbp_ratios(sched, p, K, opts.final_quad_tol);
    double certified = *std::min_element(ratios.begin(), ratios.end());
    return {certified, sched, ratios, sweeps};
}

LpModel build_ubp(double p, int n, int k_max) {
    const double hr = p * n;
    const int h = static_cast<int>(std::lround(hr));
    if (std::abs(hr - h) > 1e-9)
        throw std::invalid_argument("build_ubp: p*N must be integral (use h/N)");
    if (!(0 <= h && h < n)) throw std::invalid_argument("build_ubp: need 0 <= pN < N");
    if (k_max < 1) throw std::invalid_argument("build_ubp: k_max >= 1");
    const double pe = static_cast<double>(h) / n;  // effective rate

    LpModel model;
    std::vector<std::vector<int>> col(static_cast<std::size_t>(n + 1));
    for (int i = h + 1; i <= n; ++i) {
        col[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(k_max + 1), -1);
        for (int ell = 1; ell <= k_max; ++ell)
            col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)] =
                model.add_var(VarLabel::stop(i, ell));
    }
    const int alpha_col = model.add_var(VarLabel::alpha());
    model.set_objective({{alpha_col, 1.0}});

    for (int i = h + 1; i <= n; ++i)
        for (int ell = 1; ell <= k_max; ++ell) {
            std::map<int, double> row;
            for (int j = h + 1; j < i; ++j)
                for (int s = 1; s <= k_max; ++s)
                    row[col[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]] += 1.0;
            row[col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)]] += i;
            model.add_row(row, LpModel::Relation::LessEq, 1.0);
        }

    // cumulative dominance coefficients over k
    std::map<int, double> acc;  // column -> sum over j <= k of coefficient
    for (int k = 1; k <= k_max; ++k) {
        const int j = k;  // add layer j = k
        for (int i = h + 1; i <= n; ++i) {
            const double log_hi = std::log(static_cast<double>(i) / n);
            const double one_minus = 1.0 - static_cast<double>(i - 1) / n;
            for (int ell = 1; ell <= std::min(j, k_max); ++ell) {
                double log_c = log_binom(j - 1, ell - 1) + ell * log_hi;
                double coef;
                if (j - ell > 0)
                    coef = (one_minus <= 0.0) ? 0.0 : std::exp(log_c + (j - ell) * std::log(one_minus));
                else
                    coef = std::exp(log_c);
                if (coef != 0.0)
                    acc[col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)]] += coef;
            }
        }
        std::map<int, double> row;
        row[alpha_col] = (pe <= 0.0) ? 1.0 : 1.0 - std::pow(pe, k);
        for (const auto& [c, v] : acc) row[c] = -v;
        model.add_row(row, LpModel::Relation::LessEq, 0.0);
    }
    return model;
}

double ubp_upper_bound(double p, int n, int k_max) {
    LpModel model = build_ubp(p, n, k_max);
    auto res = solve_lp(model);
    if (res.status != SolveStatus::Optimal)
        throw std::runtime_error("ubp_upper_bound: LP did not reach optimality");
    return res.objective;
}

AlphaCertificate compute_certificate(double p, int n, int k_max_lower, int k_max_upper) {
    auto t0 = std::chrono::steady_clock::now();
    AlphaCertificate cert;
    cert.p = p;
    cert.n = n;
    cert.k_max_lower = k_max_lower > 0 ? k_max_lower : default_lbp_kmax(p);
    cert.k_max_upper = k_max_upper > 0 ? k_max_upper : default_ubp_kmax(p, n);

    const double inv_e = std::exp(-1.0);
    double lower;
    std::string method_lower;
    if (p <= inv_e) {
        lower = closed_alpha_small_p(p);
        method_lower = "ClosedForm1e";
    } else {
        auto lbp = lbp_lower_bound(p, cert.k_max_lower);
        lower = lbp.value;
        method_lower = "LBP";
        double at = alpha_tilde(p);
        if (at > lower) {
            lower = at;
            method_lower = "Construction";
        }
    }

    double upper;
    std::string method_upper;
    if (p <= inv_e) {
        upper = closed_alpha_small_p(p);
        method_upper = "ClosedForm1e";
    } else {
        upper = ubp_upper_bound(p, n, cert.k_max_upper);
        method_upper = "UBP";
        double cap = alpha_star();
        if (cap < upper) {
            upper = cap;
            method_upper = "AlphaStarCap";
        }
    }

    cert.lower = lower;
    cert.upper = upper;
    cert.method_lower = method_lower;
    cert.method_upper = method_upper;
    auto t1 = std::chrono::steady_clock::now();
    cert.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return cert;
}

}  // namespace dos
