#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dos/finite_lp.hpp"
#include "dos/rng.hpp"
#include "dos/types.hpp"

namespace dos {

struct Estimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long trials = 0;
};

Estimate make_estimate(double sum, double sum_sq, long n);

struct TrialRecord {
    int selected_rank = 0;       // 0 = no selection
    double selected_value = 0.0; // default tail when none
    double opt_value = 0.0;      // best value in the online set (tail if empty)
    double stop_time = -1.0;     // arrival time of the selection, -1 when none
};

/// One trial of the threshold policy. Arrival times are i.i.d. uniform;
/// independent sampling puts an item in the history iff its time is < p,
/// dependent sampling assigns the h smallest times to the history. In the
/// dependent model an acceptance that lands on a history item voids the run
/// (no selection), mirroring the reduction between the models.
TrialRecord run_threshold_alg(const Instance& instance, const ThresholdSchedule& schedule,
                              const SamplingModel& model, Rng& rng);

/// Executes a stopping-rule matrix in the dependent model with h = rule.h():
/// at step i on an ell-local item, stops with conditional probability
/// i x_{i,ell} / (1 - mass spent). Precomputes the conditionals once.
class PolicyMatrixRunner {
public:
    explicit PolicyMatrixRunner(const StoppingRuleMatrix& rule);
    TrialRecord run(const Instance& instance, Rng& rng) const;

private:
    int h_, n_;
    std::vector<double> cond_;
    std::vector<std::size_t> offset_;
};

TrialRecord run_policy_matrix(const Instance& instance, const StoppingRuleMatrix& rule, Rng& rng);

using TrialFn = std::function<TrialRecord(const Instance&, Rng&)>;

struct RatioEstimate {
    Estimate alg;
    Estimate opt;
    double ratio = 0.0;  // alg.mean / opt.mean
};

/// Paired Monte Carlo estimates with common random numbers per trial; trial i
/// always uses Rng(seed, i), so results do not depend on the thread count.
/// Throws std::domain_error("DegenerateOpt") when the benchmark mean is zero.
RatioEstimate estimate_ratio(const Instance& instance, const TrialFn& algorithm, long trials,
                             std::uint64_t seed);

/// Ratio estimates against every 0/1 step instance Y^k for k = 1..k_cap in
/// one pass (the threshold policy is rank-based, so trials are shared).
std::vector<RatioEstimate> worst_k_sweep(const ThresholdSchedule& schedule,
                                         const SamplingModel& model, int n, int k_cap,
                                         long trials, std::uint64_t seed);

/// Selection frequency per global rank (index j-1 for rank j); the trailing
/// entry counts no-selection trials.
std::vector<Estimate> empirical_stop_distribution(const Instance& instance,
                                                  const ThresholdSchedule& schedule,
                                                  const SamplingModel& model, long trials,
                                                  std::uint64_t seed);

}  // namespace dos
