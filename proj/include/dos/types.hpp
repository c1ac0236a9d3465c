#pragma once

#include <cstddef>
#include <vector>

namespace dos {

/// A value sequence Y_1 >= Y_2 >= ... >= Y_N together with the default reward
/// Y_{N+1} obtained when no item is selected. Immutable after construction.
class Instance {
public:
    /// Throws std::invalid_argument if values are not non-increasing or the
    /// tail exceeds the last value.
    explicit Instance(std::vector<double> values, double default_tail = 0.0);

    /// k ones followed by zeros: the extreme points of the adversary's
    /// strategy set in the competitive-ratio problem.
    static Instance step(int n, int k);

    /// The classic problems at a given length.
    static Instance secretary(int n) { return step(n, 1); }

    int size() const { return static_cast<int>(values_.size()); }
    double value(int rank) const;  // rank is 1-based; rank > N yields the tail
    double default_tail() const { return default_tail_; }
    const std::vector<double>& values() const { return values_; }

    /// True when all values are non-negative and the tail is zero, which the
    /// adversarial model requires.
    bool adversarial_ok() const;

    /// Copy with one extra trailing item equal to the default tail.
    Instance with_appended_tail_value() const;

private:
    std::vector<double> values_;
    double default_tail_;
};

/// How the history (sample) set is formed.
struct SamplingModel {
    enum class Kind { Independent, Dependent };

    Kind kind;
    double p = 0.0;  // Independent: each item sampled with probability p
    int h = 0;       // Dependent: exactly h items sampled
    int n = 0;       // Dependent: total number of items

    static SamplingModel independent(double p);
    static SamplingModel dependent(int h, int n);

    /// Sampling rate: p for independent, h/n for dependent.
    double rate() const;
};

/// Non-decreasing acceptance times t_1 <= t_2 <= ... in [p, 1]. The policy
/// accepts the first ell-local maximum arriving at time >= t_ell. Times past
/// the stored prefix are 1 when tail_is_one (never accept), otherwise they
/// repeat the last stored time.
class ThresholdSchedule {
public:
    ThresholdSchedule(double p, std::vector<double> times, bool tail_is_one = true);

    double p() const { return p_; }
    int size() const { return static_cast<int>(times_.size()); }
    bool tail_is_one() const { return tail_is_one_; }
    const std::vector<double>& times() const { return times_; }

    /// t_ell for any ell >= 1.
    double time_for_rank(int ell) const;

    /// T_i = prod_{j<=i} t_j, in log space (log T_i); i in [1, size()].
    double log_prefix_product(int i) const;

private:
    double p_;
    std::vector<double> times_;
    std::vector<double> log_prefix_;
    bool tail_is_one_;
};

}  // namespace dos
