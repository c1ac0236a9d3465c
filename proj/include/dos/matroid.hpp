#pragma once

#include <cstdint>
#include <vector>

#include "dos/rng.hpp"
#include "dos/simulate.hpp"
#include "dos/types.hpp"

namespace dos {

/// Ground set partitioned into color classes; a set is independent iff it
/// avoids the forbidden class and takes at most one element per other class.
class UnitaryPartitionMatroid {
public:
    /// parts[c] lists the element ids of class c; ids must partition
    /// 0..ground_size-1 together with `forbidden`.
    UnitaryPartitionMatroid(int ground_size, std::vector<std::vector<int>> parts,
                            std::vector<int> forbidden = {});

    int ground_size() const { return ground_size_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& part(int c) const { return parts_[static_cast<std::size_t>(c)]; }
    /// Class of an element; -1 means forbidden.
    int part_of(int element) const;
    bool is_forbidden(int element) const { return part_of(element) < 0; }

    bool is_independent(const std::vector<int>& elements) const;

private:
    int ground_size_;
    std::vector<std::vector<int>> parts_;
    std::vector<int> part_of_;
};

struct MatroidTrial {
    std::vector<int> selected;      // element ids, independent by construction
    double weight = 0.0;            // total selected weight
    double opt_online_weight = 0.0; // sum over parts of the best online weight
};

/// Runs one single-selection threshold policy per part in parallel on shared
/// arrival times (independent sampling at rate p); forbidden elements are
/// never selected.
MatroidTrial parallel_threshold_select(const UnitaryPartitionMatroid& matroid,
                                       const std::vector<double>& weights, double p,
                                       const ThresholdSchedule& schedule, Rng& rng);

/// Wraps a p1 threshold policy into a p2-DOS algorithm (p1 < p2): elements
/// arriving before f = (p2-p1)/(1-p1) are zeroed and re-timed uniformly on
/// [f, 1]; the base policy runs on the rescaled clock and selections of
/// zeroed elements are discarded.
class LiftedThresholdPolicy {
public:
    LiftedThresholdPolicy(double p1, double p2, ThresholdSchedule base);

    double p1() const { return p1_; }
    double p2() const { return p2_; }

    /// Single-selection run; the benchmark in the record is the best value
    /// among items arriving after p2.
    TrialRecord run(const Instance& instance, Rng& rng) const;

private:
    double p1_, p2_, f_;
    ThresholdSchedule base_;
};

}  // namespace dos
