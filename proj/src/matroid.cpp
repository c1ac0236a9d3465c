#include "dos/matroid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dos {

UnitaryPartitionMatroid::UnitaryPartitionMatroid(int ground_size,
                                                 std::vector<std::vector<int>> parts,
                                                 std::vector<int> forbidden)
    : ground_size_(ground_size), parts_(std::move(parts)) {
    if (ground_size_ < 0) throw std::invalid_argument("UnitaryPartitionMatroid: bad ground size");
    part_of_.assign(static_cast<std::size_t>(ground_size_), -2);
    for (int c = 0; c < static_cast<int>(parts_.size()); ++c)
        for (int e : parts_[static_cast<std::size_t>(c)]) {
            if (e < 0 || e >= ground_size_ || part_of_[static_cast<std::size_t>(e)] != -2)
                throw std::invalid_argument("UnitaryPartitionMatroid: elements must partition the ground set");
            part_of_[static_cast<std::size_t>(e)] = c;
        }
    for (int e : forbidden) {
        if (e < 0 || e >= ground_size_ || part_of_[static_cast<std::size_t>(e)] != -2)
            throw std::invalid_argument("UnitaryPartitionMatroid: elements must partition the ground set");
        part_of_[static_cast<std::size_t>(e)] = -1;
    }
    for (int v : part_of_)
        if (v == -2)
            throw std::invalid_argument("UnitaryPartitionMatroid: every element needs a class");
}

int UnitaryPartitionMatroid::part_of(int element) const {
    if (element < 0 || element >= ground_size_)
        throw std::invalid_argument("UnitaryPartitionMatroid: element out of range");
    return part_of_[static_cast<std::size_t>(element)];
}

bool UnitaryPartitionMatroid::is_independent(const std::vector<int>& elements) const {
    std::vector<int> used(parts_.size(), 0);
    for (int e : elements) {
        int c = part_of(e);
        if (c < 0) return false;
        if (++used[static_cast<std::size_t>(c)] > 1) return false;
    }
    return true;
}

MatroidTrial parallel_threshold_select(const UnitaryPartitionMatroid& matroid,
                                       const std::vector<double>& weights, double p,
                                       const ThresholdSchedule& schedule, Rng& rng) {
    const int n = matroid.ground_size();
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("parallel_threshold_select: weight size mismatch");
    for (double w : weights)
        if (w < 0.0) throw std::invalid_argument("parallel_threshold_select: weights must be >= 0");
    if (std::abs(schedule.p() - p) > 1e-9)
        throw std::invalid_argument("parallel_threshold_select: schedule rate mismatch");

    std::vector<double> times(static_cast<std::size_t>(n));
    for (auto& t : times) t = rng.next_double();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return times[static_cast<std::size_t>(a)] < times[static_cast<std::size_t>(b)];
    });

    const int m = matroid.num_parts();
    // per part: elements better than e (by weight, ties by id) seen so far
    std::vector<std::vector<std::pair<double, int>>> seen(static_cast<std::size_t>(m));
    std::vector<int> chosen(static_cast<std::size_t>(m), -1);
    std::vector<double> best_online(static_cast<std::size_t>(m), 0.0);

    MatroidTrial trial;
    for (int e : order) {
        const int c = matroid.part_of(e);
        if (c < 0) continue;  // forbidden class: observed by nobody
        const double tau = times[static_cast<std::size_t>(e)];
        const bool online = tau >= p;
        auto& bucket = seen[static_cast<std::size_t>(c)];
        // local rank of e within its part: 1 + #better among revealed
        std::pair<double, int> key{-weights[static_cast<std::size_t>(e)], e};
        auto it = std::lower_bound(bucket.begin(), bucket.end(), key);
        const int ell = static_cast<int>(it - bucket.begin()) + 1;
        bucket.insert(it, key);
        if (online) {
            best_online[static_cast<std::size_t>(c)] =
                std::max(best_online[static_cast<std::size_t>(c)], weights[static_cast<std::size_t>(e)]);
            if (chosen[static_cast<std::size_t>(c)] < 0 && tau >= schedule.time_for_rank(ell))
                chosen[static_cast<std::size_t>(c)] = e;
        }
    }
    for (int c = 0; c < m; ++c) {
        if (chosen[static_cast<std::size_t>(c)] >= 0) {
            trial.selected.push_back(chosen[static_cast<std::size_t>(c)]);
            trial.weight += weights[static_cast<std::size_t>(chosen[static_cast<std::size_t>(c)])];
        }
        trial.opt_online_weight += best_online[static_cast<std::size_t>(c)];
    }
    return trial;
}

LiftedThresholdPolicy::LiftedThresholdPolicy(double p1, double p2, ThresholdSchedule base)
    : p1_(p1), p2_(p2), f_((p2 - p1) / (1.0 - p1)), base_(std::move(base)) {
    if (!(0.0 <= p1 && p1 < p2 && p2 < 1.0))
        throw std::invalid_argument("LiftedThresholdPolicy: need 0 <= p1 < p2 < 1");
    if (base_.p() > p1 + 1e-9)
        throw std::invalid_argument("LiftedThresholdPolicy: base policy rate exceeds p1");
}

TrialRecord LiftedThresholdPolicy::run(const Instance& instance, Rng& rng) const {
    const int n = instance.size();
    std::vector<double> t(static_cast<std::size_t>(n));
    for (auto& x : t) x = rng.next_double();

    // zeroed set X and re-drawn clocks on [f, 1] from a forked sub-stream
    Rng redraw = rng.fork(0x5eed);
    std::vector<char> zeroed(static_cast<std::size_t>(n), 0);
    std::vector<double> t2(t);
    for (int e = 0; e < n; ++e)
        if (t[static_cast<std::size_t>(e)] < f_) {
            zeroed[static_cast<std::size_t>(e)] = 1;
            t2[static_cast<std::size_t>(e)] = redraw.next_double(f_, 1.0);
        }

    // simulation order and Y'-ranks: zeroed elements fall below all others
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return t2[static_cast<std::size_t>(a)] < t2[static_cast<std::size_t>(b)];
    });
    auto better = [&](int a, int b) {  // does a beat b under Y'?
        bool za = zeroed[static_cast<std::size_t>(a)], zb = zeroed[static_cast<std::size_t>(b)];
        if (za != zb) return zb;
        if (!za && instance.value(a + 1) != instance.value(b + 1))
            return instance.value(a + 1) > instance.value(b + 1);
        return a < b;  // stable tie-break by original index
    };

    TrialRecord rec;
    rec.selected_value = instance.default_tail();
    bool any_online = false;
    for (int e = 0; e < n; ++e)
        if (t[static_cast<std::size_t>(e)] >= p2_) {
            rec.opt_value = any_online ? std::max(rec.opt_value, instance.value(e + 1))
                                       : instance.value(e + 1);
            any_online = true;
        }
    if (!any_online) rec.opt_value = instance.default_tail();

    std::vector<int> revealed;  // kept sorted by `better`
    for (int e : order) {
        const double tau2 = t2[static_cast<std::size_t>(e)];
        auto it = std::lower_bound(revealed.begin(), revealed.end(), e, better);
        const int ell = static_cast<int>(it - revealed.begin()) + 1;
        revealed.insert(it, e);
        const double psi = (tau2 - f_) / (1.0 - f_);  // base policy clock
        if (psi < p1_) continue;                      // simulation history
        if (psi >= base_.time_for_rank(ell)) {
            if (!zeroed[static_cast<std::size_t>(e)]) {
                rec.selected_rank = e + 1;
                rec.selected_value = instance.value(e + 1);
                rec.stop_time = t[static_cast<std::size_t>(e)];
            }
            break;  // the base policy stopped either way
        }
    }
    return rec;
}

}  // namespace dos
