#include "dos/types.hpp"

#include <cmath>
#include <stdexcept>

namespace dos {

namespace {
constexpr double kMonotoneTol = 1e-12;
}

Instance::Instance(std::vector<double> values, double default_tail)
    : values_(std::move(values)), default_tail_(default_tail) {
    if (values_.empty()) throw std::invalid_argument("Instance: needs at least one value");
    for (std::size_t i = 0; i + 1 < values_.size(); ++i)
        if (values_[i] < values_[i + 1] - kMonotoneTol)
            throw std::invalid_argument("Instance: values must be non-increasing");
    if (default_tail_ > values_.back() + kMonotoneTol)
        throw std::invalid_argument("Instance: default_tail must not exceed the last value");
}

Instance Instance::step(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("Instance::step: bad dimensions");
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < std::min(k, n); ++i) v[static_cast<std::size_t>(i)] = 1.0;
    return Instance(std::move(v), 0.0);
}

double Instance::value(int rank) const {
    if (rank < 1) throw std::invalid_argument("Instance::value: rank must be >= 1");
    if (rank > size()) return default_tail_;
    return values_[static_cast<std::size_t>(rank - 1)];
}

bool Instance::adversarial_ok() const {
    return default_tail_ == 0.0 && values_.back() >= 0.0;
}

Instance Instance::with_appended_tail_value() const {
    std::vector<double> v = values_;
    v.push_back(default_tail_);
    return Instance(std::move(v), default_tail_);
}

SamplingModel SamplingModel::independent(double p) {
    if (!(0.0 <= p && p < 1.0))
        throw std::invalid_argument("SamplingModel: need 0 <= p < 1");
    return SamplingModel{Kind::Independent, p, 0, 0};
}

SamplingModel SamplingModel::dependent(int h, int n) {
    if (!(0 <= h && h < n))
        throw std::invalid_argument("SamplingModel: need 0 <= h < n");
    return SamplingModel{Kind::Dependent, static_cast<double>(h) / n, h, n};
}

double SamplingModel::rate() const { return p; }

ThresholdSchedule::ThresholdSchedule(double p, std::vector<double> times, bool tail_is_one)
    : p_(p), times_(std::move(times)), tail_is_one_(tail_is_one) {
    if (!(0.0 <= p_ && p_ < 1.0))
        throw std::invalid_argument("ThresholdSchedule: need 0 <= p < 1");
    if (times_.empty())
        throw std::invalid_argument("ThresholdSchedule: needs at least one time");
    double prev = p_;
    for (double t : times_) {
        if (t < prev - kMonotoneTol || t > 1.0 + kMonotoneTol)
            throw std::invalid_argument("ThresholdSchedule: times must be non-decreasing in [p, 1]");
        prev = t;
    }
    log_prefix_.resize(times_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < times_.size(); ++i) {
        acc += std::log(std::max(times_[i], 1e-300));
        log_prefix_[i] = acc;
    }
}

double ThresholdSchedule::time_for_rank(int ell) const {
    if (ell < 1) throw std::invalid_argument("ThresholdSchedule: ell must be >= 1");
    if (ell <= size()) return times_[static_cast<std::size_t>(ell - 1)];
    return tail_is_one_ ? 1.0 : times_.back();
}

double ThresholdSchedule::log_prefix_product(int i) const {
    if (i < 1 || i > size()) throw std::invalid_argument("ThresholdSchedule: bad prefix index");
    return log_prefix_[static_cast<std::size_t>(i - 1)];
}

}  // namespace dos
