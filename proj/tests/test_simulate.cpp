#include <doctest.h>

#include <cmath>

#include "dos/combinatorics.hpp"
#include "dos/kernel.hpp"
#include "dos/simulate.hpp"

using namespace dos;

namespace {

TrialFn threshold_fn(const ThresholdSchedule& s, const SamplingModel& m) {
    return [s, m](const Instance& inst, Rng& rng) { return run_threshold_alg(inst, s, m, rng); };
}

}  // namespace

TEST_CASE("identical seeds give identical trial records") {
    Instance inst({1.0, 0.8, 0.3, 0.1, 0.0}, 0.0);
    ThresholdSchedule s(0.3, {0.4, 0.7}, true);
    auto model = SamplingModel::independent(0.3);
    for (int t = 0; t < 50; ++t) {
        Rng a(555, static_cast<std::uint64_t>(t)), b(555, static_cast<std::uint64_t>(t));
        TrialRecord ra = run_threshold_alg(inst, s, model, a);
        TrialRecord rb = run_threshold_alg(inst, s, model, b);
        CHECK(ra.selected_rank == rb.selected_rank);
        CHECK(ra.stop_time == rb.stop_time);
        CHECK(ra.opt_value == rb.opt_value);
    }
}

TEST_CASE("the all-ones schedule never stops") {
    Instance inst = Instance::secretary(20);
    ThresholdSchedule ones(0.0, {1.0, 1.0}, true);
    auto model = SamplingModel::independent(0.0);
    for (int t = 0; t < 200; ++t) {
        Rng rng(9, static_cast<std::uint64_t>(t));
        TrialRecord rec = run_threshold_alg(inst, ones, model, rng);
        CHECK(rec.selected_rank == 0);
        CHECK(rec.selected_value == 0.0);
    }
}

TEST_CASE("single item is taken whenever it is online") {
    Instance one({1.0}, 0.0);
    ThresholdSchedule s(0.4, {0.4}, true);
    auto model = SamplingModel::independent(0.4);
    for (int t = 0; t < 300; ++t) {
        Rng rng(13, static_cast<std::uint64_t>(t));
        TrialRecord rec = run_threshold_alg(one, s, model, rng);
        CHECK(rec.selected_value == rec.opt_value);  // takes it iff online
    }
}

TEST_CASE("secretary success probability matches the limit kernel at N=200") {
    const double t1 = std::exp(-1.0);
    ThresholdSchedule s(0.0, {t1}, true);
    auto sweep = worst_k_sweep(s, SamplingModel::independent(0.0), 200, 1, 300000, 777);
    double expected = eval_Fk(s, 1);  // 1/e in the limit; N=200 sits slightly above
    double sigma = sweep[0].alg.stderr_;
    CHECK(std::abs(sweep[0].alg.mean - expected) <= 3.0 * sigma + 2e-3);
    CHECK(sweep[0].alg.mean >= expected - 3.0 * sigma);  // finite N dominates the limit
}

TEST_CASE("worst-k opt frequencies match the geometric benchmark") {
    ThresholdSchedule s(0.5, {0.6, 0.9}, true);
    auto sweep = worst_k_sweep(s, SamplingModel::independent(0.5), 100, 6, 200000, 991);
    for (int k = 1; k <= 6; ++k) {
        double expected = 1.0 - std::pow(0.5, k);
        const Estimate& opt = sweep[static_cast<std::size_t>(k - 1)].opt;
        CHECK(std::abs(opt.mean - expected) <= 3.0 * opt.stderr_ + 1e-3);
    }
}

TEST_CASE("dependent-model opt distribution matches the closed form") {
    const int n = 8, h = 4;
    Instance inst({8, 7, 6, 5, 4, 3, 2, 1}, 0.0);
    ThresholdSchedule ones(0.5, {1.0}, true);
    auto model = SamplingModel::dependent(h, n);
    const long trials = 200000;
    std::vector<long> counts(static_cast<std::size_t>(n + 1), 0);
    for (long t = 0; t < trials; ++t) {
        Rng rng(31, static_cast<std::uint64_t>(t));
        TrialRecord rec = run_threshold_alg(inst, ones, model, rng);
        int rank = 9 - static_cast<int>(std::lround(rec.opt_value));
        ++counts[static_cast<std::size_t>(rank)];
    }
    for (int j = 1; j <= h + 1; ++j) {
        double expected = opt_dist_dependent(n, h, j);
        double freq = static_cast<double>(counts[static_cast<std::size_t>(j)]) / trials;
        double sigma = std::sqrt(expected * (1.0 - expected) / trials);
        CHECK(std::abs(freq - expected) <= 3.5 * sigma);
    }
}

TEST_CASE("estimate_ratio returns one for constant instances under any stopping rule") {
    Instance c({2.0, 2.0, 2.0, 2.0, 2.0, 2.0}, 0.0);
    // accept any local rank from 0.3 on: stops unless all six arrivals land
    // before 0.3 (probability 0.3^6)
    ThresholdSchedule s(0.0, {0.3, 0.3, 0.3, 0.3, 0.3, 0.3}, true);
    auto est = estimate_ratio(c, threshold_fn(s, SamplingModel::independent(0.0)), 20000, 5);
    CHECK(est.ratio >= 0.997);
    CHECK(est.alg.stderr_ < 0.01);
}

TEST_CASE("empirical stop distribution matches the limit integral at N=500") {
    ThresholdSchedule s(0.0, {std::exp(-1.0)}, true);
    auto dist = empirical_stop_distribution(Instance::secretary(500), s,
                                            SamplingModel::independent(0.0), 100000, 2025);
    auto pj = limit_stop_distribution(s, 5);
    for (int j = 1; j <= 5; ++j) {
        const Estimate& e = dist[static_cast<std::size_t>(j - 1)];
        CHECK(std::abs(e.mean - pj[static_cast<std::size_t>(j - 1)]) <= 3.0 * e.stderr_ + 2.5e-3);
    }
}

TEST_CASE("ratio is non-increasing in N within joint noise") {
    ThresholdSchedule s(0.5, {0.6, 0.85}, true);
    auto model = SamplingModel::independent(0.5);
    auto a = worst_k_sweep(s, model, 100, 1, 150000, 3131)[0];
    auto b = worst_k_sweep(s, model, 150, 1, 3132, 150000)[0];
    double joint = 3.0 * std::hypot(a.alg.stderr_, b.alg.stderr_) / a.opt.mean + 1e-3;
    CHECK(b.ratio <= a.ratio + joint);
}

TEST_CASE("appending a zero item never raises the algorithm estimate beyond noise") {
    Instance base({1.0, 0.7, 0.4, 0.2, 0.1}, 0.0);
    Instance longer = base.with_appended_tail_value();
    ThresholdSchedule s(0.0, {0.4, 0.8}, true);
    auto model = SamplingModel::independent(0.0);
    auto ea = estimate_ratio(base, threshold_fn(s, model), 150000, 88);
    auto eb = estimate_ratio(longer, threshold_fn(s, model), 150000, 88);
    CHECK(eb.alg.mean <= ea.alg.mean + 3.0 * std::hypot(ea.alg.stderr_, eb.alg.stderr_));
}

TEST_CASE("zero policy matrix never stops; single-mass matrix stops as designed") {
    const int n = 6, h = 2;
    Instance inst({6, 5, 4, 3, 2, 1}, 0.0);
    StoppingRuleMatrix zero(h, n);
    Rng rng(1, 0);
    CHECK(run_policy_matrix(inst, zero, rng).selected_rank == 0);

    StoppingRuleMatrix single(h, n);
    single.set(h + 1, 1, 1.0 / (h + 1));
    PolicyMatrixRunner runner(single);
    long stops = 0;
    const long trials = 120000;
    for (long t = 0; t < trials; ++t) {
        Rng r(70, static_cast<std::uint64_t>(t));
        TrialRecord rec = runner.run(inst, r);
        if (rec.selected_rank != 0) {
            CHECK(rec.stop_time == doctest::Approx((h + 1.0) / n));
            ++stops;
        }
    }
    double freq = static_cast<double>(stops) / trials;
    double expected = 1.0 / (h + 1);
    CHECK(std::abs(freq - expected) <= 3.0 * std::sqrt(expected * (1 - expected) / trials));
}

TEST_CASE("estimate_ratio raises DegenerateOpt on an all-zero benchmark") {
    Instance zero({0.0, 0.0, 0.0}, 0.0);
    ThresholdSchedule s(0.0, {0.5}, true);
    CHECK_THROWS_AS(estimate_ratio(zero, threshold_fn(s, SamplingModel::independent(0.0)), 100, 7),
                    std::domain_error);
}
