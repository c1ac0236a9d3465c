#include <doctest.h>

#include "dos/dp.hpp"
#include "dos/rng.hpp"
#include "dos/combinatorics.hpp"
#include <cmath>
#include "oracles.hpp"

using namespace dos;

namespace {

Instance random_monotone_instance(int n, Rng& rng) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = rng.next_double();
    std::sort(v.rbegin(), v.rend());
    return Instance(std::move(v), 0.0);
}

}  // namespace

TEST_CASE("dp_optimal trivial cases") {
    CHECK(dp_optimal(Instance({1.0}), 0) == doctest::Approx(1.0));
    // h = N: nothing selectable, reward is the tail
    CHECK(dp_optimal(Instance({1.0, 0.5}, 0.25), 2) == doctest::Approx(0.25));
    CHECK_THROWS(dp_optimal(Instance({1.0}), 2));
}

TEST_CASE("dp_optimal classic secretary n=5 equals 13/30") {
    Instance sec = Instance::secretary(5);
    CHECK(dp_optimal(sec, 0) == doctest::Approx(13.0 / 30.0).epsilon(1e-14));
    CHECK(oracles::brute_force_optimal(sec, 0) == doctest::Approx(13.0 / 30.0).epsilon(1e-14));
}

TEST_CASE("dp_optimal equals brute force over all permutations, N <= 7") {
    Rng rng(7321, 0);
    for (int n = 1; n <= 7; ++n) {
        Instance inst = random_monotone_instance(n, rng);
        for (int h = 0; h <= n; ++h)
            CHECK(dp_optimal(inst, h) ==
                  doctest::Approx(oracles::brute_force_optimal(inst, h)).epsilon(1e-12));
    }
    // negative values with a forced stop: tail below the last value
    Instance neg({-1.0, -2.0, -3.0, -4.0}, -4.0);
    for (int h = 0; h <= 4; ++h)
        CHECK(dp_optimal(neg, h) ==
              doctest::Approx(oracles::brute_force_optimal(neg, h)).epsilon(1e-12));
}

namespace {

/// Expected optimal value under independent sampling at rate p: the binomial
/// mixture over history sizes of the conditional optima.
double independent_optimal_value(const Instance& inst, double p) {
    const int n = inst.size();
    double total = 0.0;
    for (int h = 0; h <= n; ++h)
        total += binom(n, h) * std::pow(p, h) * std::pow(1.0 - p, n - h) * dp_optimal(inst, h);
    return total;
}

}  // namespace

TEST_CASE("independent-sampling optimum never increases when a tail value is appended") {
    // the coupling inserts a least-ranked dummy at a random position, which
    // only works when history membership is independent per item; at fixed h
    // a longer online phase can help (e.g. secretary with h = N - 1)
    Rng rng(99, 1);
    for (int n : {3, 5, 6}) {
        Instance inst = random_monotone_instance(n, rng);
        Instance longer = inst.with_appended_tail_value();
        for (double p : {0.0, 0.25, 0.6})
            CHECK(independent_optimal_value(longer, p) <=
                  independent_optimal_value(inst, p) + 1e-12);
    }
    // at h = 0 the mixture is a single term, so the fixed-h claim holds there
    CHECK(dp_optimal(Instance::secretary(6), 0) <= 13.0 / 30.0 + 1e-12);
}

TEST_CASE("fixed history size is not monotone under appending") {
    // secretary with N = 5, h = 4: only the last step is online, value 1/5;
    // with one more zero item the policy can wait, value 9/30
    CHECK(dp_optimal(Instance::secretary(5), 4) == doctest::Approx(0.2));
    CHECK(dp_optimal(Instance::secretary(6), 4) == doctest::Approx(0.3));
}

TEST_CASE("constant instances are worth the constant") {
    Instance c({2.5, 2.5, 2.5, 2.5}, 2.5);
    for (int h = 0; h <= 4; ++h) CHECK(dp_optimal(c, h) == doctest::Approx(2.5).epsilon(1e-14));
}
