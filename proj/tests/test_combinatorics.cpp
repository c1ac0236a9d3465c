#include <doctest.h>

#include <cmath>

#include "dos/combinatorics.hpp"
#include "oracles.hpp"

using namespace dos;

TEST_CASE("binom small values are exact") {
    CHECK(binom(0, 0) == 1.0);
    CHECK(binom(5, 2) == 10.0);
    CHECK(binom(62, 31) == 465428353255261088.0);
    CHECK(binom(5, 6) == 0.0);
    CHECK(binom(120, 60) == doctest::Approx(std::exp(log_binom(120, 60))).epsilon(1e-12));
}

TEST_CASE("negbin_le matches a direct term-by-term sum") {
    auto direct = [](int k, int ell, double t) {
        double s = 0.0;
        for (int j = ell; j <= k; ++j)
            s += binom(j - 1, ell - 1) * std::pow(1.0 - t, j - ell) * std::pow(t, ell);
        return s;
    };
    CHECK(negbin_le(1, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(negbin_le(2, 1, 0.5) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(negbin_le(5, 2, 0.3) == doctest::Approx(0.47178).epsilon(1e-12));
    CHECK(negbin_le(5, 2, 0.3) == doctest::Approx(direct(5, 2, 0.3)).epsilon(1e-14));
    for (int k : {1, 3, 7, 20})
        for (int ell = 1; ell <= k; ++ell)
            for (double t : {0.0, 0.05, 0.31, 0.77, 1.0})
                CHECK(negbin_le(k, ell, t) == doctest::Approx(direct(k, ell, t)).epsilon(1e-12));
    CHECK(negbin_le(1, 2, 0.5) == 0.0);  // k < ell
}

TEST_CASE("negbin_le equals the binomial-tail identity") {
    // at most k tosses for ell heads  <=>  at least ell heads in k tosses
    for (int k : {2, 6, 13})
        for (int ell = 1; ell <= k; ++ell)
            for (double t : {0.1, 0.5, 0.9}) {
                double tail = 0.0;
                for (int m = ell; m <= k; ++m)
                    tail += binom(k, m) * std::pow(t, m) * std::pow(1.0 - t, k - m);
                CHECK(negbin_le(k, ell, t) == doctest::Approx(tail).epsilon(1e-12));
            }
}

TEST_CASE("negbin_le is non-decreasing in t") {
    for (int k : {3, 8})
        for (int ell = 1; ell <= k; ++ell) {
            double prev = -1.0;
            for (double t = 0.0; t <= 1.0 + 1e-9; t += 1e-3) {
                double cur = negbin_le(k, ell, std::min(t, 1.0));
                CHECK(cur >= prev - 1e-12);
                prev = cur;
            }
        }
}

TEST_CASE("negbin_le is non-increasing in ell") {
    for (int k : {4, 9})
        for (double t : {0.2, 0.6, 0.95})
            for (int ell = 1; ell < k; ++ell)
                CHECK(negbin_le(k, ell, t) >= negbin_le(k, ell + 1, t) - 1e-12);
}

TEST_CASE("binomial partition identity sums to one") {
    for (int j : {1, 2, 5, 17, 40})
        for (double t = 0.0; t <= 1.0 + 1e-9; t += 0.05) {
            double tt = std::min(t, 1.0);
            double s = 0.0;
            for (int ell = 1; ell <= j; ++ell)
                s += binom(j - 1, ell - 1) * std::pow(1.0 - tt, j - ell) * std::pow(tt, ell - 1);
            CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("local_rank_prob basics and permutation oracle") {
    CHECK(local_rank_prob(5, 1, 3, 1) == 1.0);
    CHECK(local_rank_prob(5, 5, 3, 3) == 1.0);
    CHECK(local_rank_prob(5, 3, 2, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(local_rank_prob(5, 3, 2, 1) ==
          doctest::Approx(oracles::count_local_rank_prob(5, 3, 2, 1)).epsilon(1e-12));
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            for (int ell = 1; ell <= i; ++ell)
                CHECK(local_rank_prob(5, i, j, ell) ==
                      doctest::Approx(oracles::count_local_rank_prob(5, i, j, ell)).epsilon(1e-12));
}

TEST_CASE("local_rank_prob sums to one over ell") {
    for (int n : {5, 9, 80})
        for (int i = 1; i <= std::min(n, 9); ++i)
            for (int j : {1, n / 2 + 1, n}) {
                double s = 0.0;
                for (int ell = 1; ell <= i; ++ell) s += local_rank_prob(n, i, j, ell);
                CHECK(s == doctest::Approx(1.0).epsilon(1e-10));
            }
}

TEST_CASE("opt_dist_dependent matches spec values and counting oracle") {
    CHECK(opt_dist_dependent(5, 2, 1) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(opt_dist_dependent(5, 2, 3) == doctest::Approx(0.1).epsilon(1e-15));
    double total = 0.0;
    for (int j = 1; j <= 5; ++j) total += opt_dist_dependent(5, 2, j);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    for (int n : {4, 6})
        for (int h = 0; h < n; ++h)
            for (int j = 1; j <= n; ++j)
                CHECK(opt_dist_dependent(n, h, j) ==
                      doctest::Approx(oracles::count_opt_dist_dependent(n, h, j)).epsilon(1e-12));
}

TEST_CASE("opt_dist_independent is geometric with telescoping sums") {
    CHECK(opt_dist_independent(0.0, 1) == 1.0);
    CHECK(opt_dist_independent(0.5, 3) == doctest::Approx(0.125).epsilon(1e-15));
    double s = 0.0;
    for (int j = 1; j <= 4; ++j) s += opt_dist_independent(0.5, j);
    CHECK(s == doctest::Approx(0.9375).epsilon(1e-15));
}

TEST_CASE("clamp_probability rejects gross violations") {
    CHECK(clamp_probability(1.0 + 5e-13) == 1.0);
    CHECK(clamp_probability(-5e-13) == 0.0);
    CHECK_THROWS(clamp_probability(1.1));
}
