#include "dos/combinatorics.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dos {

namespace {

// C(62, 31) = 9.16e17 still fits in uint64; beyond that we switch to logs.
constexpr int kExactLimit = 62;

std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __uint128_t c = 1;
    for (int i = 1; i <= k; ++i) {
        // division is exact at every step: c equals C(n-k+i-1, i-1) here
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(c);
}

}  // namespace

double log_binom(int n, int k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("log_binom: k outside [0, n]");
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0.0;
    if (n <= kExactLimit) return static_cast<double>(binom_u64(n, k));
    return std::exp(log_binom(n, k));
}

double negbin_le(int k, int ell, double t) {
    if (ell < 1) throw std::invalid_argument("negbin_le: ell must be >= 1");
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("negbin_le: t outside [0,1]");
    if (k < ell) return 0.0;
    if (t == 0.0) return 0.0;
    // term_j = C(j-1, ell-1) (1-t)^(j-ell) t^ell, built by recurrence in j
    double term = std::pow(t, ell);
    double sum = term;
    for (int j = ell; j < k; ++j) {
        term *= (1.0 - t) * static_cast<double>(j) / static_cast<double>(j - ell + 1);
        sum += term;
    }
    return clamp_probability(sum, 1e-9);
}

double local_rank_prob(int N, int i, int j, int ell) {
    if (!(1 <= ell && ell <= i && i <= N && 1 <= j && j <= N))
        throw std::invalid_argument("local_rank_prob: indices out of range");
    // impossible: more better items needed than exist, or not enough worse ones
    if (ell - 1 > j - 1 || i - ell > N - j || i - ell < 0) return 0.0;
    if (N <= kExactLimit) {
        double num = binom(j - 1, ell - 1) * binom(N - j, i - ell);
        return clamp_probability(num / binom(N - 1, i - 1));
    }
    double lg = log_binom(j - 1, ell - 1) + log_binom(N - j, i - ell) - log_binom(N - 1, i - 1);
    return clamp_probability(std::exp(lg));
}

double opt_dist_dependent(int N, int h, int j) {
    if (!(0 <= h && h < N)) throw std::invalid_argument("opt_dist_dependent: need 0 <= h < N");
    if (j < 1) throw std::invalid_argument("opt_dist_dependent: need j >= 1");
    if (j > h + 1) return 0.0;
    double prod = 1.0;
    for (int s = 0; s <= j - 2; ++s) prod *= static_cast<double>(h - s) / static_cast<double>(N - s);
    return clamp_probability(static_cast<double>(N - h) / static_cast<double>(N - j + 1) * prod);
}

double opt_dist_independent(double p, int j) {
    if (!(0.0 <= p && p < 1.0)) throw std::invalid_argument("opt_dist_independent: need 0 <= p < 1");
    if (j < 1) throw std::invalid_argument("opt_dist_independent: need j >= 1");
    return (1.0 - p) * std::pow(p, j - 1);
}

double clamp_probability(double x, double tol) {
    if (x < -tol || x > 1.0 + tol)
        throw std::domain_error("probability outside [0,1] beyond tolerance: " + std::to_string(x));
    if (x < 0.0) return 0.0;
    if (x > 1.0) return 1.0;
    return x;
}

}  // namespace dos
