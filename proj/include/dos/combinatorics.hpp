#pragma once

namespace dos {

/// Binomial coefficient C(n, k). Exact 64-bit integer arithmetic for n <= 62,
/// log-space with exponentiation above. Returns 0 outside the valid range.
double binom(int n, int k);

/// log C(n, k); requires 0 <= k <= n.
double log_binom(int n, int k);

/// P(NegativeBinomial(ell, t) <= k): the probability that at most k coin
/// tosses are needed for ell heads, when heads come up with probability t.
/// Equals sum_{j=ell}^{k} C(j-1, ell-1) (1-t)^(j-ell) t^ell; 0 when k < ell.
double negbin_le(int k, int ell, double t);

/// P(item of global rank j is an ell-local maximum | it arrives at step i)
/// in a uniform random order of N items:
///   C(j-1, ell-1) C(N-j, i-ell) / C(N-1, i-1).
/// Returns 0 for combinatorially impossible configurations.
double local_rank_prob(int N, int i, int j, int ell);

/// Dependent sampling with history size h out of N items:
/// P(best online value has global rank j). Zero for j > h + 1.
double opt_dist_dependent(int N, int h, int j);

/// Independent sampling with rate p: P(best online value has global rank j)
/// = (1-p) p^(j-1).
double opt_dist_independent(double p, int j);

/// Clamps a computed probability to [0, 1]. Violations beyond tol throw.
double clamp_probability(double x, double tol = 1e-12);

}  // namespace dos
