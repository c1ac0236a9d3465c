#pragma once

#include "dos/types.hpp"

namespace dos {

/// Conditional expected value of accepting an ell-local item at step i, i.e.
/// E[Y_rank | the step-i item is an ell-local maximum]. The step-i item has
/// global rank j with probability (i/N) * local_rank_prob(N, i, j, ell).
double accept_value(const Instance& instance, int i, int ell);

/// Exact optimal expected reward conditional on the history containing
/// exactly h items, by backward induction over states (step, local rank):
///   V_{N+1} = Y_{N+1},   V_i = (1/i) sum_ell max(accept_value(i, ell), V_{i+1}).
/// Returns V_{h+1}. Accepts 0 <= h <= N (h = N means nothing can be chosen).
double dp_optimal(const Instance& instance, int h);

}  // namespace dos
