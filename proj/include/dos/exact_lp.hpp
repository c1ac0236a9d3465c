#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "dos/simplex.hpp"

namespace dos {

/// Exact-arithmetic mode used to generate golden values at small sizes
/// (N <= 10 or so); everything else runs in double precision.
using Rational = boost::multiprecision::cpp_rational;

Rational binom_exact(int n, int k);
Rational local_rank_prob_exact(int n, int i, int j, int ell);
Rational opt_dist_dependent_exact(int n, int h, int j);

LpModelT<Rational> build_known_values_lp_exact(const std::vector<Rational>& values,
                                               const Rational& tail, int h);
LpModelT<Rational> build_sdlp_exact(int n, int h);

inline SimplexResult<Rational> solve_lp_exact(const LpModelT<Rational>& model) {
    SimplexSolver<Rational> solver(Rational(0));
    return solver.solve(model);
}

}  // namespace dos
