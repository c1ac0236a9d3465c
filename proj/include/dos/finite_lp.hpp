#pragma once

#include <vector>

#include "dos/lp_model.hpp"
#include "dos/simplex.hpp"
#include "dos/types.hpp"

namespace dos {

/// Joint stop probabilities x_{i,ell} of a stopping rule for the dependent
/// model with history size h out of N items: the induced algorithm stops at
/// step i on an ell-local maximum with conditional probability
/// i x_{i,ell} / (1 - sum_{j<i} sum_s x_{j,s}).
class StoppingRuleMatrix {
public:
    StoppingRuleMatrix(int h, int n);

    int h() const { return h_; }
    int n() const { return n_; }

    double x(int i, int ell) const { return x_[index(i, ell)]; }
    void set(int i, int ell, double v) { x_[index(i, ell)] = v; }

    /// Mass spent strictly before step i: sum_{j=h+1}^{i-1} sum_s x_{j,s}.
    double mass_before(int i) const;
    double total_mass() const { return mass_before(n_ + 1); }

    /// Conditional stop probability at (i, ell); 0 once all mass is spent.
    double conditional_stop_prob(int i, int ell) const;

    /// Checks x >= 0 and the feasibility rows i*x + prefix <= 1 within tol.
    /// Throws std::invalid_argument on violation.
    void validate(double tol = 1e-9) const;

    /// P(rule selects the item of global rank j), by Lemma-style closed form
    /// sum_{i,ell} (i x_{i,ell} / N) * local_rank_prob(N, i, j, ell).
    double selection_probability(int j) const;

private:
    std::size_t index(int i, int ell) const;

    int h_, n_;
    std::vector<double> x_;        // packed rows i = h+1..n, ell = 1..i
    std::vector<std::size_t> offset_;
};

/// LP whose optimum is the best expected reward for known values Y,
/// conditional on the history having exactly h items.
LpModel build_known_values_lp(const Instance& instance, int h);

/// Stochastic-dominance LP for adversarial values; optimum is alpha_{N,p}
/// with p = h/N. Variables are x_{i,ell} plus the ratio variable alpha.
LpModel build_sdlp(int n, int h);

/// Sum over j <= k of opt_dist_dependent(n, h, j), the dominance denominator.
double opt_dist_dependent_prefix(int n, int h, int k);

/// Converts an LP assignment (labelled columns) into an executable rule.
/// Rejects assignments violating feasibility beyond tol.
StoppingRuleMatrix extract_policy(const std::vector<double>& solution,
                                  const std::vector<VarLabel>& labels, int h, int n,
                                  double tol = 1e-9);

/// Convenience: solve the SDLP and return (alpha, rule).
struct SdlpSolution {
    double alpha = 0.0;
    StoppingRuleMatrix rule;
    std::vector<double> dominance_slack;  // per k = 1..h+1
};
SdlpSolution solve_sdlp(int n, int h);

}  // namespace dos
