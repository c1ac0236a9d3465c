#include "dos/finite_lp.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "dos/combinatorics.hpp"

namespace dos {

StoppingRuleMatrix::StoppingRuleMatrix(int h, int n) : h_(h), n_(n) {
    if (!(0 <= h && h < n)) throw std::invalid_argument("StoppingRuleMatrix: need 0 <= h < n");
    offset_.assign(static_cast<std::size_t>(n - h), 0);
    std::size_t total = 0;
    for (int i = h + 1; i <= n; ++i) {
        offset_[static_cast<std::size_t>(i - h - 1)] = total;
        total += static_cast<std::size_t>(i);
    }
    x_.assign(total, 0.0);
}

std::size_t StoppingRuleMatrix::index(int i, int ell) const {
    if (!(h_ + 1 <= i && i <= n_ && 1 <= ell && ell <= i))
        throw std::invalid_argument("StoppingRuleMatrix: index out of range");
    return offset_[static_cast<std::size_t>(i - h_ - 1)] + static_cast<std::size_t>(ell - 1);
}

double StoppingRuleMatrix::mass_before(int i) const {
    double m = 0.0;
    for (int j = h_ + 1; j < i && j <= n_; ++j)
        for (int s = 1; s <= j; ++s) m += x(j, s);
    return m;
}

double StoppingRuleMatrix::conditional_stop_prob(int i, int ell) const {
    double denom = 1.0 - mass_before(i);
    if (denom <= 1e-12) return 0.0;
    return clamp_probability(i * x(i, ell) / denom, 1e-6);
}

void StoppingRuleMatrix::validate(double tol) const {
    for (int i = h_ + 1; i <= n_; ++i) {
        double prefix = mass_before(i);
        for (int ell = 1; ell <= i; ++ell) {
            if (x(i, ell) < -tol)
                throw std::invalid_argument("StoppingRuleMatrix: negative entry");
            if (i * x(i, ell) + prefix > 1.0 + tol)
                throw std::invalid_argument("StoppingRuleMatrix: feasibility row violated");
        }
    }
    if (total_mass() > 1.0 + tol)
        throw std::invalid_argument("StoppingRuleMatrix: total mass exceeds one");
}

double StoppingRuleMatrix::selection_probability(int j) const {
    double sum = 0.0;
    for (int i = h_ + 1; i <= n_; ++i)
        for (int ell = 1; ell <= std::min(i, j); ++ell) {
            double xi = x(i, ell);
            if (xi != 0.0) sum += i * xi / n_ * local_rank_prob(n_, i, j, ell);
        }
    return sum;
}

LpModel build_known_values_lp(const Instance& instance, int h) {
    const int n = instance.size();
    if (!(0 <= h && h < n)) throw std::invalid_argument("build_known_values_lp: need 0 <= h < N");
    const double tail = instance.default_tail();

    LpModel model;
    // column order: (i, ell) with i ascending, ell ascending
    std::vector<std::vector<int>> col(static_cast<std::size_t>(n + 1));
    for (int i = h + 1; i <= n; ++i) {
        col[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i + 1), -1);
        for (int ell = 1; ell <= i; ++ell)
            col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)] =
                model.add_var(VarLabel::stop(i, ell));
    }

    std::map<int, double> obj;
    for (int i = h + 1; i <= n; ++i)
        for (int ell = 1; ell <= i; ++ell) {
            double c = -tail;  // the no-stop term contributes Y_{N+1}(1 - sum x)
            for (int j = ell; j <= ell + n - i; ++j)
                c += instance.value(j) * (static_cast<double>(i) / n) * local_rank_prob(n, i, j, ell);
            obj[col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)]] = c;
        }
    model.set_objective(obj, tail);

    for (int i = h + 1; i <= n; ++i)
        for (int ell = 1; ell <= i; ++ell) {
            std::map<int, double> row;
            for (int j = h + 1; j < i; ++j)
                for (int s = 1; s <= j; ++s)
                    row[col[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]] += 1.0;
            row[col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)]] += i;
            model.add_row(row, LpModel::Relation::LessEq, 1.0);
        }
    return model;
}

double opt_dist_dependent_prefix(int n, int h, int k) {
    double sum = 0.0;
    for (int j = 1; j <= std::min(k, h + 1); ++j) sum += opt_dist_dependent(n, h, j);
    return std::min(sum, 1.0);
}

LpModel build_sdlp(int n, int h) {
    if (!(0 <= h && h < n)) throw std::invalid_argument("build_sdlp: need 0 <= h < N");

    // variables with ell > h+1 enter no dominance row and only consume
    // feasibility budget, so some optimal solution has them at zero; they
    // are dropped to keep the LP small and less degenerate
    const auto ell_cap = [h](int i) { return std::min(i, h + 1); };

    LpModel model;
    std::vector<std::vector<int>> col(static_cast<std::size_t>(n + 1));
    for (int i = h + 1; i <= n; ++i) {
        col[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(ell_cap(i) + 1), -1);
        for (int ell = 1; ell <= ell_cap(i); ++ell)
            col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)] =
                model.add_var(VarLabel::stop(i, ell));
    }
    const int alpha_col = model.add_var(VarLabel::alpha());
    model.set_objective({{alpha_col, 1.0}});

    for (int i = h + 1; i <= n; ++i)
        for (int ell = 1; ell <= ell_cap(i); ++ell) {
            std::map<int, double> row;
            for (int j = h + 1; j < i; ++j)
                for (int s = 1; s <= ell_cap(j); ++s)
                    row[col[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]] += 1.0;
            row[col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)]] += i;
            model.add_row(row, LpModel::Relation::LessEq, 1.0);
        }

    // dominance rows: alpha * sum_{j<=k} P(OPT = Y_j) - P(ALG in top k) <= 0
    for (int k = 1; k <= h + 1; ++k) {
        std::map<int, double> row;
        row[alpha_col] = opt_dist_dependent_prefix(n, h, k);
        for (int j = 1; j <= k; ++j)
            for (int i = h + 1; i <= n; ++i)
                for (int ell = 1; ell <= std::min({i, j, ell_cap(i)}); ++ell) {
                    double c = static_cast<double>(i) / n * local_rank_prob(n, i, j, ell);
                    if (c != 0.0)
                        row[col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)]] -= c;
                }
        model.add_row(row, LpModel::Relation::LessEq, 0.0);
    }
    return model;
}

StoppingRuleMatrix extract_policy(const std::vector<double>& solution,
                                  const std::vector<VarLabel>& labels, int h, int n, double tol) {
    if (solution.size() != labels.size())
        throw std::invalid_argument("extract_policy: solution/label size mismatch");
    StoppingRuleMatrix rule(h, n);
    for (std::size_t c = 0; c < labels.size(); ++c) {
        if (labels[c].kind != VarLabel::Kind::StopProb) continue;
        double v = solution[c];
        if (v < -tol) throw std::invalid_argument("extract_policy: negative stop probability");
        rule.set(labels[c].i, labels[c].ell, std::max(v, 0.0));
    }
    rule.validate(tol);
    return rule;
}

SdlpSolution solve_sdlp(int n, int h) {
    LpModel model = build_sdlp(n, h);
    auto res = solve_lp(model);
    if (res.status != SolveStatus::Optimal)
        throw std::runtime_error("solve_sdlp: LP did not reach optimality");
    SdlpSolution out{res.objective, extract_policy(res.solution, model.labels, h, n), {}};
    for (int k = 1; k <= h + 1; ++k) {
        double lhs = 0.0;
        for (int j = 1; j <= k; ++j) lhs += out.rule.selection_probability(j);
        out.dominance_slack.push_back(lhs - res.objective * opt_dist_dependent_prefix(n, h, k));
    }
    return out;
}

}  // namespace dos
