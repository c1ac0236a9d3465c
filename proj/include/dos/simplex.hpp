#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <vector>

#include "dos/lp_model.hpp"

namespace dos {

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

template <typename Scalar>
struct SimplexResult {
    SolveStatus status = SolveStatus::IterationLimit;
    Scalar objective{};
    std::vector<Scalar> solution;  // structural variables only
    long iterations = 0;
};

/// Dense two-phase tableau simplex over an arbitrary ordered field. The pivot
/// order is fixed (largest reduced cost, lowest column index on ties; lowest
/// basis label on ratio ties) so repeated solves of the same model give
/// identical results. After a long stall the entering rule switches to
/// Bland's, which guarantees termination.
template <typename Scalar>
class SimplexSolver {
public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    explicit SimplexSolver(Scalar eps = Scalar{}, long max_iterations = 200000)
        : eps_(eps), max_iterations_(max_iterations) {}

    SimplexResult<Scalar> solve(const LpModelT<Scalar>& model) {
        const int n = model.num_vars;
        const int m = static_cast<int>(model.rows.size());

        // normalize rows to rhs >= 0; count extra columns
        std::vector<int> sign(static_cast<std::size_t>(m), 1);
        int num_slack = 0, num_art = 0;
        std::vector<int> slack_col(static_cast<std::size_t>(m), -1);
        std::vector<int> art_col(static_cast<std::size_t>(m), -1);
        for (int r = 0; r < m; ++r) {
            const auto& row = model.rows[static_cast<std::size_t>(r)];
            bool flip = row.rhs < Scalar{0};
            if (flip) sign[static_cast<std::size_t>(r)] = -1;
            bool less = (row.rel == LpModelT<Scalar>::Relation::LessEq);
            if (less) ++num_slack;  // +slack if kept <=, -surplus if flipped to >=
            bool needs_art = !less || flip;
            if (needs_art) ++num_art;
        }

        const int cols = n + num_slack + num_art;
        Matrix T = Matrix::Zero(m + 1, cols + 1);
        basis_.assign(static_cast<std::size_t>(m), -1);

        int next_slack = n, next_art = n + num_slack;
        for (int r = 0; r < m; ++r) {
            const auto& row = model.rows[static_cast<std::size_t>(r)];
            const Scalar s = Scalar(sign[static_cast<std::size_t>(r)]);
            for (const auto& [col, c] : row.coeffs) T(r, col) = s * c;
            T(r, cols) = s * row.rhs;
            bool less = (row.rel == LpModelT<Scalar>::Relation::LessEq);
            if (less) {
                slack_col[static_cast<std::size_t>(r)] = next_slack;
                T(r, next_slack) = s;  // slack (+1) or surplus (-1) after flip
                ++next_slack;
            }
            bool basic_ok = less && sign[static_cast<std::size_t>(r)] == 1;
            if (basic_ok) {
                basis_[static_cast<std::size_t>(r)] = slack_col[static_cast<std::size_t>(r)];
            } else {
                art_col[static_cast<std::size_t>(r)] = next_art;
                T(r, next_art) = Scalar{1};
                basis_[static_cast<std::size_t>(r)] = next_art;
                ++next_art;
            }
        }

        SimplexResult<Scalar> res;

        if (num_art > 0) {
            // phase 1: maximize -sum(artificials); z-row starts as +1 on each
            // artificial column, then basic artificial rows are eliminated
            for (int r = 0; r < m; ++r)
                if (art_col[static_cast<std::size_t>(r)] >= 0)
                    T(m, art_col[static_cast<std::size_t>(r)]) = Scalar{1};
            for (int r = 0; r < m; ++r)
                if (art_col[static_cast<std::size_t>(r)] >= 0) T.row(m) -= T.row(r);
            auto st = run(T, cols, n + num_slack + num_art, res.iterations);
            if (st != SolveStatus::Optimal) {
                res.status = (st == SolveStatus::Unbounded) ? SolveStatus::Infeasible : st;
                return res;
            }
            if (-T(m, cols) > eps_) {
                res.status = SolveStatus::Infeasible;
                return res;
            }
            // pivot remaining artificials out of the basis when possible
            for (int r = 0; r < m; ++r) {
                if (basis_[static_cast<std::size_t>(r)] < n + num_slack) continue;
                int enter = -1;
                for (int c = 0; c < n + num_slack; ++c)
                    if (abs_val(T(r, c)) > eps_) { enter = c; break; }
                if (enter >= 0) pivot(T, r, enter);
                // a fully zero row is redundant; its artificial stays at zero
            }
            // freeze artificial columns at zero
            for (int r = 0; r < m; ++r)
                if (art_col[static_cast<std::size_t>(r)] >= 0)
                    T.col(art_col[static_cast<std::size_t>(r)]).setZero();
        }

        // phase 2 objective row: reduced costs of -c (we maximize c'x)
        T.row(m).setZero();
        const Scalar obj_sign = model.maximize ? Scalar{1} : Scalar{-1};
        for (const auto& [col, c] : model.objective) T(m, col) = -obj_sign * c;
        for (int r = 0; r < m; ++r) {
            int b = basis_[static_cast<std::size_t>(r)];
            if (abs_val(T(m, b)) > Scalar{0}) T.row(m) -= T(m, b) * T.row(r);
        }

        auto st = run(T, cols, n + num_slack, res.iterations);
        res.status = st;
        if (st != SolveStatus::Optimal) return res;

        res.solution.assign(static_cast<std::size_t>(n), Scalar{0});
        for (int r = 0; r < m; ++r)
            if (basis_[static_cast<std::size_t>(r)] < n)
                res.solution[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] = T(r, cols);
        Scalar z = T(m, cols);  // phase-2 row accumulates z in rhs
        res.objective = obj_sign * z + model.objective_constant;
        return res;
    }

private:
    static Scalar abs_val(const Scalar& x) { return x < Scalar{0} ? Scalar(-x) : x; }

    void pivot(Matrix& T, int r, int s) {
        const int rows = static_cast<int>(T.rows());
        Scalar inv = Scalar{1} / T(r, s);
        T.row(r) *= inv;
        T(r, s) = Scalar{1};
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Scalar f = T(i, s);
            if (!(abs_val(f) > Scalar{0})) continue;
            T.row(i) -= f * T.row(r);
            T(i, s) = Scalar{0};
        }
        basis_[static_cast<std::size_t>(r)] = s;
    }

    /// One simplex phase on the current tableau. `active_cols` restricts the
    /// entering candidates (used to ignore artificials in phase 2).
    SolveStatus run(Matrix& T, int rhs_col, int active_cols, long& iterations) {
        const int m = static_cast<int>(T.rows()) - 1;
        long stall = 0;
        const long bland_after = 200 + 4L * (m + active_cols);
        Scalar last_obj = T(m, rhs_col);
        while (true) {
            if (++iterations > max_iterations_) return SolveStatus::IterationLimit;
            bool bland = stall > bland_after;
            int enter = -1;
            if (bland) {
                for (int c = 0; c < active_cols; ++c)
                    if (T(m, c) < -eps_) { enter = c; break; }
            } else {
                Scalar best{};
                for (int c = 0; c < active_cols; ++c)
                    if (T(m, c) < -eps_ && (enter == -1 || T(m, c) < best)) {
                        best = T(m, c);
                        enter = c;
                    }
            }
            if (enter == -1) return SolveStatus::Optimal;

            // ratio test: find the minimum ratio, then take the largest pivot
            // within a degeneracy band of it (lowest basis label under Bland)
            int leave = -1;
            Scalar best_ratio{};
            for (int r = 0; r < m; ++r) {
                if (!(T(r, enter) > eps_)) continue;
                Scalar rhs = T(r, rhs_col) < Scalar{0} ? Scalar{0} : T(r, rhs_col);
                Scalar ratio = rhs / T(r, enter);
                if (leave == -1 || ratio < best_ratio) {
                    best_ratio = ratio;
                    leave = r;
                }
            }
            if (leave == -1) return SolveStatus::Unbounded;
            const Scalar band = eps_ * (Scalar{1} + abs_val(best_ratio));
            for (int r = 0; r < m; ++r) {
                if (r == leave || !(T(r, enter) > eps_)) continue;
                Scalar rhs = T(r, rhs_col) < Scalar{0} ? Scalar{0} : T(r, rhs_col);
                if (rhs / T(r, enter) > best_ratio + band) continue;
                bool take = bland ? basis_[static_cast<std::size_t>(r)] <
                                        basis_[static_cast<std::size_t>(leave)]
                                  : T(r, enter) > T(leave, enter);
                if (take) leave = r;
            }
            pivot(T, leave, enter);

            if (T(m, rhs_col) > last_obj + eps_) {
                stall = 0;
                last_obj = T(m, rhs_col);
            } else {
                ++stall;
            }
        }
    }

    Scalar eps_;
    long max_iterations_;
    std::vector<int> basis_;
};

/// Solve with the defaults appropriate for double precision.
SimplexResult<double> solve_lp(const LpModel& model);

}  // namespace dos
