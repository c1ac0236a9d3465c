#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dos {

/// Identifies what a column means in the owning formulation.
struct VarLabel {
    enum class Kind { StopProb, Alpha, Plain };
    Kind kind = Kind::Plain;
    int i = 0;    // step index, for StopProb
    int ell = 0;  // local rank, for StopProb

    static VarLabel stop(int i, int ell) { return {Kind::StopProb, i, ell}; }
    static VarLabel alpha() { return {Kind::Alpha, 0, 0}; }
    static VarLabel plain() { return {Kind::Plain, 0, 0}; }
    std::string name() const;
};

/// Sparse LP in the form  max c'x + c0  s.t. each row (a'x REL b), x >= 0,
/// with REL in {<=, =}. Rows keep one entry per column (duplicate-free).
template <typename Scalar>
struct LpModelT {
    enum class Relation { LessEq, Eq };

    struct Row {
        std::vector<std::pair<int, Scalar>> coeffs;  // sorted by column id
        Relation rel = Relation::LessEq;
        Scalar rhs{};
    };

    bool maximize = true;
    int num_vars = 0;
    std::vector<std::pair<int, Scalar>> objective;  // sorted by column id
    Scalar objective_constant{};
    std::vector<Row> rows;
    std::vector<VarLabel> labels;

    int add_var(VarLabel label) {
        labels.push_back(label);
        return num_vars++;
    }

    /// Accumulates a sparse row from a column->coefficient map.
    int add_row(const std::map<int, Scalar>& coeffs, Relation rel, Scalar rhs) {
        Row r;
        r.coeffs.assign(coeffs.begin(), coeffs.end());
        r.rel = rel;
        r.rhs = rhs;
        for (const auto& [col, c] : r.coeffs)
            if (col < 0 || col >= num_vars) throw std::invalid_argument("LpModel: bad column id");
        rows.push_back(std::move(r));
        return static_cast<int>(rows.size()) - 1;
    }

    void set_objective(const std::map<int, Scalar>& coeffs, Scalar constant = Scalar{}) {
        objective.assign(coeffs.begin(), coeffs.end());
        objective_constant = constant;
    }
};

using LpModel = LpModelT<double>;

/// Plain-text sparse serialization. Header `vars N rows M maximize|minimize`,
/// one line `row col coeff` per nonzero (row -1 holds the objective), then one
/// line `rel rhs` per row in order, and a final `offset c` when the objective
/// carries a constant. Decimals use 17 significant digits.
std::string serialize_lp(const LpModel& model);
LpModel parse_lp(const std::string& text);

}  // namespace dos
