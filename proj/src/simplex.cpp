#include "dos/simplex.hpp"

namespace dos {

SimplexResult<double> solve_lp(const LpModel& model) {
    SimplexSolver<double> solver(1e-9);
    return solver.solve(model);
}

}  // namespace dos
