#pragma once

#include <functional>

namespace dos {

/// Adaptive Gauss-Legendre quadrature with 15-point panels. A panel is
/// accepted when it agrees with its two half-panels within the local share of
/// the absolute tolerance, otherwise it splits. Deterministic.
class Quadrature {
public:
    /// Vector integrand: writes f(x) into out[0..dim).
    using VecFn = std::function<void(double x, double* out)>;

    /// Integrates into out[0..dim); returns an error estimate bound.
    static double integrate(const VecFn& f, int dim, double a, double b, double abs_tol,
                            double* out);

    static double integrate_scalar(const std::function<double(double)>& f, double a, double b,
                                   double abs_tol, double* err = nullptr);
};

}  // namespace dos
