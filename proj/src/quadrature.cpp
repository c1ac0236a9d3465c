#include "dos/quadrature.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace dos {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr int kN = 15;
constexpr double kNodes[kN] = {
    -0.98799251802048542849, -0.93727339240070590431, -0.84820658341042721620,
    -0.72441773136017004742, -0.57097217260853884754, -0.39415134707756336990,
    -0.20119409399743452230, 0.0,
    0.20119409399743452230,  0.39415134707756336990,  0.57097217260853884754,
    0.72441773136017004742,  0.84820658341042721620,  0.93727339240070590431,
    0.98799251802048542849};
constexpr double kWeights[kN] = {
    0.03075324199611726835, 0.07036604748810812471, 0.10715922046717193501,
    0.13957067792615431445, 0.16626920581699393355, 0.18616100001556221103,
    0.19843148532711157646, 0.20257824192556127288,
    0.19843148532711157646, 0.18616100001556221103, 0.16626920581699393355,
    0.13957067792615431445, 0.10715922046717193501, 0.07036604748810812471,
    0.03075324199611726835};

void panel(const Quadrature::VecFn& f, int dim, double a, double b, double* acc,
           std::vector<double>& scratch) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int d = 0; d < dim; ++d) acc[d] = 0.0;
    for (int q = 0; q < kN; ++q) {
        f(mid + half * kNodes[q], scratch.data());
        const double w = kWeights[q] * half;
        for (int d = 0; d < dim; ++d) acc[d] += w * scratch[d];
    }
}

double recurse(const Quadrature::VecFn& f, int dim, double a, double b, double tol,
               const double* whole, double* out, std::vector<double>& scratch, int depth) {
    std::vector<double> left(static_cast<std::size_t>(dim)), right(static_cast<std::size_t>(dim));
    const double mid = 0.5 * (a + b);
    panel(f, dim, a, mid, left.data(), scratch);
    panel(f, dim, mid, b, right.data(), scratch);
    double diff = 0.0;
    for (int d = 0; d < dim; ++d)
        diff = std::max(diff, std::abs(left[d] + right[d] - whole[d]));
    if (diff <= tol || depth >= 48) {
        for (int d = 0; d < dim; ++d) out[d] += left[d] + right[d];
        return diff;
    }
    double e1 = recurse(f, dim, a, mid, 0.5 * tol, left.data(), out, scratch, depth + 1);
    double e2 = recurse(f, dim, mid, b, 0.5 * tol, right.data(), out, scratch, depth + 1);
    return e1 + e2;
}

}  // namespace

double Quadrature::integrate(const VecFn& f, int dim, double a, double b, double abs_tol,
                             double* out) {
    if (!(a <= b)) throw std::invalid_argument("Quadrature: need a <= b");
    for (int d = 0; d < dim; ++d) out[d] = 0.0;
    if (a == b) return 0.0;
    std::vector<double> scratch(static_cast<std::size_t>(dim));
    std::vector<double> whole(static_cast<std::size_t>(dim));
    panel(f, dim, a, b, whole.data(), scratch);
    return recurse(f, dim, a, b, abs_tol, whole.data(), out, scratch, 0);
}

double Quadrature::integrate_scalar(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double* err) {
    double out = 0.0;
    auto wrap = [&f](double x, double* o) { o[0] = f(x); };
    double e = integrate(wrap, 1, a, b, abs_tol, &out);
    if (err) *err = e;
    return out;
}

}  // namespace dos
