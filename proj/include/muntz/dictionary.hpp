#pragma once

// The map D : L2([0,1]) -> H2(C_0), D(f)(z) = int_0^1 f(s) s^{z-1/2} ds.
// Monomials map to Szego kernels: D(e_lambda)(z) = 1/(z + lambda + 1/2),
// so finite combinations evaluate in closed form. The quadrature route
// substitutes s = e^{-t}, turning the endpoint singularity into exponential
// decay with an analytic tail bound.

#include <functional>

#include "muntz/gram.hpp"

namespace muntz {

// Sum_k a_k / (z + lambda_k + 1/2); requires Re z > 0.
Complex dictionary_eval_closed(const MuntzCombination& f, Complex z);

// Caller-declared growth bound |f(s)| <= scale * s^(-beta) as s -> 0+.
struct GrowthBound {
    double scale = 1.0;
    double beta = 0.0;
};

// int_0^1 f(s) s^{z-1/2} ds by adaptive panels on t in [0, T] after
// s = e^{-t}, with T chosen so the declared tail is below tol/2.
// Throws TailBoundFailure when beta >= Re z + 1/2.
Complex dictionary_eval_quadrature(const std::function<Complex(double)>& f,
                                   const GrowthBound& growth, Complex z,
                                   double tol);

// Relative gap between ||f||_{L2} and the boundary-line estimate
// (int_{-Y}^{Y} |Df(iy)|^2 dy / 2pi)^{1/2}, plus the analytic bound on the
// |y| > Y tail. Decreases as Y grows when D is an isometry.
double isometry_gap(const MuntzCombination& f, double Y);

}  // namespace muntz
