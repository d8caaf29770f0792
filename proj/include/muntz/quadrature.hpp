#pragma once

// Adaptive Gauss-Kronrod (G7/K15) panel integration for complex-valued
// integrands on a real interval. Panels split with halved tolerance until
// the local K15-vs-G7 discrepancy is below budget.

#include <complex>
#include <functional>

#include "muntz/errors.hpp"

namespace muntz {

struct QuadResult {
    std::complex<double> value;
    double error_estimate;
    std::size_t evaluations;
};

// Integrates f over [a, b] to absolute tolerance abs_tol.
// Throws ToleranceNotMet when the evaluation budget is exhausted.
QuadResult integrate_gk(const std::function<std::complex<double>(double)>& f,
                        double a, double b, double abs_tol,
                        std::size_t max_evaluations = 2'000'000);

}  // namespace muntz
