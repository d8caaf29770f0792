#include "muntz/dictionary.hpp"

#include <cmath>
#include <numbers>

#include "muntz/quadrature.hpp"

namespace muntz {

Complex dictionary_eval_closed(const MuntzCombination& f, Complex z) {
    if (!(z.real() > 0.0))
        throw DomainViolation("dictionary evaluation requires Re z > 0");
    if (f.coefficients.size() != f.exponents.size())
        throw LengthMismatch(f.coefficients.size(), f.exponents.size());
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < f.exponents.size(); ++k)
        acc += f.coefficients[k] / (z + f.exponents.points()[k] + 0.5);
    return acc;
}

Complex dictionary_eval_quadrature(const std::function<Complex(double)>& f,
                                   const GrowthBound& growth, Complex z,
                                   double tol) {
    if (!(z.real() > 0.0))
        throw DomainViolation("dictionary evaluation requires Re z > 0");
    if (!(tol > 0.0)) throw DomainViolation("tolerance must be positive");
    // After s = e^{-t}: integrand f(e^{-t}) e^{-t(z+1/2)}, whose modulus is
    // bounded by scale * e^{-t gamma} with gamma = Re z + 1/2 - beta.
    const double gamma = z.real() + 0.5 - growth.beta;
    if (!(gamma > 0.0))
        throw TailBoundFailure("declared growth bound beta >= Re z + 1/2");
    double T = std::log(std::max(2.0 * growth.scale / (gamma * tol), 2.0)) / gamma;
    T = std::max(T, 1.0);
    const Complex ex = z + 0.5;
    auto integrand = [&](double t) -> Complex {
        return f(std::exp(-t)) * std::exp(-t * ex);
    };
    QuadResult q = integrate_gk(integrand, 0.0, T, 0.5 * tol);
    return q.value;
}

double isometry_gap(const MuntzCombination& f, double Y) {
    if (!(Y > 0.0)) throw DomainViolation("truncation height must be positive");
    const double norm = combo_norm(f);
    if (norm == 0.0)
        throw DegenerateRHS("isometry gap undefined for the zero combination");

    double coeff_l1 = 0.0;
    double max_im = 0.0;
    for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
        coeff_l1 += std::abs(f.coefficients[k]);
        max_im = std::max(max_im, std::abs(f.exponents.points()[k].imag()));
    }
    if (!(Y > max_im + 1.0))
        throw DomainViolation("truncation height must clear the exponent imaginary parts");

    // Boundary values Df(iy) are finite for kernel combinations since every
    // pole sits at Re = -(Re lambda + 1/2) < 0.
    auto integrand = [&](double y) -> Complex {
        Complex df(0.0, 0.0);
        for (std::size_t k = 0; k < f.exponents.size(); ++k)
            df += f.coefficients[k] /
                  (Complex(0.0, y) + f.exponents.points()[k] + 0.5);
        return Complex(std::norm(df), 0.0);
    };
    // |Df(iy)|^2 decays like 1/y^2; absolute 1e-9 keeps the estimate well
    // below the truncation-tail scale.
    QuadResult q = integrate_gk(integrand, -Y, Y, 1e-9);
    const double est =
        std::sqrt(std::max(q.value.real(), 0.0) / (2.0 * std::numbers::pi));
    // |Df(iy)| <= (sum |a_k|) / (|y| - max|Im lambda|) for |y| > Y.
    const double tail_bound =
        coeff_l1 * coeff_l1 / (std::numbers::pi * (Y - max_im));
    return std::abs(norm - est) / norm + tail_bound / (norm * norm);
}

}  // namespace muntz
