#include "muntz/projection.hpp"

#include <cmath>

#include "muntz/kernels.hpp"

namespace muntz {

MuntzCombination project_onto_muntz(const ExponentSequence& seq, Complex mu) {
    if (!(mu.real() > -0.5)) throw HalfPlaneViolation(0);
    const std::size_t n = seq.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (seq.points()[i] == mu) {
            std::vector<Complex> unit(n, Complex(0.0, 0.0));
            unit[i] = 1.0;
            return {seq, std::move(unit)};
        }
    }
    if (n == 0) return {seq, {}};
    std::vector<Complex> b(n);
    for (std::size_t i = 0; i < n; ++i)
        b[i] = 1.0 / (mu + std::conj(seq.points()[i]) + 1.0);
    return {seq, solve_gram(monomial_gram(seq), b)};
}

double projection_norm(const ExponentSequence& seq, Complex mu) {
    if (!(mu.real() > -0.5)) throw HalfPlaneViolation(0);
    if (seq.size() == 0) return 0.0;  // empty span
    const Complex nu = std::conj(mu) + 0.5;
    const BlaschkeSet B = BlaschkeSet::from_exponents(seq);
    const double bmod = std::abs(blaschke_product(B, nu));
    const double kernel_sq =
        std::max((1.0 - bmod * bmod) / (2.0 * nu.real()), 0.0);

    // Gram route: ||P e_mu||^2 = Re(b^H c), c = G^{-1} b.
    const MuntzCombination proj = project_onto_muntz(seq, mu);
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Complex bi = 1.0 / (mu + std::conj(seq.points()[i]) + 1.0);
        acc += std::conj(bi) * proj.coefficients[i];
    }
    const double gram_sq = std::max(acc.real(), 0.0);
    if (std::abs(gram_sq - kernel_sq) > 1e-8)
        throw ConvergenceFailure(
            "projection norm routes disagree beyond 1e-8: Gram " +
            std::to_string(gram_sq) + " vs kernel " + std::to_string(kernel_sq));
    return std::sqrt(kernel_sq);
}

HermitianGram projection_gram(const ExponentSequence& seq,
                              const std::vector<Complex>& mus) {
    const BlaschkeSet B = BlaschkeSet::from_exponents(seq);
    const std::size_t n = mus.size();
    std::vector<Complex> nus(n), Bnu(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mus[i].real() > -0.5)) throw HalfPlaneViolation(i);
        nus[i] = std::conj(mus[i]) + 0.5;
        Bnu[i] = blaschke_product(B, nus[i]);
    }
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const Complex v =
                (1.0 - std::conj(Bnu[j]) * Bnu[i]) / (nus[i] + std::conj(nus[j]));
            e[i * n + j] = v;
            e[j * n + i] = std::conj(v);
        }
    }
    return HermitianGram(std::move(e), n, GramKind::Projection);
}

std::vector<Complex> biorthogonal_coeffs(const ExponentSequence& seq,
                                         const std::vector<Complex>& moments) {
    return solve_gram(monomial_gram(seq), moments);
}

std::vector<Complex> moments_of(const MuntzCombination& f) {
    if (f.coefficients.size() != f.exponents.size())
        throw LengthMismatch(f.coefficients.size(), f.exponents.size());
    const HermitianGram G = monomial_gram(f.exponents);
    const std::size_t n = G.size();
    std::vector<Complex> m(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i] += G.at(i, j) * f.coefficients[j];
    return m;
}

MuntzCombination summation_partial(const ExponentSequence& seq,
                                   const std::vector<Complex>& moments,
                                   std::size_t k) {
    const std::size_t n = seq.size();
    if (k < 1 || k > n + 1) throw IndexOutOfRange(k, n + 1);
    std::vector<Complex> c = biorthogonal_coeffs(seq, moments);
    const BlaschkeSet B = BlaschkeSet::from_exponents(seq);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex weight =
            tail_product(B, k, B.zeros()[i].value());  // 0 exactly for i >= k-1
        c[i] *= std::conj(weight);
    }
    return {seq, std::move(c)};
}

std::vector<double> reconstruction_curve(const ExponentSequence& seq,
                                         const std::vector<Complex>& moments,
                                         const std::vector<std::size_t>& ks) {
    const std::vector<Complex> best = biorthogonal_coeffs(seq, moments);
    std::vector<double> errs;
    errs.reserve(ks.size());
    for (std::size_t k : ks) {
        MuntzCombination partial = summation_partial(seq, moments, k);
        for (std::size_t i = 0; i < best.size(); ++i)
            partial.coefficients[i] -= best[i];
        errs.push_back(combo_norm(partial));
    }
    return errs;
}

}  // namespace muntz
