#include "muntz/kernels.hpp"

#include <cmath>

namespace muntz {

Complex normalization_alpha(const HalfPlanePoint& mu) {
    Complex b1 = (1.0 - mu.value()) / (1.0 + std::conj(mu.value()));
    double m = std::abs(b1);
    if (m == 0.0) return Complex(1.0, 0.0);  // mu = 1: factor vanishes at the anchor
    return std::conj(b1) / m;
}

BlaschkeSet::BlaschkeSet(std::vector<HalfPlanePoint> zeros)
    : zeros_(std::move(zeros)) {
    alphas_.reserve(zeros_.size());
    for (const auto& mu : zeros_) alphas_.push_back(normalization_alpha(mu));
}

BlaschkeSet BlaschkeSet::from_exponents(const ExponentSequence& seq) {
    return BlaschkeSet(transform_to_halfplane(seq));
}

Complex szego_kernel(const HalfPlanePoint& lambda, Complex z) {
    if (!(z.real() > 0.0))
        throw DomainViolation("szego_kernel requires Re z > 0");
    return 1.0 / (z + std::conj(lambda.value()));
}

Complex blaschke_factor(const HalfPlanePoint& mu, Complex z, bool normalized) {
    Complex f = (z - mu.value()) / (z + std::conj(mu.value()));
    return normalized ? normalization_alpha(mu) * f : f;
}

namespace {

// Shared core: product over zero indices [first, last) in log/phase domain.
Complex product_over_range(const BlaschkeSet& B, std::size_t first,
                           std::size_t last, Complex z, bool normalized) {
    if (!(z.real() >= 0.0))
        throw DomainViolation("Blaschke product requires Re z >= 0");
    double log_mag = 0.0;
    double phase = 0.0;
    for (std::size_t n = first; n < last; ++n) {
        const Complex mu = B.zeros()[n].value();
        const Complex num = z - mu;
        if (num.real() == 0.0 && num.imag() == 0.0) return Complex(0.0, 0.0);
        const Complex den = z + std::conj(mu);
        log_mag += std::log(std::abs(num)) - std::log(std::abs(den));
        phase += std::arg(num) - std::arg(den);
        if (normalized) phase += std::arg(B.normalizations()[n]);
    }
    return std::exp(log_mag) * Complex(std::cos(phase), std::sin(phase));
}

}  // namespace

Complex blaschke_product(const BlaschkeSet& B, Complex z, bool normalized) {
    return product_over_range(B, 0, B.size(), z, normalized);
}

Complex tail_product(const BlaschkeSet& B, std::size_t k, Complex z,
                     bool normalized) {
    if (k < 1 || k > B.size() + 1) throw IndexOutOfRange(k, B.size() + 1);
    return product_over_range(B, k - 1, B.size(), z, normalized);
}

Complex model_kernel(const BlaschkeSet& B, const HalfPlanePoint& nu, Complex z) {
    if (!(z.real() > 0.0))
        throw DomainViolation("model_kernel requires Re z > 0");
    const Complex Bnu = blaschke_product(B, nu.value());
    const Complex Bz = blaschke_product(B, z);
    return (1.0 - std::conj(Bnu) * Bz) / (z + std::conj(nu.value()));
}

}  // namespace muntz
