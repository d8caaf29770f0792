#pragma once

// Szego kernels k_lambda(z) = 1/(z + conj(lambda)) on the right half-plane,
// elementary Blaschke factors b_mu(z) = (z - mu)/(z + conj(mu)), finite
// Blaschke products with log-domain magnitude accumulation, tail products
// B^(k) = prod_{n >= k} alpha_n b_{mu_n}, and model-space kernels
// k^B_nu(z) = (1 - conj(B(nu)) B(z)) / (z + conj(nu)).

#include <vector>

#include "muntz/exponents.hpp"

namespace muntz {

// Finite zero set in C_0 with unimodular normalization constants alpha_n.
// Convention: alpha_n makes the normalized factor real nonnegative at z = 1
// (alpha_n = conj(b_n(1)) / |b_n(1)|, and alpha_n = 1 when mu_n = 1).
class BlaschkeSet {
public:
    explicit BlaschkeSet(std::vector<HalfPlanePoint> zeros);

    // Zeros at conj(lambda_n) + 1/2, the half-plane image of the sequence.
    static BlaschkeSet from_exponents(const ExponentSequence& seq);

    std::size_t size() const { return zeros_.size(); }
    const std::vector<HalfPlanePoint>& zeros() const { return zeros_; }
    const std::vector<Complex>& normalizations() const { return alphas_; }

private:
    std::vector<HalfPlanePoint> zeros_;
    std::vector<Complex> alphas_;
};

// Unimodular constant making alpha * b_mu real nonnegative at z = 1.
Complex normalization_alpha(const HalfPlanePoint& mu);

// 1/(z + conj(lambda)); requires Re z > 0.
Complex szego_kernel(const HalfPlanePoint& lambda, Complex z);

// (z - mu)/(z + conj(mu)), optionally normalized by alpha_mu.
// Boundary evaluation Re z = 0 is allowed (|factor| = 1 there).
Complex blaschke_factor(const HalfPlanePoint& mu, Complex z,
                        bool normalized = false);

// Product over all factors; magnitude accumulated as sum of log moduli and
// phase separately, so lacunary products of 50+ factors do not underflow.
// Returns exactly 0 when z coincides with a zero. Requires Re z >= 0.
Complex blaschke_product(const BlaschkeSet& B, Complex z,
                         bool normalized = true);

// Product over factors k..N (1-based); k = N+1 yields the empty product 1.
Complex tail_product(const BlaschkeSet& B, std::size_t k, Complex z,
                     bool normalized = true);

// (1 - conj(B(nu)) B(z)) / (z + conj(nu)); requires Re z > 0. The value is
// invariant under any unimodular rescaling of B.
Complex model_kernel(const BlaschkeSet& B, const HalfPlanePoint& nu, Complex z);

}  // namespace muntz
