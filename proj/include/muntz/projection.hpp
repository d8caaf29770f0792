#pragma once

// Orthogonal projections x_mu = P(e_mu) onto the monomial span, their norms
// and Grams, biorthogonal coefficients, and the summation-basis partial sums
//   f_k = sum_n conj(B^(k)(mu_n)) <f, e*_n> e_{lambda_n},
// whose tail-weighted coefficients vanish identically for n >= k.

#include <vector>

#include "muntz/gram.hpp"

namespace muntz {

// Coefficients c = G^{-1} b, b_n = 1/(mu + conj(lambda_n) + 1). A member
// exponent projects to its own unit coordinate vector.
MuntzCombination project_onto_muntz(const ExponentSequence& seq, Complex mu);

// ||x_mu|| via the model-kernel diagonal (1 - |B(nu)|^2) / (2 Re nu) with
// nu = conj(mu) + 1/2; cross-checked against the Gram quadratic form at 1e-8.
double projection_norm(const ExponentSequence& seq, Complex mu);

// Entries (1 - conj(B(nu_j)) B(nu_i)) / (nu_i + conj(nu_j)).
HermitianGram projection_gram(const ExponentSequence& seq,
                              const std::vector<Complex>& mus);

// Functionals <f, e*_n> = (G^{-1} m)_n from the moments m_n = <f, e_{lambda_n}>.
std::vector<Complex> biorthogonal_coeffs(const ExponentSequence& seq,
                                         const std::vector<Complex>& moments);

// Exact moments m = G a of a combination (no quadrature involved).
std::vector<Complex> moments_of(const MuntzCombination& f);

// Partial sum at tail index k (1-based, k = N+1 meaning the empty tail):
// c_n = conj(B^(k)(mu_n)) (G^{-1} m)_n; c_n = 0 exactly for n >= k.
// Intermediate sums (k <= N) depend on the alpha_n normalization convention;
// the k = N+1 endpoint does not.
MuntzCombination summation_partial(const ExponentSequence& seq,
                                   const std::vector<Complex>& moments,
                                   std::size_t k);

// ||partial_k - projection of f|| for each requested k.
std::vector<double> reconstruction_curve(const ExponentSequence& seq,
                                         const std::vector<Complex>& moments,
                                         const std::vector<std::size_t>& ks);

}  // namespace muntz
