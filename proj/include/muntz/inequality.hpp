#pragma once

// Markov-Newman-type derivative inequality on kernel combinations,
//   || sum a_k (w_k - 1/2)/(z + w_k) || <= C(w) || sum a_k / (z + w_k) ||,
// with C(w)^2 = sum |w_k - 1/2|^2 + 4 sum_k Re(w_k) sum_{j>k} Re(w_j)
// (the Hilbert-Schmidt norm of the triangular matrix representing
// f |-> t f' in the orthonormalized monomial basis), its real-exponent
// relaxation sqrt(2) sum w_k, and the Dirichlet-series norm equivalence
//   int_0^inf |sum a_k q_k^{-s}|^2 e^{-s} ds  ~  sum |a_k|^2 / ln q_k.

#include <cstdint>
#include <vector>

#include "muntz/gram.hpp"

namespace muntz {

double markov_newman_constant(const std::vector<HalfPlanePoint>& ws);

struct MarkovNewmanResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 0.0;
    bool pass = false;
};

// Norms are evaluated by direct double sums over the kernel Gram, so
// duplicated w values are permitted (no solve is involved).
MarkovNewmanResult markov_newman_check(const std::vector<HalfPlanePoint>& ws,
                                       const std::vector<Complex>& a);

// sqrt(2) sum w_k; requires every w real and >= 1/2.
double markov_newman_real_constant(const std::vector<double>& ws);

// Entries 1/(1 + ln(q_k q_l)); Cauchy nodes ln q + 1/2. Requires q > 1
// strictly increasing.
HermitianGram dirichlet_gram(const std::vector<double>& qs);

struct DirichletEquivalenceResult {
    double c_lo = 0.0;           // certified: lambda_min of the rescaled Gram
    double c_hi = 0.0;           // certified: lambda_max
    double sampled_min = 0.0;    // extremes of the sampled ratios
    double sampled_max = 0.0;
    double condition_value = 0.0;  // inf_n prod_{k != n} |ln(q_n/q_k)| / ln(q_n q_k e)
    std::vector<double> sampled_ratios;  // per-trial log
};

// Random complex-Gaussian coefficients, seeded stream; ratio is
// (a^H G a) / (sum |a_k|^2 / ln q_k).
DirichletEquivalenceResult dirichlet_equivalence(const std::vector<double>& qs,
                                                 std::size_t trials,
                                                 std::uint64_t seed);

}  // namespace muntz
