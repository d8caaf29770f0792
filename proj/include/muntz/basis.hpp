#pragma once

// Basis-quality diagnostics for exponent systems:
//   - density partial sums S_N = sum (1/2 + Re lam) / (|lam + 1/2|^2 + 1),
//     divergence <=> density of the monomial span;
//   - Carleson products delta_n = prod_{k != n} |(lam_n - lam_k)/(lam_n +
//     conj(lam_k) + 1)|, inf > 0 <=> normalized monomials form a Riesz basis;
//   - thinness (delta_n -> 1) <=> asymptotically orthonormal basis;
//   - the super-lacunary profile q_n = sqrt(2 w_n), r_n = inf_{m>=n}
//     q_{m+1}/q_m, eps_n = sqrt(1 + 4/(r_n - 1)) - 1 and the two-sided
//     sandwich bounds it implies;
//   - the completeness stability function R(t) = sum |(lam_n - mu_n) /
//     (mu_n + 1/2 - it)| with its analytic sup envelope.

#include <string>
#include <vector>

#include "muntz/gram.hpp"

namespace muntz {

struct BasisDiagnostics {
    std::vector<double> delta;               // Carleson products per index
    double delta_inf = 1.0;                  // min over n
    std::vector<double> ratios;              // lambda_{n+1}/lambda_n (real case)
    std::vector<double> r;                   // suffix inf of q-ratios
    std::vector<double> eps;                 // sqrt(1 + 4/(r_n-1)) - 1
    std::vector<double> density_partial_sums;
    std::vector<std::pair<std::string, std::string>> verdicts;
};

struct DensityResult {
    std::vector<double> partial_sums;
    std::string verdict;  // "divergent" | "convergent" | "inconclusive (finite data)"
};

DensityResult density_partial_sums(const ExponentSequence& seq);

// Log-domain products; every delta_n lies in [0, 1].
std::vector<double> carleson_deltas(const ExponentSequence& seq);

struct ThinnessResult {
    std::vector<double> delta;
    std::string verdict;  // "thin-consistent" | "not thin" | "inconclusive"
};

ThinnessResult thinness_trend(const ExponentSequence& seq);

struct LacunarityProfile {
    std::vector<double> w;              // half-plane images lambda_n + 1/2
    std::vector<double> q;              // sqrt(2 w_n)
    std::vector<double> lambda_ratios;  // lambda_{n+1}/lambda_n
    std::vector<double> q_ratios;       // q_{n+1}/q_n
    std::vector<double> r;              // r_n = inf_{m >= n} q_{m+1}/q_m
    std::vector<double> eps;            // sqrt(1 + 4/(r_n - 1)) - 1
};

// Requires all exponents real, positive and strictly increasing.
LacunarityProfile lacunarity_profile(const ExponentSequence& seq);

struct SandwichResult {
    double lhs = 0.0;        // (1 - eps'_{n0}) ||a||
    double mid = 0.0;        // sqrt(a^H N a), N the normalized kernel Gram
    double rhs = 0.0;        // (1 + eps_{n0}) ||a||
    double eps_upper = 0.0;  // eps_{n0}
    double eps_lower = 0.0;  // eps'_{n0} = 1 - sqrt(max(0, 1 - 4/(r_{n0}-1)))
    bool pass = false;
};

// Two-sided bound for the tail starting at n0 (1-based) of the normalized
// kernel system over real increasing w.
SandwichResult aob_sandwich_check(const std::vector<double>& w,
                                  const std::vector<Complex>& a,
                                  std::size_t n0);

// (1 + eps)(1 + t^2)^{1/2} - [1 + 2 t sqrt(rho)/(1 + rho)], rho = w_next/w_n.
// Negative at any t > 0 certifies the claimed eps is too small.
double volberg_necessity_gap(double w_n, double w_next, double eps_n, double t);

struct StabilityResult {
    std::vector<double> values;  // R(t) on the grid
    double envelope = 0.0;       // sup_t R(t) <= sum |lam_n - mu_n| / Re(mu_n + 1/2)
    std::string verdict;
};

StabilityResult stability_R(const ExponentSequence& lambda,
                            const ExponentSequence& mus,
                            const std::vector<double>& t_grid);

struct ProjectionRieszResult {
    std::vector<double> blaschke_moduli;  // |B_Lambda(conj(mu_n) + 1/2)|
    std::vector<double> carleson;         // deltas of (conj(mu_n) + 1/2)
    std::string verdict;
};

ProjectionRieszResult projection_riesz_condition(const ExponentSequence& lambda,
                                                 const ExponentSequence& mus);

// Convenience aggregate for reporting.
BasisDiagnostics analyze_basis(const ExponentSequence& seq);

}  // namespace muntz
