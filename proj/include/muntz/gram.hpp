#pragma once

// Gram matrices of monomial and kernel systems. Both families are Cauchy
// matrices 1/(x_i + y_j) in disguise:
//
//   <e_{lam_j}, e_{lam_i}>_{L2[0,1]} = 1/(lam_j + conj(lam_i) + 1)
//   <k_{mu_j},  k_{mu_i}>_{H2}       = 1/(mu_i + conj(mu_j))
//
// Entry convention G_ij = <x_j, x_i>, so the normal equations for a
// projection read G c = b with b_i = <f, x_i>.
//
// Solves use the closed-form Cauchy inverse (node-difference products
// accumulated as complex log sums) when nodes are recorded, with a pivoted
// spectral fallback otherwise. Extremal eigenvalues come from a cyclic
// Jacobi iteration driven to 1e-12 relative off-diagonal mass.

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "muntz/exponents.hpp"

namespace muntz {

enum class GramKind { Monomial, Kernel, NormalizedMonomial, Projection, Dirichlet };

struct CauchyNodes {
    std::vector<Complex> x;
    std::vector<Complex> y;
};

class HermitianGram {
public:
    // Entries row-major, length n*n; must be Hermitian within 1e-14 of the
    // largest modulus. Builders below produce exactly mirrored entries.
    HermitianGram(std::vector<Complex> entries, std::size_t n, GramKind kind,
                  std::optional<CauchyNodes> nodes = std::nullopt);

    std::size_t size() const { return n_; }
    GramKind kind() const { return kind_; }
    Complex at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<Complex>& entries() const { return entries_; }
    const std::optional<CauchyNodes>& cauchy_nodes() const { return nodes_; }

    // Row-major CSV, each cell emitted as a "re,im" pair.
    void write_csv(std::ostream& os) const;

private:
    std::vector<Complex> entries_;
    std::size_t n_ = 0;
    GramKind kind_ = GramKind::Monomial;
    std::optional<CauchyNodes> nodes_;
};

// f = sum_k coefficients[k] * t^{lambda_k}.
struct MuntzCombination {
    ExponentSequence exponents;
    std::vector<Complex> coefficients;
};

// G_ij = 1/(lam_j + conj(lam_i) + 1), Cauchy nodes x_i = conj(lam_i) + 1/2,
// y_j = lam_j + 1/2.
HermitianGram monomial_gram(const ExponentSequence& seq);

// G_ij = 1/(mu_i + conj(mu_j)), Cauchy nodes x_i = mu_i, y_j = conj(mu_j).
HermitianGram kernel_gram(const std::vector<HalfPlanePoint>& mus);

// Entries sqrt((2 Re lam_i + 1)(2 Re lam_j + 1)) * monomial entry;
// unit diagonal.
HermitianGram normalized_monomial_gram(const ExponentSequence& seq);

// All eigenvalues, ascending. Cyclic Jacobi; throws ConvergenceFailure if the
// off-diagonal mass does not reach 1e-12 relative within the sweep budget.
std::vector<double> hermitian_eigenvalues(const HermitianGram& G);

// (lambda_min, lambda_max); requires N <= 256.
std::pair<double, double> frame_bounds(const HermitianGram& G);

// Solves G c = b. Throws IllConditioned when lambda_min <= 1e-13 lambda_max.
std::vector<Complex> solve_gram(const HermitianGram& G,
                                const std::vector<Complex>& b);

// Hermitian quadratic form Re(a^H G a), clamped at zero.
double quadratic_form(const HermitianGram& G, const std::vector<Complex>& a);

// sqrt(a^H G a) with G the monomial Gram of f's exponents.
double combo_norm(const MuntzCombination& f);

// dist(e_mu, span) via the Schur complement dist^2 = ||e_mu||^2 - b^H G^{-1} b.
// Returns 0 exactly when mu is a member of the sequence.
double distance_to_span(const ExponentSequence& seq, Complex mu);

}  // namespace muntz
