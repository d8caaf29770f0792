#include "muntz/gram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace muntz {

namespace {

double max_abs(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const Complex& c : v) m = std::max(m, std::abs(c));
    return m;
}

// Cyclic Jacobi for Hermitian A (row-major, destroyed). Each rotation zeroes
// one off-diagonal pair exactly; sweeps continue until the off-diagonal
// Frobenius mass falls below 1e-12 of the matrix norm.
std::vector<double> jacobi_eigen(std::vector<Complex> A, std::size_t n,
                                 std::vector<Complex>* vectors) {
    if (vectors) {
        vectors->assign(n * n, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < n; ++i) (*vectors)[i * n + i] = 1.0;
    }
    auto off_mass = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                s += std::norm(A[i * n + j]);
        return std::sqrt(2.0 * s);
    };
    double normF = 0.0;
    for (const Complex& c : A) normF += std::norm(c);
    normF = std::sqrt(normF);
    const double target = 1e-12 * std::max(normF, 1e-300);
    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_mass() <= target) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = A[p * n + q];
                const double g = std::abs(apq);
                if (g <= target / (2.0 * static_cast<double>(n))) continue;
                const double app = A[p * n + p].real();
                const double aqq = A[q * n + q].real();
                // Phase-reduce to a real 2x2 rotation: u carries arg(apq).
                const Complex u = apq / g;
                const double tau = (aqq - app) / (2.0 * g);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex ucs = std::conj(u);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = A[k * n + p];
                    const Complex akq = A[k * n + q];
                    const Complex nkp = c * akp - s * ucs * akq;
                    const Complex nkq = s * akp + c * ucs * akq;
                    A[k * n + p] = nkp;
                    A[p * n + k] = std::conj(nkp);
                    A[k * n + q] = nkq;
                    A[q * n + k] = std::conj(nkq);
                }
                A[p * n + p] = app - t * g;
                A[q * n + q] = aqq + t * g;
                A[p * n + q] = 0.0;
                A[q * n + p] = 0.0;
                if (vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = (*vectors)[k * n + p];
                        const Complex vkq = (*vectors)[k * n + q];
                        (*vectors)[k * n + p] = c * vkp - s * ucs * vkq;
                        (*vectors)[k * n + q] = s * vkp + c * ucs * vkq;
                    }
                }
            }
        }
    }
    if (sweep == kMaxSweeps && off_mass() > target)
        throw ConvergenceFailure("Jacobi sweeps exhausted before reaching "
                                 "1e-12 off-diagonal mass");
    std::vector<double> evals(n);
    for (std::size_t i = 0; i < n; ++i) evals[i] = A[i * n + i].real();
    if (vectors) {
        // Sort eigenpairs ascending, permuting the vector columns alongside.
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return evals[a] < evals[b]; });
        std::vector<double> se(n);
        std::vector<Complex> sv(n * n);
        for (std::size_t c = 0; c < n; ++c) {
            se[c] = evals[order[c]];
            for (std::size_t r = 0; r < n; ++r)
                sv[r * n + c] = (*vectors)[r * n + order[c]];
        }
        *vectors = std::move(sv);
        return se;
    }
    std::sort(evals.begin(), evals.end());
    return evals;
}

// c = C^{-1} b for the Cauchy matrix C_ij = 1/(x_i + y_j):
//   (C^{-1})_ij = prod_k (x_k + y_i) prod_k (x_j + y_k)
//               / [ (x_j + y_i) prod_{k!=j}(x_j - x_k) prod_{k!=i}(y_i - y_k) ]
// Node-difference products are accumulated as complex log sums, so magnitude
// and phase survive even when individual products under/overflow.
std::vector<Complex> cauchy_apply_inverse(const CauchyNodes& nodes,
                                          const std::vector<Complex>& b) {
    const std::size_t n = nodes.x.size();
    std::vector<Complex> P(n), Q(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            s += std::log(nodes.x[k] + nodes.y[i]);
            if (k != i) s -= std::log(nodes.y[i] - nodes.y[k]);
        }
        P[i] = s;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Complex s(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            s += std::log(nodes.x[j] + nodes.y[k]);
            if (k != j) s -= std::log(nodes.x[j] - nodes.x[k]);
        }
        Q[j] = s;
    }
    std::vector<Complex> c(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            acc += std::exp(P[i] + Q[j]) / (nodes.x[j] + nodes.y[i]) * b[j];
        c[i] = acc;
    }
    return c;
}

}  // namespace

HermitianGram::HermitianGram(std::vector<Complex> entries, std::size_t n,
                             GramKind kind, std::optional<CauchyNodes> nodes)
    : entries_(std::move(entries)), n_(n), kind_(kind), nodes_(std::move(nodes)) {
    if (entries_.size() != n_ * n_)
        throw LengthMismatch(entries_.size(), n_ * n_);
    if (nodes_ && (nodes_->x.size() != n_ || nodes_->y.size() != n_))
        throw LengthMismatch(nodes_->x.size(), n_);
    const double scale = std::max(1.0, max_abs(entries_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            if (std::abs(entries_[i * n_ + j] - std::conj(entries_[j * n_ + i])) >
                1e-14 * scale)
                throw DomainViolation("matrix is not Hermitian within 1e-14");
}

void HermitianGram::write_csv(std::ostream& os) const {
    os.precision(17);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) os << ',';
            const Complex& e = entries_[i * n_ + j];
            os << e.real() << ',' << e.imag();
        }
        os << '\n';
    }
}

HermitianGram monomial_gram(const ExponentSequence& seq) {
    const std::size_t n = seq.size();
    CauchyNodes nodes;
    nodes.x.reserve(n);
    nodes.y.reserve(n);
    for (const Complex& lam : seq.points()) {
        nodes.x.push_back(std::conj(lam) + 0.5);
        nodes.y.push_back(lam + 0.5);
    }
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e[i * n + j] = 1.0 / (nodes.x[i] + nodes.y[j]);
    return HermitianGram(std::move(e), n, GramKind::Monomial, std::move(nodes));
}

HermitianGram kernel_gram(const std::vector<HalfPlanePoint>& mus) {
    const std::size_t n = mus.size();
    CauchyNodes nodes;
    nodes.x.reserve(n);
    nodes.y.reserve(n);
    for (const HalfPlanePoint& mu : mus) {
        nodes.x.push_back(mu.value());
        nodes.y.push_back(std::conj(mu.value()));
    }
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e[i * n + j] = 1.0 / (nodes.x[i] + nodes.y[j]);
    return HermitianGram(std::move(e), n, GramKind::Kernel, std::move(nodes));
}

HermitianGram normalized_monomial_gram(const ExponentSequence& seq) {
    const HermitianGram G = monomial_gram(seq);
    const std::size_t n = seq.size();
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i)
        s[i] = std::sqrt(2.0 * seq.points()[i].real() + 1.0);
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            e[i * n + j] = (s[i] * s[j]) * G.at(i, j);
        e[i * n + i] = 1.0;  // algebraically exact
    }
    return HermitianGram(std::move(e), n, GramKind::NormalizedMonomial);
}

std::vector<double> hermitian_eigenvalues(const HermitianGram& G) {
    return jacobi_eigen(G.entries(), G.size(), nullptr);
}

std::pair<double, double> frame_bounds(const HermitianGram& G) {
    if (G.size() > 256)
        throw DomainViolation("frame_bounds supports N <= 256");
    if (G.size() == 0)
        throw DomainViolation("frame_bounds requires a nonempty matrix");
    std::vector<double> ev = hermitian_eigenvalues(G);
    return {ev.front(), ev.back()};
}

std::vector<Complex> solve_gram(const HermitianGram& G,
                                const std::vector<Complex>& b) {
    const std::size_t n = G.size();
    if (b.size() != n) throw LengthMismatch(b.size(), n);
    if (n == 0) return {};

    std::vector<Complex> vectors;
    const bool cauchy = G.cauchy_nodes().has_value();
    std::vector<double> ev =
        jacobi_eigen(G.entries(), n, cauchy ? nullptr : &vectors);
    const double lam_min = ev.front();
    const double lam_max = ev.back();
    if (!(lam_min > 1e-13 * lam_max)) {
        const double cond =
            lam_max / std::max(lam_min, std::numeric_limits<double>::min());
        throw IllConditioned(cond);
    }

    if (cauchy) {
        const CauchyNodes& nodes = *G.cauchy_nodes();
        std::vector<Complex> c = cauchy_apply_inverse(nodes, b);
        // Two refinement passes squeeze the residual toward roundoff.
        for (int pass = 0; pass < 2; ++pass) {
            std::vector<Complex> r(n);
            for (std::size_t i = 0; i < n; ++i) {
                Complex acc(0.0, 0.0);
                for (std::size_t j = 0; j < n; ++j) acc += G.at(i, j) * c[j];
                r[i] = b[i] - acc;
            }
            std::vector<Complex> dc = cauchy_apply_inverse(nodes, r);
            for (std::size_t i = 0; i < n; ++i) c[i] += dc[i];
        }
        return c;
    }

    // Spectral solve c = V diag(1/ev) V^H b.
    std::vector<Complex> vhb(n, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r)
            vhb[k] += std::conj(vectors[r * n + k]) * b[r];
    for (std::size_t k = 0; k < n; ++k) vhb[k] /= ev[k];
    std::vector<Complex> c(n, Complex(0.0, 0.0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k)
            c[r] += vectors[r * n + k] * vhb[k];
    return c;
}

double quadratic_form(const HermitianGram& G, const std::vector<Complex>& a) {
    const std::size_t n = G.size();
    if (a.size() != n) throw LengthMismatch(a.size(), n);
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        Complex row(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) row += G.at(i, j) * a[j];
        acc += std::conj(a[i]) * row;
    }
    return std::max(acc.real(), 0.0);
}

double combo_norm(const MuntzCombination& f) {
    if (f.coefficients.size() != f.exponents.size())
        throw LengthMismatch(f.coefficients.size(), f.exponents.size());
    if (f.exponents.size() == 0) return 0.0;
    return std::sqrt(quadratic_form(monomial_gram(f.exponents), f.coefficients));
}

double distance_to_span(const ExponentSequence& seq, Complex mu) {
    if (!(mu.real() > -0.5)) throw HalfPlaneViolation(0);
    for (const Complex& lam : seq.points())
        if (lam == mu) return 0.0;  // member of the span
    if (seq.size() == 0) return std::sqrt(1.0 / (2.0 * mu.real() + 1.0));
    const HermitianGram G = monomial_gram(seq);
    const std::size_t n = seq.size();
    std::vector<Complex> b(n);
    for (std::size_t i = 0; i < n; ++i)
        b[i] = 1.0 / (mu + std::conj(seq.points()[i]) + 1.0);
    const std::vector<Complex> c = solve_gram(G, b);
    Complex proj(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) proj += std::conj(b[i]) * c[i];
    const double dist_sq = 1.0 / (2.0 * mu.real() + 1.0) - proj.real();
    return std::sqrt(std::max(dist_sq, 0.0));
}

}  // namespace muntz
