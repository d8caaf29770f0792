#include "muntz/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace muntz {

double markov_newman_constant(const std::vector<HalfPlanePoint>& ws) {
    if (ws.empty()) throw DomainViolation("constant requires a nonempty w list");
    double diag = 0.0;
    for (const auto& w : ws) diag += std::norm(w.value() - 0.5);
    double cross = 0.0;
    for (std::size_t k = 0; k < ws.size(); ++k) {
        double tail = 0.0;
        for (std::size_t j = k + 1; j < ws.size(); ++j)
            tail += ws[j].value().real();
        cross += ws[k].value().real() * tail;
    }
    return std::sqrt(diag + 4.0 * cross);
}

namespace {

// || sum c_k / (z + w_k) ||^2 by the direct double sum; tolerates repeats.
double kernel_norm_sq(const std::vector<HalfPlanePoint>& ws,
                      const std::vector<Complex>& c) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < ws.size(); ++k)
        for (std::size_t l = 0; l < ws.size(); ++l)
            acc += c[k] * std::conj(c[l]) /
                   (ws[k].value() + std::conj(ws[l].value()));
    return std::max(acc.real(), 0.0);
}

}  // namespace

MarkovNewmanResult markov_newman_check(const std::vector<HalfPlanePoint>& ws,
                                       const std::vector<Complex>& a) {
    if (a.size() != ws.size()) throw LengthMismatch(a.size(), ws.size());
    std::vector<Complex> weighted(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        weighted[k] = a[k] * (ws[k].value() - 0.5);
    MarkovNewmanResult out;
    out.lhs = std::sqrt(kernel_norm_sq(ws, weighted));
    out.rhs = std::sqrt(kernel_norm_sq(ws, a));
    out.constant = markov_newman_constant(ws);
    if (out.rhs <= 0.0)
        throw DegenerateRHS("right-hand side combination is numerically zero");
    out.pass = out.lhs <= out.constant * out.rhs + 1e-12 * out.rhs;
    return out;
}

double markov_newman_real_constant(const std::vector<double>& ws) {
    if (ws.empty()) throw DomainViolation("constant requires a nonempty w list");
    double sum = 0.0;
    for (std::size_t k = 0; k < ws.size(); ++k) {
        if (!(ws[k] >= 0.5)) throw NotRealAtLeastHalf(k);
        sum += ws[k];
    }
    return std::sqrt(2.0) * sum;
}

HermitianGram dirichlet_gram(const std::vector<double>& qs) {
    const std::size_t n = qs.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(qs[i] > 1.0)) throw BadBase(qs[i]);
        if (i > 0 && !(qs[i] > qs[i - 1]))
            throw NotRealIncreasing("q must be strictly increasing");
    }
    CauchyNodes nodes;
    nodes.x.reserve(n);
    nodes.y.reserve(n);
    for (double q : qs) {
        nodes.x.emplace_back(std::log(q) + 0.5, 0.0);
        nodes.y.emplace_back(std::log(q) + 0.5, 0.0);
    }
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e[i * n + j] = 1.0 / (nodes.x[i] + nodes.y[j]);
    return HermitianGram(std::move(e), n, GramKind::Dirichlet, std::move(nodes));
}

DirichletEquivalenceResult dirichlet_equivalence(const std::vector<double>& qs,
                                                 std::size_t trials,
                                                 std::uint64_t seed) {
    if (trials < 1) throw DomainViolation("at least one trial is required");
    const HermitianGram G = dirichlet_gram(qs);
    const std::size_t n = qs.size();
    std::vector<double> logs(n);
    for (std::size_t i = 0; i < n; ++i) logs[i] = std::log(qs[i]);

    DirichletEquivalenceResult out;

    // Condition product in log domain.
    double cond_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            s += std::log(std::abs(logs[i] - logs[k])) -
                 std::log(logs[i] + logs[k] + 1.0);
        }
        cond_min = std::min(cond_min, std::exp(s));
    }
    out.condition_value = n == 1 ? 1.0 : cond_min;

    // Certified bracket: extremal eigenvalues of D^{1/2} G D^{1/2},
    // D = diag(ln q_k), since the ratio is a Rayleigh quotient of it.
    std::vector<Complex> rescaled(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rescaled[i * n + j] =
                std::sqrt(logs[i] * logs[j]) * G.at(i, j);
    const auto [lo, hi] =
        frame_bounds(HermitianGram(std::move(rescaled), n, GramKind::Dirichlet));
    out.c_lo = lo;
    out.c_hi = hi;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double smin = std::numeric_limits<double>::infinity();
    double smax = 0.0;
    out.sampled_ratios.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Complex> a(n);
        double denom = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = Complex(gauss(rng), gauss(rng));
            denom += std::norm(a[i]) / logs[i];
        }
        const double ratio = quadratic_form(G, a) / denom;
        out.sampled_ratios.push_back(ratio);
        smin = std::min(smin, ratio);
        smax = std::max(smax, ratio);
    }
    out.sampled_min = smin;
    out.sampled_max = smax;
    return out;
}

}  // namespace muntz
