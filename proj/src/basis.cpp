#include "muntz/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "muntz/kernels.hpp"

namespace muntz {

DensityResult density_partial_sums(const ExponentSequence& seq) {
    DensityResult out;
    out.partial_sums.reserve(seq.size());
    double s = 0.0;
    for (const Complex& lam : seq.points()) {
        s += (0.5 + lam.real()) / (std::norm(lam + 0.5) + 1.0);
        out.partial_sums.push_back(s);
    }
    if (seq.tail_class()) {
        out.verdict = *seq.tail_class() == TailClass::Divergent ? "divergent"
                                                                : "convergent";
    } else {
        out.verdict = "inconclusive (finite data)";
    }
    return out;
}

std::vector<double> carleson_deltas(const ExponentSequence& seq) {
    const auto& pts = seq.points();
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) throw DuplicatePoint(i, j);
    std::vector<double> delta(n);
    for (std::size_t i = 0; i < n; ++i) {
        double log_sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            log_sum += std::log(std::abs(pts[i] - pts[k])) -
                       std::log(std::abs(pts[i] + std::conj(pts[k]) + 1.0));
        }
        delta[i] = std::min(std::exp(log_sum), 1.0);
    }
    return delta;
}

ThinnessResult thinness_trend(const ExponentSequence& seq) {
    ThinnessResult out;
    out.delta = carleson_deltas(seq);
    const std::size_t n = out.delta.size();
    const std::size_t tail_len = std::max<std::size_t>(1, (n + 3) / 4);
    const std::vector<double> tail(out.delta.end() - tail_len, out.delta.end());

    bool nondecreasing = true;
    for (std::size_t i = 0; i + 1 < tail.size(); ++i)
        if (tail[i + 1] < tail[i] - 1e-15) nondecreasing = false;
    const double gap_front = 1.0 - tail.front();
    const double gap_back = 1.0 - tail.back();

    // Trend labels only: a finite prefix never decides the limit.
    if (nondecreasing && (gap_back <= 0.5 * gap_front || gap_back <= 0.1))
        out.verdict = "thin-consistent";
    else if (*std::max_element(tail.begin(), tail.end()) <= 0.9)
        out.verdict = "not thin";
    else
        out.verdict = "inconclusive";
    return out;
}

LacunarityProfile lacunarity_profile(const ExponentSequence& seq) {
    const auto& pts = seq.points();
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (pts[i].imag() != 0.0 || !(pts[i].real() > 0.0))
            throw NotRealIncreasing("exponents must be real and positive");
        if (i > 0 && !(pts[i].real() > pts[i - 1].real()))
            throw NotRealIncreasing("exponents must be strictly increasing");
    }
    LacunarityProfile p;
    p.w.reserve(n);
    p.q.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.w.push_back(pts[i].real() + 0.5);
        p.q.push_back(std::sqrt(2.0 * p.w.back()));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        p.lambda_ratios.push_back(pts[i + 1].real() / pts[i].real());
        p.q_ratios.push_back(p.q[i + 1] / p.q[i]);
    }
    // r_n is the suffix infimum of the q-ratios, hence nondecreasing in n.
    p.r.assign(p.q_ratios.size(), 0.0);
    double suffix = std::numeric_limits<double>::infinity();
    for (std::size_t i = p.q_ratios.size(); i-- > 0;) {
        suffix = std::min(suffix, p.q_ratios[i]);
        p.r[i] = suffix;
    }
    p.eps.reserve(p.r.size());
    for (std::size_t i = 0; i < p.r.size(); ++i) {
        if (!(p.r[i] > 1.0)) throw RatioAtMostOne(i + 1);
        p.eps.push_back(std::sqrt(1.0 + 4.0 / (p.r[i] - 1.0)) - 1.0);
    }
    return p;
}

SandwichResult aob_sandwich_check(const std::vector<double>& w,
                                  const std::vector<Complex>& a,
                                  std::size_t n0) {
    const std::size_t n = w.size();
    if (n0 < 1 || n0 > n) throw IndexOutOfRange(n0, n);
    if (a.size() != n - (n0 - 1)) throw LengthMismatch(a.size(), n - (n0 - 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (!(w[i] > 0.0))
            throw NotRealIncreasing("w must be positive");
        if (i > 0 && !(w[i] > w[i - 1]))
            throw NotRealIncreasing("w must be strictly increasing");
    }
    double norm_a_sq = 0.0;
    for (const Complex& c : a) norm_a_sq += std::norm(c);
    if (norm_a_sq == 0.0)
        throw DegenerateRHS("coefficient vector is identically zero");
    const double norm_a = std::sqrt(norm_a_sq);

    // eps from the tail ratios r_{n0} = inf_{m >= n0} q_{m+1}/q_m.
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t i = n0 - 1; i + 1 < n; ++i)
        r = std::min(r, std::sqrt(w[i + 1] / w[i]));
    double eps_up = 0.0, eps_lo = 0.0;
    if (std::isfinite(r)) {
        if (!(r > 1.0)) throw RatioAtMostOne(n0);
        eps_up = std::sqrt(1.0 + 4.0 / (r - 1.0)) - 1.0;
        eps_lo = 1.0 - std::sqrt(std::max(0.0, 1.0 - 4.0 / (r - 1.0)));
    }

    // mid^2 = a^H N a with N_kl = 2 sqrt(w_k w_l) / (w_k + w_l).
    const std::size_t m = a.size();
    double mid_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double wi = w[n0 - 1 + i];
        for (std::size_t j = 0; j < m; ++j) {
            const double wj = w[n0 - 1 + j];
            const double entry = 2.0 * std::sqrt(wi * wj) / (wi + wj);
            mid_sq += (a[i] * std::conj(a[j])).real() * entry;
        }
    }
    SandwichResult out;
    out.mid = std::sqrt(std::max(mid_sq, 0.0));
    out.eps_upper = eps_up;
    out.eps_lower = eps_lo;
    out.lhs = (1.0 - eps_lo) * norm_a;
    out.rhs = (1.0 + eps_up) * norm_a;
    const double slack = 1e-12 * norm_a;
    out.pass = (out.lhs <= out.mid + slack) && (out.mid <= out.rhs + slack);
    return out;
}

double volberg_necessity_gap(double w_n, double w_next, double eps_n, double t) {
    if (!(t > 0.0)) throw DomainViolation("t must be positive");
    if (!(w_next > w_n) || !(w_n > 0.0))
        throw NotRealIncreasing("requires w_next > w_n > 0");
    const double rho = w_next / w_n;
    const double lhs = (1.0 + eps_n) * std::sqrt(1.0 + t * t);
    const double rhs = 1.0 + 2.0 * t * std::sqrt(rho) / (1.0 + rho);
    return lhs - rhs;
}

StabilityResult stability_R(const ExponentSequence& lambda,
                            const ExponentSequence& mus,
                            const std::vector<double>& t_grid) {
    if (lambda.size() != mus.size())
        throw LengthMismatch(lambda.size(), mus.size());
    StabilityResult out;
    out.values.reserve(t_grid.size());
    for (double t : t_grid) {
        double s = 0.0;
        for (std::size_t k = 0; k < lambda.size(); ++k) {
            const Complex num = lambda.points()[k] - mus.points()[k];
            const Complex den = mus.points()[k] + 0.5 - Complex(0.0, t);
            s += std::abs(num) / std::abs(den);
        }
        out.values.push_back(s);
    }
    // |mu + 1/2 - it| >= Re(mu) + 1/2 for every real t.
    double env = 0.0;
    for (std::size_t k = 0; k < lambda.size(); ++k)
        env += std::abs(lambda.points()[k] - mus.points()[k]) /
               (mus.points()[k].real() + 0.5);
    out.envelope = env;
    out.verdict = "sufficient condition satisfied";
    return out;
}

ProjectionRieszResult projection_riesz_condition(const ExponentSequence& lambda,
                                                 const ExponentSequence& mus) {
    ProjectionRieszResult out;
    const BlaschkeSet B = BlaschkeSet::from_exponents(lambda);
    std::vector<Complex> nus;
    nus.reserve(mus.size());
    for (const Complex& mu : mus.points()) {
        const Complex nu = std::conj(mu) + 0.5;
        nus.push_back(nu);
        out.blaschke_moduli.push_back(std::abs(blaschke_product(B, nu, false)));
    }
    // Carleson products of the image points nu_n in C_0; reuse the lambda-form
    // product via the shift nu - 1/2, which leaves both numerator and
    // denominator |nu_n + conj(nu_k)| unchanged.
    std::vector<Complex> shifted;
    shifted.reserve(nus.size());
    for (const Complex& nu : nus) shifted.push_back(nu - 0.5);
    out.carleson = carleson_deltas(validate_exponents(shifted));

    const double binf = out.blaschke_moduli.empty()
                            ? 0.0
                            : *std::min_element(out.blaschke_moduli.begin(),
                                                out.blaschke_moduli.end());
    const double blast = out.blaschke_moduli.empty() ? 0.0
                                                     : out.blaschke_moduli.back();
    const double cinf =
        *std::min_element(out.carleson.begin(), out.carleson.end());
    const bool b_trend = blast <= out.blaschke_moduli.front() + 1e-15;
    out.verdict = std::string("|B(nu_n)| ") +
                  (b_trend ? "nonincreasing" : "not decreasing") +
                  " (min " + std::to_string(binf) + "); Carleson inf " +
                  std::to_string(cinf) +
                  (cinf > 0.0 ? " > 0: Riesz-for-span consistent"
                              : " = 0: Riesz-for-span fails");
    return out;
}

BasisDiagnostics analyze_basis(const ExponentSequence& seq) {
    BasisDiagnostics d;
    DensityResult density = density_partial_sums(seq);
    d.density_partial_sums = density.partial_sums;
    d.verdicts.emplace_back("density", density.verdict);
    ThinnessResult thin = thinness_trend(seq);
    d.delta = thin.delta;
    d.delta_inf = *std::min_element(d.delta.begin(), d.delta.end());
    d.verdicts.emplace_back("thinness", thin.verdict);

    bool real_increasing = true;
    const auto& pts = seq.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].imag() != 0.0 || !(pts[i].real() > 0.0)) real_increasing = false;
        if (i > 0 && !(pts[i].real() > pts[i - 1].real())) real_increasing = false;
    }
    if (real_increasing && seq.size() >= 2) {
        LacunarityProfile p = lacunarity_profile(seq);
        d.ratios = p.lambda_ratios;
        d.r = p.r;
        d.eps = p.eps;
        const double rmin = *std::min_element(p.lambda_ratios.begin(),
                                              p.lambda_ratios.end());
        d.verdicts.emplace_back(
            "lacunarity", rmin > 1.0 ? "lacunary (min ratio " +
                                           std::to_string(rmin) + ")"
                                     : "not lacunary");
    }
    return d;
}

}  // namespace muntz
