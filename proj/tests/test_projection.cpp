#include <doctest.h>

#include <random>

#include "muntz/dictionary.hpp"
#include "muntz/kernels.hpp"
#include "muntz/projection.hpp"

using namespace muntz;

namespace {

ExponentSequence seq_of(std::vector<Complex> pts) {
    return validate_exponents(pts);
}

ExponentSequence random_sequence(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> re(-0.4, 4.0), im(-3.0, 3.0);
    std::vector<Complex> pts;
    while (pts.size() < n) {
        const Complex c(re(rng), im(rng));
        bool ok = true;
        for (const Complex& p : pts)
            if (std::abs(c - p) < 0.4) ok = false;
        if (ok) pts.push_back(c);
    }
    return validate_exponents(pts);
}

}  // namespace

TEST_CASE("projection coefficients on desk-scale anchors") {
    auto proj = project_onto_muntz(seq_of({Complex(1.0, 0.0)}), Complex(0.0, 0.0));
    CHECK(std::abs(proj.coefficients[0] - 1.5) <= 1e-14);

    auto two = seq_of({Complex(1.0, 0.0), Complex(2.0, 0.0)});
    auto proj2 = project_onto_muntz(two, Complex(0.0, 0.0));
    CHECK(std::abs(proj2.coefficients[0] - 4.0) <= 1e-11);
    CHECK(std::abs(proj2.coefficients[1] + 10.0 / 3.0) <= 1e-11);

    auto member = project_onto_muntz(two, Complex(2.0, 0.0));
    CHECK(member.coefficients[0] == Complex(0.0, 0.0));
    CHECK(member.coefficients[1] == Complex(1.0, 0.0));
}

TEST_CASE("projection norm via both routes") {
    auto one = seq_of({Complex(1.0, 0.0)});
    CHECK(projection_norm(one, Complex(0.0, 0.0)) ==
          doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
    // member: ||e_mu|| = 1/sqrt(2 Re mu + 1)
    CHECK(projection_norm(one, Complex(1.0, 0.0)) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(projection_norm(ExponentSequence::empty(), Complex(1.0, 0.0)) == 0.0);
}

TEST_CASE("projection Gram reduces to the kernel Gram on members") {
    auto lam = seq_of({Complex(1.0, 0.0), Complex(2.5, 0.0), Complex(5.0, 0.0)});
    auto G = projection_gram(lam, {Complex(1.0, 0.0), Complex(5.0, 0.0)});
    // B vanishes at member images, so entries are plain Szego values.
    CHECK(std::abs(G.at(0, 0) - Complex(1.0 / 3.0, 0.0)) <= 1e-14);
    CHECK(std::abs(G.at(1, 1) - Complex(1.0 / 11.0, 0.0)) <= 1e-14);
    CHECK(std::abs(G.at(0, 1) - Complex(1.0 / 7.0, 0.0)) <= 1e-14);

    // single mu: [[projection_norm^2]]
    auto single = projection_gram(lam, {Complex(0.3, 0.0)});
    const double pn = projection_norm(lam, Complex(0.3, 0.0));
    CHECK(single.at(0, 0).real() == doctest::Approx(pn * pn).epsilon(1e-11));

    // pinned by the model-kernel formula directly
    auto lam1 = seq_of({Complex(1.0, 0.0)});
    auto G2 = projection_gram(lam1, {Complex(0.0, 0.0), Complex(2.0, 0.0)});
    const BlaschkeSet B = BlaschkeSet::from_exponents(lam1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const Complex nui = std::conj(Complex(i == 0 ? 0.0 : 2.0)) + 0.5;
            const Complex nuj = std::conj(Complex(j == 0 ? 0.0 : 2.0)) + 0.5;
            const Complex want =
                (1.0 - std::conj(blaschke_product(B, nuj)) *
                           blaschke_product(B, nui)) /
                (nui + std::conj(nuj));
            CHECK(std::abs(G2.at(i, j) - want) <= 1e-14);
        }
}

TEST_CASE("model kernel identity for projections") {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> re(-0.4, 4.0), im(-3.0, 3.0),
        rez(0.05, 4.0), imz(-4.0, 4.0);
    std::uniform_int_distribution<int> size(1, 8);
    int accepted = 0;
    while (accepted < 50) {
        auto seq = random_sequence(rng, size(rng));
        const Complex mu(re(rng), im(rng));
        bool close = false;
        for (const Complex& l : seq.points())
            if (std::abs(mu - l) < 0.2) close = true;
        if (close) continue;
        const auto [lo, hi] = frame_bounds(monomial_gram(seq));
        if (!(lo > 1e-9 * hi)) continue;
        ++accepted;
        const MuntzCombination x = project_onto_muntz(seq, mu);
        const BlaschkeSet B = BlaschkeSet::from_exponents(seq);
        const HalfPlanePoint nu(std::conj(mu) + 0.5);
        for (int k = 0; k < 20; ++k) {
            const Complex z(rez(rng), imz(rng));
            CHECK(std::abs(dictionary_eval_closed(x, z) -
                           model_kernel(B, nu, z)) <= 1e-8);
        }
    }
}

TEST_CASE("Pythagoras identity") {
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> re(-0.4, 4.0), im(-3.0, 3.0);
    std::uniform_int_distribution<int> size(1, 8);
    int accepted = 0;
    while (accepted < 50) {
        auto seq = random_sequence(rng, size(rng));
        const Complex mu(re(rng), im(rng));
        bool close = false;
        for (const Complex& l : seq.points())
            if (std::abs(mu - l) < 0.2) close = true;
        if (close) continue;
        const auto [lo, hi] = frame_bounds(monomial_gram(seq));
        if (!(lo > 1e-7 * hi)) continue;
        ++accepted;
        const double pn = projection_norm(seq, mu);
        const double dist = distance_to_span(seq, mu);
        CHECK(std::abs(pn * pn + dist * dist - 1.0 / (2.0 * mu.real() + 1.0)) <=
              1e-10);
    }
}

TEST_CASE("biorthogonal coefficients") {
    auto two = seq_of({Complex(1.0, 0.0), Complex(2.0, 0.0)});
    // f = e_{lambda_1}: moments are the first Gram column.
    auto G = monomial_gram(two);
    auto c = biorthogonal_coeffs(two, {G.at(0, 0), G.at(1, 0)});
    CHECK(std::abs(c[0] - 1.0) <= 1e-13);
    CHECK(std::abs(c[1]) <= 1e-13);

    auto zero = biorthogonal_coeffs(two, {Complex(0, 0), Complex(0, 0)});
    CHECK(std::abs(zero[0]) <= 1e-14);
    CHECK(std::abs(zero[1]) <= 1e-14);

    // moments of the constant 1
    auto c1 = biorthogonal_coeffs(two, {Complex(0.5, 0.0), Complex(1.0 / 3.0, 0.0)});
    CHECK(std::abs(c1[0] - 4.0) <= 1e-11);
    CHECK(std::abs(c1[1] + 10.0 / 3.0) <= 1e-11);
}

TEST_CASE("biorthogonal completeness proxy") {
    // If all biorthogonal coefficients vanish, the best approximation of f
    // in the span has zero norm.
    auto two = seq_of({Complex(1.0, 0.0), Complex(2.0, 0.0)});
    std::vector<Complex> m{Complex(0.0, 0.0), Complex(0.0, 0.0)};
    auto c = biorthogonal_coeffs(two, m);
    MuntzCombination best{two, c};
    CHECK(combo_norm(best) <= 1e-10);
}

TEST_CASE("summation partial sums and tail vanishing") {
    auto two = seq_of({Complex(1.0, 0.0), Complex(2.0, 0.0)});
    // f = e_{lambda_1}
    auto G = monomial_gram(two);
    std::vector<Complex> m{G.at(0, 0), G.at(1, 0)};

    SUBCASE("k = N+1 recovers the coefficients exactly") {
        auto p = summation_partial(two, m, 3);
        CHECK(std::abs(p.coefficients[0] - 1.0) <= 1e-12);
        CHECK(std::abs(p.coefficients[1]) <= 1e-12);
    }
    SUBCASE("k = 2 damps by the anchored tail factor") {
        auto p = summation_partial(two, m, 2);
        // |B^(2)(mu_1)| = |b_{5/2}(3/2)| = 1/4
        CHECK(std::abs(p.coefficients[0]) == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(p.coefficients[1] == Complex(0.0, 0.0));
        // reconstruction error ||(c_1 - 1) e_1|| at k = 2; |c_1 - 1| depends
        // on the normalization alpha_2 = -1, so c_1 = +1/4.
        CHECK(std::abs(p.coefficients[0] - 0.25) <= 1e-12);
        auto errs = reconstruction_curve(two, m, {2});
        CHECK(errs[0] ==
              doctest::Approx(0.75 / std::sqrt(3.0)).epsilon(1e-10));
    }
    SUBCASE("k = 1 kills every coefficient for members of the zero set") {
        auto p = summation_partial(two, m, 1);
        CHECK(p.coefficients[0] == Complex(0.0, 0.0));
        CHECK(p.coefficients[1] == Complex(0.0, 0.0));
    }
    SUBCASE("bad tail index") {
        CHECK_THROWS_AS(summation_partial(two, m, 0), IndexOutOfRange);
        CHECK_THROWS_AS(summation_partial(two, m, 4), IndexOutOfRange);
    }
}

TEST_CASE("tail coefficients vanish exactly for every k and random moments") {
    std::mt19937_64 rng(515);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto seq = generate_sequence(Geometric{1.0, 2.0}, 7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> m(7);
        for (auto& v : m) v = Complex(gauss(rng), gauss(rng));
        for (std::size_t k = 1; k <= 8; ++k) {
            auto p = summation_partial(seq, m, k);
            for (std::size_t i = k - 1; i < 7; ++i)
                CHECK(p.coefficients[i] == Complex(0.0, 0.0));
        }
    }
}

TEST_CASE("reconstruction curves for members of the span") {
    std::mt19937_64 rng(616);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto seq : {generate_sequence(Geometric{1.0, 2.0}, 10),
                     generate_sequence(Geometric{1.0, 1.5}, 10),
                     generate_sequence(Power{2.0}, 8),
                     generate_sequence(Affine{1.0, 1.0}, 5)}) {
        const std::size_t n = seq.size();
        std::vector<Complex> a(n);
        for (auto& v : a) v = Complex(gauss(rng), gauss(rng));
        MuntzCombination f{seq, a};
        const auto m = moments_of(f);
        std::vector<std::size_t> ks;
        for (std::size_t k = 1; k <= n + 1; ++k) ks.push_back(k);
        const auto errs = reconstruction_curve(seq, m, ks);
        for (double e : errs) CHECK(e >= 0.0);
        CHECK(errs.back() <= 1e-10);
    }
}
