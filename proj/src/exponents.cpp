#include "muntz/exponents.hpp"

#include <cmath>

namespace muntz {

ExponentSequence ExponentSequence::empty() {
    return ExponentSequence({}, Family::Explicit, std::nullopt);
}

ExponentSequence validate_exponents(const std::vector<Complex>& raw) {
    if (raw.empty())
        throw DomainViolation("exponent list must be nonempty");
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!(raw[i].real() > -0.5)) throw HalfPlaneViolation(i);
        for (std::size_t j = 0; j < i; ++j) {
            if (raw[i].real() == raw[j].real() && raw[i].imag() == raw[j].imag())
                throw DuplicatePoint(j, i);
        }
    }
    return ExponentSequence(raw, Family::Explicit, std::nullopt);
}

std::vector<HalfPlanePoint> transform_to_halfplane(const ExponentSequence& seq) {
    std::vector<HalfPlanePoint> out;
    out.reserve(seq.size());
    for (const Complex& lam : seq.points())
        out.emplace_back(std::conj(lam) + 0.5);
    return out;
}

namespace {

struct GeneratorVisitor {
    std::size_t n;

    std::pair<std::vector<Complex>, TailClass> operator()(const Geometric& g) const {
        if (!(g.c > 1.0)) throw BadGeneratorParams("geometric requires c > 1");
        if (!(g.a > 0.0)) throw BadGeneratorParams("geometric requires a > 0");
        std::vector<Complex> pts;
        pts.reserve(n);
        double v = g.a;
        for (std::size_t k = 0; k < n; ++k) {
            pts.emplace_back(v, 0.0);
            v *= g.c;
        }
        return {pts, TailClass::Convergent};
    }

    std::pair<std::vector<Complex>, TailClass> operator()(const Affine& g) const {
        if (!(g.d > 0.0)) throw BadGeneratorParams("affine requires d > 0");
        if (!(g.a > -0.5)) throw BadGeneratorParams("affine requires a > -1/2");
        std::vector<Complex> pts;
        pts.reserve(n);
        for (std::size_t k = 0; k < n; ++k)
            pts.emplace_back(g.a + static_cast<double>(k) * g.d, 0.0);
        return {pts, TailClass::Divergent};
    }

    std::pair<std::vector<Complex>, TailClass> operator()(const Power& g) const {
        if (!(g.p > 0.0)) throw BadGeneratorParams("power requires p > 0");
        std::vector<Complex> pts;
        pts.reserve(n);
        for (std::size_t k = 1; k <= n; ++k)
            pts.emplace_back(std::pow(static_cast<double>(k), g.p), 0.0);
        // sum (n^p) / (n^(2p)) converges iff p > 1, harmonic-type comparison
        return {pts, g.p > 1.0 ? TailClass::Convergent : TailClass::Divergent};
    }

    std::pair<std::vector<Complex>, TailClass> operator()(const Superlacunary& g) const {
        if (!(g.base > 1.0))
            throw BadGeneratorParams("superlacunary requires base > 1");
        std::vector<Complex> pts;
        pts.reserve(n);
        for (std::size_t k = 1; k <= n; ++k)
            pts.emplace_back(std::pow(g.base, static_cast<double>(k * k)), 0.0);
        return {pts, TailClass::Convergent};
    }
};

Family family_of(const GeneratorSpec& spec) {
    if (std::holds_alternative<Geometric>(spec)) return Family::Geometric;
    if (std::holds_alternative<Affine>(spec)) return Family::Affine;
    if (std::holds_alternative<Power>(spec)) return Family::Power;
    return Family::Superlacunary;
}

}  // namespace

ExponentSequence generate_sequence(const GeneratorSpec& spec, std::size_t n) {
    if (n < 1) throw BadGeneratorParams("length must be >= 1");
    auto [pts, tail] = std::visit(GeneratorVisitor{n}, spec);
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!std::isfinite(pts[i].real()))
            throw BadGeneratorParams("generated point overflows at index " +
                                     std::to_string(i));
    return ExponentSequence(std::move(pts), family_of(spec), tail);
}

}  // namespace muntz
