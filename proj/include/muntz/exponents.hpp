#pragma once

// Exponent sequences Lambda = (lambda_n) in the half-plane Re > -1/2, the
// parametric families used throughout the diagnostics, and the transform
// mu_n = conj(lambda_n) + 1/2 onto the open right half-plane.

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "muntz/errors.hpp"

namespace muntz {

using Complex = std::complex<double>;

// A point of the open right half-plane C_0 (Re > 0), validated on construction.
class HalfPlanePoint {
public:
    explicit HalfPlanePoint(Complex v) : v_(v) {
        if (!(v.real() > 0.0))
            throw DomainViolation("half-plane point requires Re > 0");
    }
    Complex value() const { return v_; }

private:
    Complex v_;
};

enum class Family { Explicit, Geometric, Affine, Power, Superlacunary };

// Tail classification of the density/Blaschke sum; set only by generators,
// never inferred from a finite explicit list.
enum class TailClass { Divergent, Convergent };

struct Geometric { double a; double c; };       // lambda_n = a * c^(n-1), c > 1, a > 0
struct Affine { double a; double d; };          // lambda_n = a + (n-1) d, d > 0, a > -1/2
struct Power { double p; };                     // lambda_n = n^p, p > 0
struct Superlacunary { double base; };          // lambda_n = base^(n^2), base > 1

using GeneratorSpec = std::variant<Geometric, Affine, Power, Superlacunary>;

class ExponentSequence {
public:
    static ExponentSequence empty();

    const std::vector<Complex>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    Family family() const { return family_; }
    std::optional<TailClass> tail_class() const { return tail_class_; }

private:
    ExponentSequence(std::vector<Complex> pts, Family fam,
                     std::optional<TailClass> tail)
        : points_(std::move(pts)), family_(fam), tail_class_(tail) {}

    std::vector<Complex> points_;
    Family family_ = Family::Explicit;
    std::optional<TailClass> tail_class_;

    friend ExponentSequence validate_exponents(const std::vector<Complex>&);
    friend ExponentSequence generate_sequence(const GeneratorSpec&, std::size_t);
};

// Checks Re > -1/2 (strict, no tolerance band) and exact pairwise distinctness.
// Throws HalfPlaneViolation / DuplicatePoint; requires a nonempty input.
ExponentSequence validate_exponents(const std::vector<Complex>& raw);

// mu_n = conj(lambda_n) + 1/2, order preserved.
std::vector<HalfPlanePoint> transform_to_halfplane(const ExponentSequence& seq);

// Deterministic parametric families; tail_class is set analytically per family.
ExponentSequence generate_sequence(const GeneratorSpec& spec, std::size_t n);

}  // namespace muntz
