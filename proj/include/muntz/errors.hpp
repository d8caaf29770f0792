#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace muntz {

// Base class for all typed failures raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exponent landed on or left of the Re = -1/2 line.
class HalfPlaneViolation : public Error {
public:
    explicit HalfPlaneViolation(std::size_t index)
        : Error("exponent at index " + std::to_string(index) +
                " violates Re > -1/2"),
          index(index) {}
    std::size_t index;
};

class DuplicatePoint : public Error {
public:
    DuplicatePoint(std::size_t i, std::size_t j)
        : Error("points at indices " + std::to_string(i) + " and " +
                std::to_string(j) + " coincide"),
          i(i), j(j) {}
    std::size_t i, j;
};

class BadGeneratorParams : public Error {
public:
    explicit BadGeneratorParams(const std::string& msg)
        : Error("bad generator parameters: " + msg) {}
};

// Evaluation requested outside the admissible half-plane / domain.
class DomainViolation : public Error {
public:
    explicit DomainViolation(const std::string& msg) : Error(msg) {}
};

class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(std::size_t index, std::size_t limit)
        : Error("index " + std::to_string(index) + " out of range [1, " +
                std::to_string(limit) + "]"),
          index(index), limit(limit) {}
    std::size_t index, limit;
};

class ConvergenceFailure : public Error {
public:
    explicit ConvergenceFailure(const std::string& msg) : Error(msg) {}
};

// Conditioning guard tripped; the estimate is lambda_max / lambda_min.
class IllConditioned : public Error {
public:
    explicit IllConditioned(double cond_estimate)
        : Error("Gram matrix ill-conditioned, cond estimate " +
                std::to_string(cond_estimate)),
          cond_estimate(cond_estimate) {}
    double cond_estimate;
};

class TailBoundFailure : public Error {
public:
    explicit TailBoundFailure(const std::string& msg) : Error(msg) {}
};

class ToleranceNotMet : public Error {
public:
    explicit ToleranceNotMet(const std::string& msg) : Error(msg) {}
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("sequence lengths differ: " + std::to_string(a) + " vs " +
                std::to_string(b)),
          a(a), b(b) {}
    std::size_t a, b;
};

class NotRealIncreasing : public Error {
public:
    explicit NotRealIncreasing(const std::string& msg) : Error(msg) {}
};

class RatioAtMostOne : public Error {
public:
    explicit RatioAtMostOne(std::size_t index)
        : Error("tail ratio r_n <= 1 at index " + std::to_string(index)),
          index(index) {}
    std::size_t index;
};

class DegenerateRHS : public Error {
public:
    explicit DegenerateRHS(const std::string& msg) : Error(msg) {}
};

class NotRealAtLeastHalf : public Error {
public:
    explicit NotRealAtLeastHalf(std::size_t index)
        : Error("w at index " + std::to_string(index) +
                " is not a real number >= 1/2"),
          index(index) {}
    std::size_t index;
};

class BadBase : public Error {
public:
    explicit BadBase(double q)
        : Error("Dirichlet base must exceed 1, got " + std::to_string(q)),
          q(q) {}
    double q;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg)
        : Error("parse error: " + msg) {}
};

}  // namespace muntz
