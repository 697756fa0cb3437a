#pragma once

#include <stdexcept>
#include <string>

namespace hilbmon {

// Input errors. The CLI maps anything derived from std::invalid_argument to
// exit code 2 (bad usage / bad input).

struct EmptyGenerators : std::invalid_argument {
    EmptyGenerators() : std::invalid_argument("generator list must be non-empty") {}
};

struct NotCoprime : std::invalid_argument {
    explicit NotCoprime(int gcd)
        : std::invalid_argument("generators have gcd " + std::to_string(gcd) +
                                "; a numerical semigroup needs gcd 1") {}
};

struct NotAMember : std::invalid_argument {
    explicit NotAMember(long long x)
        : std::invalid_argument(std::to_string(x) +
                                " is not a nonzero member of the semigroup") {}
};

struct EmptyInput : std::invalid_argument {
    EmptyInput() : std::invalid_argument("input sequence must be non-empty") {}
};

struct DimensionMismatch : std::invalid_argument {
    DimensionMismatch(std::size_t got, std::size_t want)
        : std::invalid_argument("exponent vector has " + std::to_string(got) +
                                " entries, expected " + std::to_string(want)) {}
};

struct BoundsTooLarge : std::invalid_argument {
    explicit BoundsTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

// Internal defect, never an input problem: the multiplicity-adic filtration of a
// relative ideal must reach its stable form within frobenius + 2 steps.
struct ReductionCapExceeded : std::logic_error {
    explicit ReductionCapExceeded(int cap)
        : std::logic_error("filtration failed to stabilize within " +
                           std::to_string(cap) + " levels (internal invariant)") {}
};

}  // namespace hilbmon
