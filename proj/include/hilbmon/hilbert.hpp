#pragma once

// Hilbert function of a module over the associated graded ring: H(n) is the
// size of the n-th filtration quotient. The h-polynomial collects the first
// differences; its value at 1 is the multiplicity e0, its derivative there e1.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbmon/errors.hpp"
#include "hilbmon/filtration.hpp"
#include "hilbmon/relative_ideal.hpp"
#include "hilbmon/semigroup.hpp"

namespace hilbmon {

struct HilbertData {
    std::vector<int> H;        // H(0) .. H(r); constant from H(r) on
    std::vector<int> h_coeffs; // first differences, trailing zeros trimmed
    int e0 = 0;
    int e1 = 0;
    int reduction_number = 0;
    int mu = 0;                // minimal generator count of the module
    bool monotone = true;
    std::optional<int> first_violation;
    bool depth_positive = true;
    std::optional<std::pair<int, int>> depth_witness;  // (level, exponent)

    bool operator==(const HilbertData&) const = default;
};

// First differences of a Hilbert function prefix, with H(-1) = 0; trailing
// zeros trimmed. The coefficients sum to the last H value.
inline std::vector<int> h_polynomial(const std::vector<int>& H) {
    if (H.empty()) throw EmptyInput();
    std::vector<int> h;
    h.reserve(H.size());
    int prev = 0;
    for (int v : H) {
        h.push_back(v - prev);
        prev = v;
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    return h;
}

// (e0, e1) = (h(1), h'(1)).
inline std::pair<int, int> hilbert_coefficients(const std::vector<int>& h) {
    if (h.empty()) throw EmptyInput();
    int e0 = 0, e1 = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        e0 += h[i];
        e1 += static_cast<int>(i) * h[i];
    }
    return {e0, e1};
}

// Least n with H(n) > H(n+1), if any. Beyond the prefix the function is
// constant, so only adjacent pairs inside the prefix can violate.
inline std::optional<int> check_monotone(const std::vector<int>& H) {
    for (std::size_t n = 0; n + 1 < H.size(); ++n)
        if (H[n] > H[n + 1]) return static_cast<int>(n);
    return std::nullopt;
}

struct DepthResult {
    bool positive = true;
    std::optional<std::pair<int, int>> witness;
};

// Depth of the associated graded module. The degree-one form of t^e (e the
// multiplicity) is a nonzerodivisor iff s + e stays out of T_{n+2} for every
// s in T_n \ T_{n+1}, n < r; levels past r never fail. When it is a
// zerodivisor the depth is zero and the module has a socle element: some
// s + g lands in T_{n+2} for every minimal generator g. The witness returned
// is the least such (level, exponent) pair.
inline DepthResult graded_depth(const NumericalSemigroup& s,
                                const FiltrationTable& table) {
    const int r = table.reduction_number;
    const int e = table.multiplicity;
    bool regular = true;
    for (int n = 0; n < r && regular; ++n)
        for (int v : level_diff_elements(table, n))
            if (table.levels[static_cast<std::size_t>(n) + 2].contains(v + e)) {
                regular = false;
                break;
            }
    if (regular) return {true, std::nullopt};
    for (int n = 0; n < r; ++n)
        for (int v : level_diff_elements(table, n)) {
            bool socle = true;
            for (int g : s.minimal_generators())
                if (!table.levels[static_cast<std::size_t>(n) + 2].contains(v + g)) {
                    socle = false;
                    break;
                }
            if (socle) return {false, std::make_pair(n, v)};
        }
    throw std::logic_error("zerodivisor detected but no socle element found");
}

inline HilbertData analyze(const NumericalSemigroup& s, const RelativeIdeal& e) {
    const FiltrationTable table = filtration(s, e);
    HilbertData d;
    d.reduction_number = table.reduction_number;
    d.H.reserve(static_cast<std::size_t>(table.reduction_number) + 1);
    for (int n = 0; n <= table.reduction_number; ++n)
        d.H.push_back(level_diff_count(table, n));
    d.h_coeffs = h_polynomial(d.H);
    std::tie(d.e0, d.e1) = hilbert_coefficients(d.h_coeffs);
    d.mu = e.minimal_generator_count();
    d.first_violation = check_monotone(d.H);
    d.monotone = !d.first_violation.has_value();
    const DepthResult depth = graded_depth(s, table);
    d.depth_positive = depth.positive;
    d.depth_witness = depth.witness;
    return d;
}

inline HilbertData analyze(const NumericalSemigroup& s) {
    return analyze(s, ring_ideal(s));
}

}  // namespace hilbmon
