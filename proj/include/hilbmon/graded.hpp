#pragma once

// Monomial side: Hilbert functions of quotients by monomial ideals, counted by
// enumerating the standard monomials of each degree, plus socle-element checks
// and the cross-check against the filtration route.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hilbmon/errors.hpp"
#include "hilbmon/hilbert.hpp"
#include "hilbmon/semigroup.hpp"

namespace hilbmon {

class MonomialIdeal {
  public:
    MonomialIdeal(int num_vars, std::vector<std::vector<int>> generators)
        : num_vars_(num_vars), gens_(std::move(generators)) {
        if (num_vars_ < 1) throw std::invalid_argument("need at least one variable");
        for (const auto& g : gens_) {
            if (static_cast<int>(g.size()) != num_vars_)
                throw DimensionMismatch(g.size(), static_cast<std::size_t>(num_vars_));
            for (int a : g)
                if (a < 0) throw std::invalid_argument("exponents must be >= 0");
        }
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        // Keep only generators not divisible by another: survivors are pairwise
        // incomparable under componentwise <=.
        std::vector<std::vector<int>> kept;
        for (const auto& g : gens_) {
            bool redundant = false;
            for (const auto& u : gens_)
                if (&u != &g && divides(u, g)) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(g);
        }
        gens_ = std::move(kept);
    }

    int num_vars() const { return num_vars_; }
    const std::vector<std::vector<int>>& generators() const { return gens_; }

    bool contains(const std::vector<int>& exponent) const {
        if (static_cast<int>(exponent.size()) != num_vars_)
            throw DimensionMismatch(exponent.size(), static_cast<std::size_t>(num_vars_));
        for (const auto& g : gens_)
            if (divides(g, exponent)) return true;
        return false;
    }

  private:
    static bool divides(const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }

    int num_vars_;
    std::vector<std::vector<int>> gens_;
};

// Number of degree-n monomials outside the ideal, by walking every exponent
// vector of total degree n.
inline int monomial_hf(const MonomialIdeal& ideal, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<int> exponent(static_cast<std::size_t>(ideal.num_vars()), 0);
    int count = 0;
    auto walk = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == ideal.num_vars() - 1) {
            exponent[static_cast<std::size_t>(pos)] = remaining;
            if (!ideal.contains(exponent)) ++count;
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            exponent[static_cast<std::size_t>(pos)] = a;
            self(self, pos + 1, remaining - a);
        }
    };
    walk(walk, 0, degree);
    return count;
}

// w is outside the ideal and every variable pushes it in.
inline bool is_socle_witness(const MonomialIdeal& ideal, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != ideal.num_vars())
        throw DimensionMismatch(w.size(), static_cast<std::size_t>(ideal.num_vars()));
    if (ideal.contains(w)) return false;
    std::vector<int> bumped = w;
    for (std::size_t i = 0; i < bumped.size(); ++i) {
        ++bumped[i];
        const bool inside = ideal.contains(bumped);
        --bumped[i];
        if (!inside) return false;
    }
    return true;
}

struct CrosscheckReport {
    bool equal = true;
    std::optional<int> first_mismatch;
    std::vector<int> filtration_values;  // semigroup route, constant past its prefix
    std::vector<int> monomial_values;
};

// Compares the filtration Hilbert function of the ring with the monomial count
// for the claimed tangent-cone presentation, degree by degree up to `upto`.
inline CrosscheckReport crosscheck_presentation(const NumericalSemigroup& s,
                                                const MonomialIdeal& ideal,
                                                int upto) {
    if (upto < 0) throw std::invalid_argument("upto must be >= 0");
    const std::vector<int> H = analyze(s).H;
    CrosscheckReport report;
    for (int n = 0; n <= upto; ++n) {
        const int a = n < static_cast<int>(H.size()) ? H[static_cast<std::size_t>(n)]
                                                     : H.back();
        const int b = monomial_hf(ideal, n);
        report.filtration_values.push_back(a);
        report.monomial_values.push_back(b);
        if (a != b && !report.first_mismatch) {
            report.first_mismatch = n;
            report.equal = false;
        }
    }
    return report;
}

}  // namespace hilbmon
