#pragma once

// Relative ideals: fractional monomial ideals of a numerical semigroup ring,
// given by offsets and stored in canonical form (the full sorted set of
// minimal generators, normalized so the least offset is 0). Equal closures
// compare equal.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbmon/errors.hpp"
#include "hilbmon/semigroup.hpp"
#include "hilbmon/valuation_set.hpp"

namespace hilbmon {

// S as a set of values.
inline ValuationSet semigroup_values(const NumericalSemigroup& s) {
    std::vector<char> bits(static_cast<std::size_t>(s.conductor()) + 1, 0);
    for (int x = 0; x <= s.frobenius(); ++x)
        if (s.contains(x)) bits[static_cast<std::size_t>(x)] = 1;
    return ValuationSet::from_bits(bits, s.conductor());
}

// The maximal ideal S \ {0} as a set of values.
inline ValuationSet maximal_ideal_values(const NumericalSemigroup& s) {
    std::vector<char> bits(static_cast<std::size_t>(s.conductor()) + 1, 0);
    for (int x = 1; x <= s.frobenius(); ++x)
        if (s.contains(x)) bits[static_cast<std::size_t>(x)] = 1;
    return ValuationSet::from_bits(bits, std::max(s.conductor(), 1));
}

class RelativeIdeal {
  public:
    RelativeIdeal(const NumericalSemigroup& s, std::vector<int> offsets)
        : closure_(close_over(s, normalize(std::move(offsets)))) {
        // Minimal generators: closure minus (maximal ideal + closure).
        gens_ = difference_elements(closure_, sumset(maximal_ideal_values(s), closure_));
    }

    // Canonical generators: sorted minimal generators, least element 0.
    const std::vector<int>& generators() const { return gens_; }
    int minimal_generator_count() const { return static_cast<int>(gens_.size()); }
    const ValuationSet& closure() const { return closure_; }

    bool operator==(const RelativeIdeal& o) const { return closure_ == o.closure_; }

  private:
    static std::vector<int> normalize(std::vector<int> offsets) {
        if (offsets.empty()) throw EmptyGenerators();
        for (int o : offsets)
            if (o < 0) throw std::invalid_argument("offsets must be >= 0");
        const int lo = *std::min_element(offsets.begin(), offsets.end());
        for (int& o : offsets) o -= lo;
        return offsets;
    }

    static ValuationSet close_over(const NumericalSemigroup& s,
                                   const std::vector<int>& offsets) {
        const int hi = *std::max_element(offsets.begin(), offsets.end());
        const int tail = hi + s.conductor();  // x >= hi + conductor is hi + member
        std::vector<char> bits(static_cast<std::size_t>(tail), 0);
        for (int o : offsets)
            for (int x = o; x < tail; ++x)
                if (s.contains(x - o)) bits[static_cast<std::size_t>(x)] = 1;
        return ValuationSet::from_bits(bits, tail);
    }

    ValuationSet closure_;
    std::vector<int> gens_;
};

// The ring viewed as a module over itself.
inline RelativeIdeal ring_ideal(const NumericalSemigroup& s) {
    return RelativeIdeal(s, {0});
}

}  // namespace hilbmon
