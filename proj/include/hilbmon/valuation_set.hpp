#pragma once

// Cofinite sets of naturals in normal form: finitely many sporadic elements
// below a conductor, plus everything from the conductor on. The conductor is
// kept minimal (conductor - 1 is never in the set, or the conductor is 0), so
// representations are unique and equality is memberwise comparison.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hilbmon/errors.hpp"

namespace hilbmon {

class ValuationSet {
  public:
    ValuationSet(std::vector<int> sporadic, int conductor)
        : sporadic_(std::move(sporadic)), conductor_(conductor) {
        if (conductor_ < 0) throw std::invalid_argument("conductor must be >= 0");
        std::sort(sporadic_.begin(), sporadic_.end());
        sporadic_.erase(std::unique(sporadic_.begin(), sporadic_.end()),
                        sporadic_.end());
        if (!sporadic_.empty() && sporadic_.front() < 0)
            throw std::invalid_argument("elements must be >= 0");
        while (!sporadic_.empty() && sporadic_.back() >= conductor_) sporadic_.pop_back();
        while (conductor_ > 0 && !sporadic_.empty() &&
               sporadic_.back() == conductor_ - 1) {
            sporadic_.pop_back();
            --conductor_;
        }
    }

    static ValuationSet naturals() { return ValuationSet({}, 0); }

    // Set = { i < bits.size() : bits[i] } U [tail_start, oo).
    static ValuationSet from_bits(const std::vector<char>& bits, int tail_start) {
        std::vector<int> sporadic;
        const int lim = std::min<int>(static_cast<int>(bits.size()), tail_start);
        for (int i = 0; i < lim; ++i)
            if (bits[static_cast<std::size_t>(i)]) sporadic.push_back(i);
        return ValuationSet(std::move(sporadic), tail_start);
    }

    bool contains(long long x) const {
        if (x < 0) return false;
        if (x >= conductor_) return true;
        return std::binary_search(sporadic_.begin(), sporadic_.end(),
                                  static_cast<int>(x));
    }

    const std::vector<int>& sporadic() const { return sporadic_; }
    int conductor() const { return conductor_; }

    int min() const { return sporadic_.empty() ? conductor_ : sporadic_.front(); }

    // All elements strictly below `bound`, ascending.
    std::vector<int> elements_below(int bound) const {
        std::vector<int> out;
        for (int s : sporadic_) {
            if (s >= bound) break;
            out.push_back(s);
        }
        for (int x = conductor_; x < bound; ++x) out.push_back(x);
        return out;
    }

    ValuationSet translated(int shift) const {
        if (shift < 0) throw std::invalid_argument("shift must be >= 0");
        ValuationSet out = *this;
        for (int& s : out.sporadic_) s += shift;
        out.conductor_ += shift;
        return out;
    }

    bool operator==(const ValuationSet&) const = default;

  private:
    std::vector<int> sporadic_;
    int conductor_;
};

// Elementwise sums {a + b}. Everything at or past the sum of the conductors is
// reachable, so that sum bounds the table.
inline ValuationSet sumset(const ValuationSet& a, const ValuationSet& b) {
    const int bound = a.conductor() + b.conductor();
    std::vector<char> bits(static_cast<std::size_t>(bound), 0);
    const std::vector<int> ea = a.elements_below(bound);
    const std::vector<int> eb = b.elements_below(bound);
    for (int va : ea)
        for (int vb : eb) {
            if (va + vb >= bound) break;
            bits[static_cast<std::size_t>(va + vb)] = 1;
        }
    return ValuationSet::from_bits(bits, bound);
}

// Elements of a not in b, ascending. Finite: past max(conductors) both sets
// contain everything.
inline std::vector<int> difference_elements(const ValuationSet& a,
                                            const ValuationSet& b) {
    const int bound = std::max(a.conductor(), b.conductor());
    std::vector<int> out;
    for (int x : a.elements_below(bound))
        if (!b.contains(x)) out.push_back(x);
    return out;
}

inline int difference_count(const ValuationSet& a, const ValuationSet& b) {
    return static_cast<int>(difference_elements(a, b).size());
}

}  // namespace hilbmon
