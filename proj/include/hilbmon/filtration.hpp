#pragma once

// The multiplicity-adic filtration of a relative ideal E:
//   T_0 = E,  T_{n+1} = M + T_n   (M = maximal ideal of S)
// The reduction number r is the least n with T_{n+1} = e + T_n (e = multiplicity);
// from there on each level is the previous one shifted by e. Levels T_0 .. T_{r+1}
// are stored.

#include <stdexcept>
#include <vector>

#include "hilbmon/errors.hpp"
#include "hilbmon/relative_ideal.hpp"
#include "hilbmon/semigroup.hpp"
#include "hilbmon/valuation_set.hpp"

namespace hilbmon {

struct FiltrationTable {
    std::vector<ValuationSet> levels;  // T_0 .. T_{reduction_number + 1}
    int reduction_number = 0;
    int multiplicity = 0;
};

inline FiltrationTable filtration(const NumericalSemigroup& s, const RelativeIdeal& e) {
    const int mult = s.multiplicity();
    const ValuationSet maxideal = maximal_ideal_values(s);
    FiltrationTable table;
    table.multiplicity = mult;
    table.levels.push_back(e.closure());
    const int cap = s.frobenius() + 1;  // the reduction number never exceeds this
    for (int n = 0;; ++n) {
        ValuationSet next = sumset(maxideal, table.levels.back());
        if (next == table.levels.back().translated(mult)) {
            table.reduction_number = n;
            table.levels.push_back(std::move(next));
            return table;
        }
        if (n >= cap) throw ReductionCapExceeded(cap + 1);
        table.levels.push_back(std::move(next));
    }
}

// |T_n \ T_{n+1}|; for n past the reduction number the count is the stable one.
inline int level_diff_count(const FiltrationTable& table, int n) {
    if (n < 0) throw std::invalid_argument("level must be >= 0");
    const int k = std::min(n, table.reduction_number);
    return difference_count(table.levels[static_cast<std::size_t>(k)],
                            table.levels[static_cast<std::size_t>(k) + 1]);
}

// The elements of T_n \ T_{n+1}, for stored levels (n <= reduction number).
inline std::vector<int> level_diff_elements(const FiltrationTable& table, int n) {
    if (n < 0 || n > table.reduction_number)
        throw std::invalid_argument("level outside the stored table");
    return difference_elements(table.levels[static_cast<std::size_t>(n)],
                               table.levels[static_cast<std::size_t>(n) + 1]);
}

}  // namespace hilbmon
