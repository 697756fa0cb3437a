// Walkthrough of the library on the semigroup <6,7,15>: the filtration table,
// the Hilbert data with its depth witness, the monomial crosscheck, and a
// small exhaustive sweep over the relative ideals of the same ring.

#include <iostream>
#include <string>
#include <vector>

#include "hilbmon/explorer.hpp"
#include "hilbmon/filtration.hpp"
#include "hilbmon/graded.hpp"
#include "hilbmon/hilbert.hpp"
#include "hilbmon/relative_ideal.hpp"
#include "hilbmon/semigroup.hpp"

namespace {

std::string join(const std::vector<int>& xs) {
    std::string text;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) text += " ";
        text += std::to_string(xs[i]);
    }
    return text;
}

}  // namespace

int main() {
    const hilbmon::NumericalSemigroup s({6, 7, 15});
    std::cout << "semigroup <" << join(s.minimal_generators()) << ">\n"
              << "  multiplicity " << s.multiplicity() << ", Frobenius "
              << s.frobenius() << ", genus " << s.genus() << "\n\n";

    const auto table = hilbmon::filtration(s, hilbmon::ring_ideal(s));
    std::cout << "filtration differences T_n \\ T_{n+1}:\n";
    for (int n = 0; n <= table.reduction_number; ++n)
        std::cout << "  n = " << n << ": "
                  << join(hilbmon::level_diff_elements(table, n)) << "\n";

    const hilbmon::HilbertData data = hilbmon::analyze(s);
    std::cout << "\nHilbert function  " << join(data.H) << "\n"
              << "h-coefficients    " << join(data.h_coeffs) << "\n"
              << "e0 = " << data.e0 << ", e1 = " << data.e1 << ", reduction number "
              << data.reduction_number << "\n";
    if (data.depth_witness)
        std::cout << "depth 0: the class of t^" << data.depth_witness->second
                  << " in level " << data.depth_witness->first
                  << " kills every degree-one generator\n";

    const hilbmon::MonomialIdeal cone(3, {{1, 0, 1}, {0, 6, 0}, {0, 3, 1}, {0, 0, 2}});
    const auto report = hilbmon::crosscheck_presentation(s, cone, 20);
    std::cout << "\nmonomial crosscheck through degree 20: "
              << (report.equal ? "equal" : "MISMATCH") << "\n";

    const auto sweep = hilbmon::sweep_theorem_conclusion(s, 29, 4);
    std::cout << "\nsweep over " << sweep.summary.instances
              << " relative ideals generated within [0, 29]: "
              << sweep.summary.findings << " findings, max reduction number "
              << sweep.summary.max_reduction << "\n";
    return sweep.summary.findings == 0 ? 0 : 1;
}
