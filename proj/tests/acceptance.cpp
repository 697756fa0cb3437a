// Acceptance gate: one pass/fail line per criterion, exact integer comparisons
// throughout, wall-clock budgets enforced where a criterion carries one.
// Exits 0 only if every criterion holds.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hilbmon/cli.hpp"
#include "hilbmon/explorer.hpp"
#include "hilbmon/filtration.hpp"
#include "hilbmon/graded.hpp"
#include "hilbmon/hilbert.hpp"
#include "hilbmon/relative_ideal.hpp"
#include "hilbmon/semigroup.hpp"

namespace {

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, msg)                                                      \
    do {                                                                        \
        if (!(cond)) {                                                          \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg \
                      << "\n";                                                  \
            std::exit(1);                                                       \
        }                                                                       \
    } while (0)

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

void pass(int criterion, const std::string& what, long long elapsed_ms) {
    std::cout << "[PASS] criterion " << criterion << ": " << what << " (" << elapsed_ms
              << " ms)\n";
}

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

// Instances touched by the exhaustive criteria, for the structural suite.
using Instance = std::pair<std::vector<int>, std::vector<int>>;  // gens, ideal

}  // namespace

int main(int argc, char** argv) {
    const std::string fixtures_dir = argc > 1 ? argv[1] : "fixtures";
    const hilbmon::NumericalSemigroup flagship({6, 7, 15});
    const hilbmon::MonomialIdeal presentation(
        3, {{1, 0, 1}, {0, 6, 0}, {0, 3, 1}, {0, 0, 2}});
    std::set<Instance> touched;

    // Criterion 1: the worked example. The semigroup filtration gives
    // 1,3,4,5,5,6 then stays at 6, and the tangent-cone presentation gives the
    // same values through degree 20. The shipped fixture re-verifies end to end.
    {
        const auto start = Clock::now();
        const hilbmon::HilbertData data = hilbmon::analyze(flagship);
        REQUIRE(data.H == (std::vector<int>{1, 3, 4, 5, 5, 6}),
                "Hilbert function of <6,7,15> must be 1,3,4,5,5,6");
        const auto table = hilbmon::filtration(flagship, hilbmon::ring_ideal(flagship));
        for (int n = 6; n <= 20; ++n)
            REQUIRE(hilbmon::level_diff_count(table, n) == 6,
                    "H must stay at 6 past the reduction number");
        const hilbmon::CrosscheckReport report =
            hilbmon::crosscheck_presentation(flagship, presentation, 20);
        REQUIRE(report.equal, "monomial route must match the filtration route");
        REQUIRE(!report.first_mismatch.has_value(), "no mismatch degree expected");

        std::ostringstream out, err;
        const int code = hilbmon::cli::run(
            {"verify", fixtures_dir + "/paper_example.jsonl"}, out, err);
        REQUIRE(code == 0, "shipped fixture must verify cleanly: " + out.str() +
                               err.str());
        const long long elapsed = ms_since(start);
        REQUIRE(elapsed < 1000, "criterion 1 must finish within 1 s");
        pass(1, "worked example reproduced through both routes", elapsed);
    }

    // Criterion 2: depth zero with the explicit witness. The class of t^29 in
    // level 3 kills every degree-one generator, matching the socle monomial
    // Z*Y^2 of the presentation.
    {
        const auto start = Clock::now();
        const hilbmon::HilbertData data = hilbmon::analyze(flagship);
        REQUIRE(!data.depth_positive, "depth of the graded ring must be zero");
        REQUIRE(data.depth_witness.has_value(), "a witness must accompany depth zero");
        REQUIRE(data.depth_witness->first == 3, "witness level must be 3");
        REQUIRE(data.depth_witness->second == 29, "witness exponent must be 29");
        REQUIRE(hilbmon::is_socle_witness(presentation, {0, 2, 1}),
                "Z*Y^2 must be a socle element of the tangent cone");
        const long long elapsed = ms_since(start);
        REQUIRE(elapsed < 1000, "criterion 2 must finish within 1 s");
        pass(2, "depth zero with witness level 3, exponent 29 and socle Z*Y^2",
             elapsed);
    }

    // Criterion 3: h-polynomial identities for the worked example.
    {
        const auto start = Clock::now();
        const hilbmon::HilbertData data = hilbmon::analyze(flagship);
        REQUIRE(data.h_coeffs == (std::vector<int>{1, 2, 1, 1, 0, 1}),
                "h-coefficients must be 1,2,1,1,0,1");
        int at_one = 0;
        for (int c : data.h_coeffs) {
            REQUIRE(c >= 0, "every h-coefficient must be non-negative");
            at_one += c;
        }
        REQUIRE(at_one == 6 && data.e0 == 6, "h(1) must equal e0 = 6");
        REQUIRE(data.h_coeffs.front() == 1 && data.mu == 1, "h0 must equal mu = 1");
        pass(3, "h = [1,2,1,1,0,1] with h(1) = e0 = 6 and h0 = mu = 1",
             ms_since(start));
    }

    // Criterion 4: the theorem conclusion over every relative ideal of
    // <6,7,15> generated within [0, 29].
    {
        const auto start = Clock::now();
        const hilbmon::ScanResult result =
            hilbmon::sweep_theorem_conclusion(flagship, 29, 4);
        REQUIRE(result.summary.instances == 104,
                "the window must contain exactly 104 ideals");
        REQUIRE(result.findings.empty(), "no ideal may violate the conclusion");
        for (const hilbmon::RelativeIdeal& e : hilbmon::enumerate_ideals(flagship, 29))
            touched.insert({flagship.minimal_generators(), e.generators()});
        const long long elapsed = ms_since(start);
        REQUIRE(elapsed < 60000, "criterion 4 must finish within 60 s");
        pass(4, "all 104 ideals of <6,7,15> monotone with non-negative h", elapsed);
    }

    // Criterion 5: every semigroup ring of embedding dimension at most three
    // with Frobenius number at most 25 has a non-decreasing Hilbert function.
    {
        const auto start = Clock::now();
        hilbmon::ScanBounds bounds;
        bounds.max_frobenius = 25;
        bounds.embdim_le_3 = true;
        const hilbmon::ScanResult result =
            hilbmon::scan(bounds, hilbmon::scan_checks({"monotone"}), 4);
        REQUIRE(result.findings.empty(), "no monotonicity finding is allowed");
        REQUIRE(result.summary.semigroups > 0, "the scan must cover semigroups");
        std::uint64_t rings = 0;
        for (const hilbmon::NumericalSemigroup& s :
             hilbmon::enumerate_semigroups(bounds)) {
            touched.insert({s.minimal_generators(), {0}});
            ++rings;
        }
        REQUIRE(rings == result.summary.semigroups, "scan coverage must be exhaustive");
        const long long elapsed = ms_since(start);
        REQUIRE(elapsed < 60000, "criterion 5 must finish within 60 s");
        pass(5,
             "embdim <= 3, Frobenius <= 25: " +
                 std::to_string(result.summary.semigroups) +
                 " rings, zero monotonicity findings",
             elapsed);
    }

    // Criterion 6: Arf implies minimal multiplicity for every semigroup with
    // Frobenius number at most 20.
    {
        const auto start = Clock::now();
        hilbmon::ScanBounds bounds;
        bounds.max_frobenius = 20;
        const hilbmon::ScanResult result =
            hilbmon::scan(bounds, hilbmon::scan_checks({"arf_implies_minmult"}), 4);
        REQUIRE(result.findings.empty(), "every Arf ring must have minimal multiplicity");
        for (const hilbmon::NumericalSemigroup& s :
             hilbmon::enumerate_semigroups(bounds))
            touched.insert({s.minimal_generators(), {0}});
        const long long elapsed = ms_since(start);
        REQUIRE(elapsed < 30000, "criterion 6 must finish within 30 s");
        pass(6,
             "Frobenius <= 20: Arf implies minimal multiplicity on " +
                 std::to_string(result.summary.semigroups) + " rings",
             elapsed);
    }

    // Criterion 7: the maximal embedding dimension family <e, ..., 2e-1>.
    {
        const auto start = Clock::now();
        for (int e = 2; e <= 8; ++e) {
            std::vector<int> gens;
            for (int g = e; g < 2 * e; ++g) gens.push_back(g);
            const hilbmon::NumericalSemigroup s(gens);
            const hilbmon::HilbertData data = hilbmon::analyze(s);
            REQUIRE(data.h_coeffs == (std::vector<int>{1, e - 1}),
                    "h must be [1, e-1] for e = " + std::to_string(e));
            REQUIRE(data.depth_positive,
                    "depth must be positive for e = " + std::to_string(e));
            touched.insert({s.minimal_generators(), {0}});
        }
        pass(7, "family <e,...,2e-1> for e = 2..8: h = [1, e-1], positive depth",
             ms_since(start));
    }

    // Criterion 8: every symmetric semigroup with Frobenius number at most 30
    // has a non-decreasing Hilbert function.
    {
        const auto start = Clock::now();
        hilbmon::ScanBounds bounds;
        bounds.max_frobenius = 30;
        bounds.symmetric_only = true;
        const hilbmon::ScanResult result =
            hilbmon::scan(bounds, hilbmon::scan_checks({"monotone"}), 4);
        REQUIRE(result.findings.empty(), "no symmetric ring may be non-monotone");
        for (const hilbmon::NumericalSemigroup& s :
             hilbmon::enumerate_semigroups(bounds))
            touched.insert({s.minimal_generators(), {0}});
        const long long elapsed = ms_since(start);
        REQUIRE(elapsed < 120000, "criterion 8 must finish within 120 s");
        pass(8,
             "symmetric, Frobenius <= 30: " +
                 std::to_string(result.summary.semigroups) +
                 " rings, zero monotonicity findings",
             elapsed);
    }

    // Criterion 9: structural laws on every instance the exhaustive criteria
    // touched: positive depth forces monotonicity, the reduction number is at
    // most Frobenius + 1, the filtration persists as a plain shift for
    // r <= n <= r+5 with the stable value e0, and h0 = mu.
    {
        const auto start = Clock::now();
        for (const auto& [gens, offsets] : touched) {
            const hilbmon::NumericalSemigroup s(gens);
            const hilbmon::RelativeIdeal e(s, offsets);
            const hilbmon::HilbertData data = hilbmon::analyze(s, e);
            const auto table = hilbmon::filtration(s, e);

            REQUIRE(!data.depth_positive || data.monotone,
                    "positive depth must force monotonicity");
            REQUIRE(data.reduction_number <= s.frobenius() + 1,
                    "reduction number must be at most Frobenius + 1");
            REQUIRE(data.h_coeffs.front() == data.mu, "h0 must equal mu");
            REQUIRE(data.H.back() == data.e0, "the stable H value must equal e0");

            const hilbmon::ValuationSet maxideal = hilbmon::maximal_ideal_values(s);
            std::vector<hilbmon::ValuationSet> levels = table.levels;
            while (static_cast<int>(levels.size()) < data.reduction_number + 7)
                levels.push_back(hilbmon::sumset(maxideal, levels.back()));
            for (int n = data.reduction_number; n <= data.reduction_number + 5; ++n) {
                const auto& t_n = levels[static_cast<std::size_t>(n)];
                const auto& t_next = levels[static_cast<std::size_t>(n) + 1];
                REQUIRE(t_next == t_n.translated(s.multiplicity()),
                        "levels past the reduction number must be plain shifts");
                REQUIRE(hilbmon::difference_count(t_n, t_next) == data.e0,
                        "the level difference must stay at e0");
            }
        }
        pass(9,
             "structural suite over " + std::to_string(touched.size()) +
                 " unique instances: zero exceptions",
             ms_since(start));
    }

    // Criterion 10: the criterion-4 sweep serializes to byte-identical JSONL
    // with 1 worker and with 8 workers.
    {
        const auto start = Clock::now();
        const std::string path_one = "acceptance_sweep_jobs1.jsonl";
        const std::string path_eight = "acceptance_sweep_jobs8.jsonl";
        std::ostringstream out, err;
        REQUIRE(hilbmon::cli::run({"sweep", "--gens", "6,7,15", "--ideal-window", "29",
                                   "--jobs", "1", "--out", path_one},
                                  out, err) == 0,
                "single-worker sweep must exit 0");
        REQUIRE(hilbmon::cli::run({"sweep", "--gens", "6,7,15", "--ideal-window", "29",
                                   "--jobs", "8", "--out", path_eight},
                                  out, err) == 0,
                "eight-worker sweep must exit 0");
        const std::string one = slurp(path_one);
        const std::string eight = slurp(path_eight);
        REQUIRE(!one.empty(), "sweep output must not be empty");
        REQUIRE(one == eight, "JSONL output must not depend on the worker count");
        std::remove(path_one.c_str());
        std::remove(path_eight.c_str());
        pass(10, "sweep JSONL byte-identical across 1 and 8 workers", ms_since(start));
    }

    std::cout << "all 10 criteria passed\n";
    return 0;
}
