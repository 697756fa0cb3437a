#pragma once

// Enumeration and scanning. Semigroups are enumerated on the genus tree: the
// children of S are S minus one minimal generator above the Frobenius number,
// so every semigroup is reached exactly once from the naturals. Relative
// ideals of a fixed S correspond to the subsets of the gap set closed under
// adding members. Scans analyze every instance in scope and report findings;
// output order is canonical, so results do not depend on the worker count.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "hilbmon/errors.hpp"
#include "hilbmon/hilbert.hpp"
#include "hilbmon/relative_ideal.hpp"
#include "hilbmon/semigroup.hpp"

namespace hilbmon {

inline constexpr std::uint64_t kDefaultSafetyCap = 1'000'000;

struct ScanBounds {
    std::optional<int> max_frobenius;
    std::optional<int> max_genus;
    std::optional<int> max_embdim;
    std::optional<int> min_embdim;
    std::optional<int> ideal_window;
    bool symmetric_only = false;
    bool arf_only = false;
    bool min_mult_only = false;
    bool embdim_le_3 = false;
};

inline void validate(const ScanBounds& b) {
    if (!b.max_frobenius && !b.max_genus)
        throw std::invalid_argument("bounds need max_frobenius or max_genus");
    for (const auto& [value, name] :
         {std::pair{b.max_frobenius, "max_frobenius"}, {b.max_genus, "max_genus"},
          {b.max_embdim, "max_embdim"}, {b.min_embdim, "min_embdim"}})
        if (value && *value < 1)
            throw std::invalid_argument(std::string(name) + " must be positive");
    if (b.ideal_window && *b.ideal_window < 0)
        throw std::invalid_argument("ideal_window must be >= 0");
}

// Every semigroup within the bounds, each exactly once, ordered by genus and
// then lexicographically by gap set.
inline std::vector<NumericalSemigroup> enumerate_semigroups(
    const ScanBounds& bounds, std::uint64_t safety_cap = kDefaultSafetyCap) {
    validate(bounds);
    // Frobenius never exceeds 2*genus - 1, so either bound closes the tree.
    const int frob_limit = bounds.max_frobenius
                               ? *bounds.max_frobenius
                               : std::max(1, 2 * *bounds.max_genus - 1);
    const int genus_limit =
        bounds.max_genus ? *bounds.max_genus : frob_limit;  // genus <= frobenius

    struct Node {
        std::vector<char> gap;  // gap flags on [0, frobenius]; empty for the naturals
        int frobenius;
        int genus;
    };
    const auto member = [](const Node& n, int x) {
        return x >= 0 && (x > n.frobenius || !n.gap[static_cast<std::size_t>(x)]);
    };

    std::vector<std::pair<std::vector<int>, NumericalSemigroup>> found;
    std::uint64_t visited = 0;
    std::vector<Node> stack;
    stack.push_back(Node{{}, -1, 0});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (++visited > safety_cap)
            throw BoundsTooLarge("enumeration exceeds the safety cap of " +
                                 std::to_string(safety_cap) + " semigroups");
        std::vector<int> gaps;
        for (int x = 1; x <= node.frobenius; ++x)
            if (node.gap[static_cast<std::size_t>(x)]) gaps.push_back(x);
        NumericalSemigroup s = NumericalSemigroup::from_gaps(gaps);

        bool keep = true;
        if (bounds.max_embdim && s.embedding_dimension() > *bounds.max_embdim)
            keep = false;
        if (keep && bounds.embdim_le_3 && s.embedding_dimension() > 3) keep = false;
        if (keep && bounds.min_embdim && s.embedding_dimension() < *bounds.min_embdim)
            keep = false;
        if (keep && bounds.symmetric_only && !s.is_symmetric()) keep = false;
        if (keep && bounds.min_mult_only && !s.has_minimal_multiplicity()) keep = false;
        if (keep && bounds.arf_only && !s.is_arf()) keep = false;
        if (keep) found.emplace_back(std::move(gaps), std::move(s));

        if (node.genus + 1 > genus_limit) continue;
        int mult = 1;
        while (!member(node, mult)) ++mult;
        // Children: remove a minimal generator above the Frobenius number. All
        // minimal generators lie in {mult} U (mult, frobenius + mult].
        const auto try_child = [&](int g) {
            if (g <= node.frobenius || g > frob_limit) return;
            for (int y = mult; y <= g - mult; ++y)
                if (member(node, y) && member(node, g - y)) return;  // not minimal
            Node child;
            child.gap.assign(static_cast<std::size_t>(g) + 1, 0);
            for (int x = 1; x <= node.frobenius; ++x)
                child.gap[static_cast<std::size_t>(x)] =
                    node.gap[static_cast<std::size_t>(x)];
            child.gap[static_cast<std::size_t>(g)] = 1;
            child.frobenius = g;
            child.genus = node.genus + 1;
            stack.push_back(std::move(child));
        };
        if (mult > node.frobenius) try_child(mult);
        for (int g = std::max(node.frobenius, mult) + 1; g <= node.frobenius + mult; ++g)
            try_child(g);
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<NumericalSemigroup> out;
    out.reserve(found.size());
    for (auto& [gaps, s] : found) out.push_back(std::move(s));
    return out;
}

// Every relative ideal of s (up to translation) whose minimal generators all
// lie in [0, window], deduplicated by closure and ordered lexicographically by
// canonical generator list. Ideals containing s correspond to the subsets of
// the gap set closed under adding members.
inline std::vector<RelativeIdeal> enumerate_ideals(
    const NumericalSemigroup& s, int window,
    std::uint64_t safety_cap = kDefaultSafetyCap) {
    if (window < 0) throw std::invalid_argument("window must be >= 0");
    const std::vector<int> gaps = s.gaps();
    const int g = static_cast<int>(gaps.size());
    if (g >= 63 || (std::uint64_t{1} << g) > safety_cap)
        throw BoundsTooLarge("2^" + std::to_string(g) +
                             " candidate ideals exceed the safety cap of " +
                             std::to_string(safety_cap));
    // required[i]: gaps forced into the subset once gaps[i] is in (gap + member).
    std::vector<std::uint64_t> required(static_cast<std::size_t>(g), 0);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (gaps[static_cast<std::size_t>(j)] > gaps[static_cast<std::size_t>(i)] &&
                s.contains(gaps[static_cast<std::size_t>(j)] -
                           gaps[static_cast<std::size_t>(i)]))
                required[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;

    std::vector<RelativeIdeal> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        bool closed = true;
        for (std::uint64_t m = mask; m && closed; m &= m - 1) {
            const int i = std::countr_zero(m);
            if (required[static_cast<std::size_t>(i)] & ~mask) closed = false;
        }
        if (!closed) continue;
        std::vector<int> offsets{0};
        for (int i = 0; i < g; ++i)
            if (mask >> i & 1) offsets.push_back(gaps[static_cast<std::size_t>(i)]);
        RelativeIdeal ideal(s, std::move(offsets));
        if (ideal.generators().back() <= window) out.push_back(std::move(ideal));
    }
    std::sort(out.begin(), out.end(), [](const RelativeIdeal& a, const RelativeIdeal& b) {
        return a.generators() < b.generators();
    });
    return out;
}

enum class FindingKind { nonmonotone, h_negative, depth_zero_monotone, property_violation };

inline const char* to_string(FindingKind k) {
    switch (k) {
        case FindingKind::nonmonotone: return "nonmonotone";
        case FindingKind::h_negative: return "h_negative";
        case FindingKind::depth_zero_monotone: return "depth_zero_monotone";
        case FindingKind::property_violation: return "property_violation";
    }
    return "unknown";
}

struct Finding {
    std::vector<int> gens;                  // minimal generators of the semigroup
    std::optional<std::vector<int>> ideal;  // canonical ideal generators; empty = ring
    FindingKind kind = FindingKind::nonmonotone;
    HilbertData data;

    bool operator==(const Finding&) const = default;
};

struct ScanChecks {
    bool monotone = false;
    bool h_nonneg = false;
    bool arf_implies_minmult = false;
    bool depth_implies_monotone = false;

    static ScanChecks all() { return {true, true, true, true}; }
};

inline ScanChecks scan_checks(std::initializer_list<std::string_view> names) {
    ScanChecks c;
    for (std::string_view n : names) {
        if (n == "monotone") c.monotone = true;
        else if (n == "h_nonneg") c.h_nonneg = true;
        else if (n == "arf_implies_minmult") c.arf_implies_minmult = true;
        else if (n == "depth_implies_monotone") c.depth_implies_monotone = true;
        else throw std::invalid_argument("unknown check: " + std::string(n));
    }
    return c;
}

struct ScanSummary {
    std::uint64_t semigroups = 0;
    std::uint64_t instances = 0;
    std::uint64_t findings = 0;
    int max_reduction = 0;
    long long elapsed_ms = 0;  // reported on stdout only, never serialized
};

struct ScanResult {
    ScanSummary summary;
    std::vector<Finding> findings;
};

namespace detail {

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(i);
        });
    for (std::thread& t : pool) t.join();
}

// Canonical finding order: semigroup genus, gap set, ideal generators, kind.
inline void sort_findings(std::vector<Finding>& findings) {
    struct Keyed {
        int genus;
        std::vector<int> gaps;
        std::vector<int> ideal;
        int kind;
        std::size_t index;
    };
    std::vector<Keyed> keys;
    keys.reserve(findings.size());
    for (std::size_t i = 0; i < findings.size(); ++i) {
        const NumericalSemigroup s(findings[i].gens);
        keys.push_back(Keyed{s.genus(), s.gaps(),
                             findings[i].ideal.value_or(std::vector<int>{0}),
                             static_cast<int>(findings[i].kind), i});
    }
    std::sort(keys.begin(), keys.end(), [](const Keyed& a, const Keyed& b) {
        return std::tie(a.genus, a.gaps, a.ideal, a.kind) <
               std::tie(b.genus, b.gaps, b.ideal, b.kind);
    });
    std::vector<Finding> sorted;
    sorted.reserve(findings.size());
    for (const Keyed& k : keys) sorted.push_back(std::move(findings[k.index]));
    findings = std::move(sorted);
}

struct InstanceReport {
    std::vector<Finding> findings;
    std::uint64_t instances = 0;
    int max_reduction = 0;
};

inline void apply_instance_checks(const ScanChecks& checks,
                                  const std::vector<int>& gens,
                                  const std::optional<std::vector<int>>& ideal,
                                  const HilbertData& data, InstanceReport& report) {
    ++report.instances;
    report.max_reduction = std::max(report.max_reduction, data.reduction_number);
    const auto emit = [&](FindingKind kind) {
        report.findings.push_back(Finding{gens, ideal, kind, data});
    };
    if (checks.monotone && !data.monotone) emit(FindingKind::nonmonotone);
    if (checks.h_nonneg &&
        std::any_of(data.h_coeffs.begin(), data.h_coeffs.end(),
                    [](int c) { return c < 0; }))
        emit(FindingKind::h_negative);
    if (checks.depth_implies_monotone && data.depth_positive && !data.monotone)
        emit(FindingKind::depth_zero_monotone);
}

}  // namespace detail

inline ScanResult scan(const ScanBounds& bounds, const ScanChecks& checks,
                       int jobs = 1, std::uint64_t safety_cap = kDefaultSafetyCap) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<NumericalSemigroup> sems = enumerate_semigroups(bounds, safety_cap);
    std::vector<detail::InstanceReport> reports(sems.size());
    detail::parallel_for(sems.size(), jobs, [&](std::size_t i) {
        const NumericalSemigroup& s = sems[i];
        detail::InstanceReport& report = reports[i];
        if (bounds.ideal_window) {
            for (const RelativeIdeal& e :
                 enumerate_ideals(s, *bounds.ideal_window, safety_cap))
                detail::apply_instance_checks(checks, s.minimal_generators(),
                                              e.generators(), analyze(s, e), report);
        } else {
            detail::apply_instance_checks(checks, s.minimal_generators(), std::nullopt,
                                          analyze(s), report);
        }
        if (checks.arf_implies_minmult && s.is_arf() && !s.has_minimal_multiplicity())
            report.findings.push_back(Finding{s.minimal_generators(), std::nullopt,
                                              FindingKind::property_violation,
                                              analyze(s)});
    });
    ScanResult result;
    result.summary.semigroups = sems.size();
    for (detail::InstanceReport& r : reports) {
        result.summary.instances += r.instances;
        result.summary.max_reduction =
            std::max(result.summary.max_reduction, r.max_reduction);
        for (Finding& f : r.findings) result.findings.push_back(std::move(f));
    }
    detail::sort_findings(result.findings);
    result.summary.findings = result.findings.size();
    result.summary.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
    return result;
}

// The conclusion of the monotonicity statement, checked over every relative
// ideal of s with generators in [0, window]: the Hilbert function must be
// non-decreasing and the h-coefficients non-negative with h_0 = mu.
inline ScanResult sweep_theorem_conclusion(const NumericalSemigroup& s, int window,
                                           int jobs = 1,
                                           std::uint64_t safety_cap = kDefaultSafetyCap) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<RelativeIdeal> ideals = enumerate_ideals(s, window, safety_cap);
    std::vector<detail::InstanceReport> reports(ideals.size());
    const ScanChecks checks = scan_checks({"monotone", "h_nonneg"});
    detail::parallel_for(ideals.size(), jobs, [&](std::size_t i) {
        const RelativeIdeal& e = ideals[i];
        const HilbertData data = analyze(s, e);
        detail::apply_instance_checks(checks, s.minimal_generators(), e.generators(),
                                      data, reports[i]);
        if (data.h_coeffs.front() != data.mu)
            reports[i].findings.push_back(Finding{s.minimal_generators(), e.generators(),
                                                  FindingKind::property_violation, data});
    });
    ScanResult result;
    result.summary.semigroups = 1;
    for (detail::InstanceReport& r : reports) {
        result.summary.instances += r.instances;
        result.summary.max_reduction =
            std::max(result.summary.max_reduction, r.max_reduction);
        for (Finding& f : r.findings) result.findings.push_back(std::move(f));
    }
    detail::sort_findings(result.findings);
    result.summary.findings = result.findings.size();
    result.summary.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
    return result;
}

// A finding must be reproducible from its generators alone.
inline bool reverify(const Finding& f) {
    const NumericalSemigroup s(f.gens);
    const RelativeIdeal e = f.ideal ? RelativeIdeal(s, *f.ideal) : ring_ideal(s);
    const HilbertData data = analyze(s, e);
    if (!(data == f.data)) return false;
    switch (f.kind) {
        case FindingKind::nonmonotone: return !data.monotone;
        case FindingKind::h_negative:
            return std::any_of(data.h_coeffs.begin(), data.h_coeffs.end(),
                               [](int c) { return c < 0; });
        case FindingKind::depth_zero_monotone:
            return data.depth_positive && !data.monotone;
        case FindingKind::property_violation:
            return (s.is_arf() && !s.has_minimal_multiplicity()) ||
                   data.h_coeffs.front() != data.mu;
    }
    return false;
}

}  // namespace hilbmon
