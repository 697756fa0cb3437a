#pragma once

// JSON serialization. Objects are rendered with sorted keys (the library's
// default), so dumping is canonical: parse + dump round-trips byte-identically
// and scan output does not depend on the worker count.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hilbmon/explorer.hpp"
#include "hilbmon/hilbert.hpp"
#include "hilbmon/relative_ideal.hpp"
#include "hilbmon/semigroup.hpp"

namespace hilbmon {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json hilbert_json(const std::vector<int>& gens,
                                   const std::vector<int>& ideal,
                                   const HilbertData& d) {
    nlohmann::json j;
    j["gens"] = gens;
    j["ideal"] = ideal;
    j["H"] = d.H;
    j["h"] = d.h_coeffs;
    j["e0"] = d.e0;
    j["e1"] = d.e1;
    j["reduction"] = d.reduction_number;
    j["mu"] = d.mu;
    j["monotone"] = d.monotone;
    j["first_violation"] =
        d.first_violation ? nlohmann::json(*d.first_violation) : nlohmann::json(nullptr);
    j["depth_positive"] = d.depth_positive;
    j["depth_witness"] = d.depth_witness
                             ? nlohmann::json::array(
                                   {d.depth_witness->first, d.depth_witness->second})
                             : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json hilbert_json(const NumericalSemigroup& s, const RelativeIdeal& e,
                                   const HilbertData& d) {
    return hilbert_json(s.minimal_generators(), e.generators(), d);
}

inline nlohmann::json bounds_json(const ScanBounds& b) {
    nlohmann::json j = nlohmann::json::object();
    if (b.max_frobenius) j["max_frobenius"] = *b.max_frobenius;
    if (b.max_genus) j["max_genus"] = *b.max_genus;
    if (b.max_embdim) j["max_embdim"] = *b.max_embdim;
    if (b.min_embdim) j["min_embdim"] = *b.min_embdim;
    if (b.ideal_window) j["ideal_window"] = *b.ideal_window;
    if (b.symmetric_only) j["symmetric_only"] = true;
    if (b.arf_only) j["arf_only"] = true;
    if (b.min_mult_only) j["min_mult_only"] = true;
    if (b.embdim_le_3) j["embdim_le_3"] = true;
    return j;
}

inline nlohmann::json finding_record(const Finding& f) {
    nlohmann::json j;
    j["type"] = "finding";
    j["kind"] = to_string(f.kind);
    j["gens"] = f.gens;
    j["ideal"] = f.ideal ? nlohmann::json(*f.ideal) : nlohmann::json(nullptr);
    j["data"] = hilbert_json(f.gens, f.ideal.value_or(std::vector<int>{0}), f.data);
    return j;
}

// Wall time is intentionally absent: two runs of the same scan must serialize
// to identical bytes regardless of worker count or machine load.
inline nlohmann::json summary_record(const nlohmann::json& bounds,
                                     const ScanSummary& summary) {
    nlohmann::json j;
    j["type"] = "summary";
    j["schema_version"] = kSchemaVersion;
    j["bounds"] = bounds;
    j["semigroups"] = summary.semigroups;
    j["instances"] = summary.instances;
    j["findings"] = summary.findings;
    j["max_reduction"] = summary.max_reduction;
    return j;
}

// One finding per line, canonical order, summary record last.
inline std::string render_jsonl(const ScanResult& result, const nlohmann::json& bounds) {
    std::string out;
    for (const Finding& f : result.findings) {
        out += finding_record(f).dump();
        out += '\n';
    }
    out += summary_record(bounds, result.summary).dump();
    out += '\n';
    return out;
}

}  // namespace hilbmon
