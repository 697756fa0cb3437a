#pragma once

// Command-line front end. Exit codes: 0 success (and no findings), 1 findings
// or a fixture/crosscheck mismatch, 2 usage or input errors.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hilbmon/errors.hpp"
#include "hilbmon/explorer.hpp"
#include "hilbmon/graded.hpp"
#include "hilbmon/hilbert.hpp"
#include "hilbmon/json_io.hpp"
#include "hilbmon/relative_ideal.hpp"
#include "hilbmon/semigroup.hpp"

namespace hilbmon::cli {

namespace detail {

inline int parse_int(std::string_view token, const char* what) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument(std::string("bad ") + what + ": '" +
                                    std::string(token) + "'");
    return value;
}

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string_view token(text.data() + pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        out.push_back(parse_int(token, what));
        pos = comma + 1;
    }
    return out;
}

inline MonomialIdeal parse_presentation(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        if (semi == std::string::npos) semi = text.size();
        rows.push_back(parse_int_list(text.substr(pos, semi - pos), "exponent"));
        pos = semi + 1;
    }
    if (rows.empty()) throw std::invalid_argument("empty presentation");
    const int num_vars = static_cast<int>(rows.front().size());
    return MonomialIdeal(num_vars, std::move(rows));
}

inline std::uint64_t safety_cap_from_env() {
    const char* env = std::getenv("HILBMON_SAFETY_CAP");
    if (!env || !*env) return kDefaultSafetyCap;
    std::uint64_t value = 0;
    const char* last = env + std::string_view(env).size();
    const auto [ptr, ec] = std::from_chars(env, last, value);
    if (ec != std::errc{} || ptr != last || value == 0)
        throw std::invalid_argument(
            "HILBMON_SAFETY_CAP must be a positive integer, got '" +
            std::string(env) + "'");
    return value;
}

inline std::string join(const std::vector<int>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

inline void print_hilbert(std::ostream& out, const NumericalSemigroup& s,
                          const RelativeIdeal& e, const HilbertData& d) {
    out << "gens        " << join(s.minimal_generators()) << "\n";
    out << "ideal       " << join(e.generators()) << "\n";
    out << "H           " << join(d.H, " ") << "  (constant " << d.H.back()
        << " from n = " << d.reduction_number << " on)\n";
    out << "h           " << join(d.h_coeffs, " ") << "\n";
    out << "e0          " << d.e0 << "\n";
    out << "e1          " << d.e1 << "\n";
    out << "reduction   " << d.reduction_number << "\n";
    out << "mu          " << d.mu << "\n";
    out << "monotone    " << yesno(d.monotone);
    if (d.first_violation) out << "  (first violation at n = " << *d.first_violation << ")";
    out << "\n";
    out << "depth > 0   " << yesno(d.depth_positive);
    if (d.depth_witness)
        out << "  (witness: level " << d.depth_witness->first << ", exponent "
            << d.depth_witness->second << ")";
    out << "\n";
}

inline void print_findings(std::ostream& out, const std::vector<Finding>& findings) {
    for (const Finding& f : findings) {
        out << "[" << to_string(f.kind) << "] gens=" << join(f.gens);
        if (f.ideal) out << " ideal=" << join(*f.ideal);
        out << " H=" << join(f.data.H, " ") << " h=" << join(f.data.h_coeffs, " ")
            << "\n";
    }
}

inline void print_summary(std::ostream& out, const ScanSummary& s) {
    out << "semigroups " << s.semigroups << ", instances " << s.instances
        << ", findings " << s.findings << ", max reduction " << s.max_reduction
        << ", elapsed " << s.elapsed_ms << " ms\n";
}

inline int emit_scan_result(std::ostream& out, std::ostream& err,
                            const ScanResult& result, const nlohmann::json& bounds,
                            bool as_json, const std::string& out_path) {
    const std::string jsonl = render_jsonl(result, bounds);
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << out_path << "\n";
            return 2;
        }
        file << jsonl;
    }
    if (as_json) {
        out << jsonl;
    } else {
        print_findings(out, result.findings);
        print_summary(out, result.summary);
    }
    return result.findings.empty() ? 0 : 1;
}

// One fixture case: recompute everything and compare the fields given.
// Returns the failure message, or nothing on pass.
inline std::optional<std::string> check_fixture_case(const nlohmann::json& record) {
    if (!record.is_object()) return "record is not an object";
    if (!record.contains("gens")) return "missing field 'gens'";
    const std::vector<int> gens = record.at("gens").get<std::vector<int>>();
    const NumericalSemigroup s(gens);
    const RelativeIdeal e =
        record.contains("ideal")
            ? RelativeIdeal(s, record.at("ideal").get<std::vector<int>>())
            : ring_ideal(s);
    const HilbertData data = analyze(s, e);
    const nlohmann::json computed = hilbert_json(s, e, data);
    const int upto = record.value("upto", 20);

    std::optional<MonomialIdeal> ideal;
    if (record.contains("presentation"))
        ideal.emplace(
            static_cast<int>(record.at("presentation").at(0).size()),
            record.at("presentation").get<std::vector<std::vector<int>>>());

    if (record.contains("expect")) {
        const nlohmann::json& expect = record.at("expect");
        if (!expect.is_object()) return "field 'expect' is not an object";
        for (const auto& [key, value] : expect.items()) {
            if (key == "socle") {
                if (!ideal) throw std::invalid_argument(
                    "expect.socle needs a presentation");
                if (!is_socle_witness(*ideal, value.get<std::vector<int>>()))
                    return "field socle: " + value.dump() + " is not a socle element";
                continue;
            }
            if (!computed.contains(key))
                throw std::invalid_argument("unknown expect field '" + key + "'");
            if (computed.at(key) != value)
                return "field " + key + ": expected " + value.dump() + ", computed " +
                       computed.at(key).dump();
        }
    }
    if (ideal) {
        const CrosscheckReport report = crosscheck_presentation(s, *ideal, upto);
        if (!report.equal)
            return "presentation mismatch at degree " +
                   std::to_string(*report.first_mismatch);
    }
    return std::nullopt;
}

inline int run_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream file(path);
    if (!file) {
        err << "error: cannot read " << path << "\n";
        return 2;
    }
    std::string line;
    int line_no = 0, cases = 0, failures = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++cases;
        std::optional<std::string> failure;
        try {
            failure = check_fixture_case(nlohmann::json::parse(line));
        } catch (const std::exception& parse_error) {
            err << "error: line " << line_no << ": " << parse_error.what() << "\n";
            return 2;
        }
        std::string label = "line " + std::to_string(line_no);
        if (failure) {
            ++failures;
            out << "[FAIL] " << label << ": " << *failure << "\n";
        } else {
            out << "[PASS] " << label << "\n";
        }
    }
    if (cases == 0) {
        out << "[WARN] no fixture cases found; vacuous pass\n";
        return 0;
    }
    out << (cases - failures) << "/" << cases << " fixtures passed\n";
    return failures > 0 ? 1 : 0;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert functions of numerical semigroup rings and their modules"};
    app.name("hilbmon");
    app.require_subcommand(1);

    std::string gens_text, ideal_text, presentation_text, out_path, fixture_path;
    int upto = 20, jobs = 1;
    bool as_json = false;
    ScanBounds bounds;

    CLI::App* info = app.add_subcommand("info", "invariants of a numerical semigroup");
    info->add_option("--gens", gens_text, "comma-separated generators")->required();
    info->add_flag("--json", as_json, "emit JSON");

    CLI::App* hilbert = app.add_subcommand(
        "hilbert", "Hilbert function and h-polynomial of a ring or module");
    hilbert->add_option("--gens", gens_text, "comma-separated generators")->required();
    hilbert->add_option("--ideal", ideal_text, "comma-separated ideal offsets");
    hilbert->add_flag("--json", as_json, "emit JSON");

    CLI::App* depth = app.add_subcommand(
        "depth", "depth of the associated graded module, with witness");
    depth->add_option("--gens", gens_text, "comma-separated generators")->required();
    depth->add_option("--ideal", ideal_text, "comma-separated ideal offsets");
    depth->add_flag("--json", as_json, "emit JSON");

    CLI::App* monomial = app.add_subcommand(
        "monomial-hf", "Hilbert function of a quotient by a monomial ideal");
    monomial
        ->add_option("--presentation", presentation_text,
                     "generators as exponent rows, e.g. '1,0,1;0,6,0'")
        ->required();
    monomial->add_option("--upto", upto, "largest degree (default 20)");
    monomial->add_flag("--json", as_json, "emit JSON");

    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "compare the filtration route with a tangent-cone presentation");
    crosscheck->add_option("--gens", gens_text, "comma-separated generators")->required();
    crosscheck
        ->add_option("--presentation", presentation_text,
                     "generators as exponent rows, e.g. '1,0,1;0,6,0'")
        ->required();
    crosscheck->add_option("--upto", upto, "largest degree compared (default 20)");
    crosscheck->add_flag("--json", as_json, "emit JSON");

    CLI::App* scan_cmd = app.add_subcommand(
        "scan", "analyze every semigroup (and optionally ideal) within bounds");
    scan_cmd->add_option("--max-frobenius", bounds.max_frobenius, "Frobenius bound");
    scan_cmd->add_option("--max-genus", bounds.max_genus, "genus bound");
    scan_cmd->add_option("--embdim-max", bounds.max_embdim, "embedding dimension cap");
    scan_cmd->add_option("--embdim-min", bounds.min_embdim, "embedding dimension floor");
    scan_cmd->add_option("--ideal-window", bounds.ideal_window,
                         "also analyze every ideal generated within [0, window]");
    scan_cmd->add_flag("--symmetric-only", bounds.symmetric_only,
                       "only symmetric semigroups");
    scan_cmd->add_flag("--arf-only", bounds.arf_only, "only Arf semigroups");
    scan_cmd->add_flag("--min-mult-only", bounds.min_mult_only,
                       "only minimal-multiplicity semigroups");
    scan_cmd->add_option("--jobs", jobs, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    scan_cmd->add_option("--out", out_path, "write findings + summary as JSONL");
    scan_cmd->add_flag("--json", as_json, "emit JSONL on stdout");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "check the monotonicity conclusion over every ideal of one semigroup");
    sweep->add_option("--gens", gens_text, "comma-separated generators")->required();
    sweep->add_option("--ideal-window", bounds.ideal_window, "generator window")
        ->required();
    sweep->add_option("--jobs", jobs, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_path, "write findings + summary as JSONL");
    sweep->add_flag("--json", as_json, "emit JSONL on stdout");

    CLI::App* verify = app.add_subcommand(
        "verify", "recompute JSONL fixtures and compare the expected fields");
    verify->add_option("fixture", fixture_path, "JSONL fixture file")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const std::uint64_t cap = detail::safety_cap_from_env();

        if (app.got_subcommand(info)) {
            const NumericalSemigroup s(detail::parse_int_list(gens_text, "generator"));
            if (as_json) {
                nlohmann::json j;
                j["gens"] = s.minimal_generators();
                j["multiplicity"] = s.multiplicity();
                j["embdim"] = s.embedding_dimension();
                j["frobenius"] = s.frobenius();
                j["conductor"] = s.conductor();
                j["genus"] = s.genus();
                j["apery"] = s.apery_set(s.multiplicity());
                j["symmetric"] = s.is_symmetric();
                j["arf"] = s.is_arf();
                j["min_mult"] = s.has_minimal_multiplicity();
                out << j.dump() << "\n";
            } else {
                out << "gens         " << detail::join(s.minimal_generators()) << "\n";
                out << "multiplicity " << s.multiplicity() << "\n";
                out << "embdim       " << s.embedding_dimension() << "\n";
                out << "frobenius    " << s.frobenius() << "\n";
                out << "conductor    " << s.conductor() << "\n";
                out << "genus        " << s.genus() << "\n";
                out << "apery        " << detail::join(s.apery_set(s.multiplicity()))
                    << "\n";
                out << "symmetric    " << detail::yesno(s.is_symmetric()) << "\n";
                out << "arf          " << detail::yesno(s.is_arf()) << "\n";
                out << "min mult     " << detail::yesno(s.has_minimal_multiplicity())
                    << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(hilbert) || app.got_subcommand(depth)) {
            const NumericalSemigroup s(detail::parse_int_list(gens_text, "generator"));
            const RelativeIdeal e =
                ideal_text.empty()
                    ? ring_ideal(s)
                    : RelativeIdeal(s, detail::parse_int_list(ideal_text, "offset"));
            const HilbertData data = analyze(s, e);
            if (app.got_subcommand(hilbert)) {
                if (as_json)
                    out << hilbert_json(s, e, data).dump() << "\n";
                else
                    detail::print_hilbert(out, s, e, data);
            } else {
                if (as_json) {
                    nlohmann::json j;
                    j["depth_positive"] = data.depth_positive;
                    j["depth_witness"] =
                        data.depth_witness
                            ? nlohmann::json::array({data.depth_witness->first,
                                                     data.depth_witness->second})
                            : nlohmann::json(nullptr);
                    j["reduction"] = data.reduction_number;
                    out << j.dump() << "\n";
                } else {
                    out << "depth > 0   " << detail::yesno(data.depth_positive);
                    if (data.depth_witness)
                        out << "  (witness: level " << data.depth_witness->first
                            << ", exponent " << data.depth_witness->second << ")";
                    out << "\n";
                }
            }
            return 0;
        }

        if (app.got_subcommand(monomial)) {
            const MonomialIdeal ideal = detail::parse_presentation(presentation_text);
            std::vector<int> values;
            for (int n = 0; n <= upto; ++n) values.push_back(monomial_hf(ideal, n));
            if (as_json)
                out << nlohmann::json(values).dump() << "\n";
            else
                out << detail::join(values, " ") << "\n";
            return 0;
        }

        if (app.got_subcommand(crosscheck)) {
            const NumericalSemigroup s(detail::parse_int_list(gens_text, "generator"));
            const MonomialIdeal ideal = detail::parse_presentation(presentation_text);
            const CrosscheckReport report = crosscheck_presentation(s, ideal, upto);
            if (as_json) {
                nlohmann::json j;
                j["equal"] = report.equal;
                j["first_mismatch"] = report.first_mismatch
                                          ? nlohmann::json(*report.first_mismatch)
                                          : nlohmann::json(nullptr);
                j["filtration"] = report.filtration_values;
                j["monomial"] = report.monomial_values;
                out << j.dump() << "\n";
            } else if (report.equal) {
                out << "equal through degree " << upto << ": "
                    << detail::join(report.filtration_values, " ") << "\n";
            } else {
                const std::size_t n = static_cast<std::size_t>(*report.first_mismatch);
                out << "mismatch at degree " << *report.first_mismatch << ": filtration "
                    << report.filtration_values[n] << ", monomial "
                    << report.monomial_values[n] << "\n";
            }
            return report.equal ? 0 : 1;
        }

        if (app.got_subcommand(scan_cmd)) {
            const ScanResult result = scan(bounds, ScanChecks::all(), jobs, cap);
            return detail::emit_scan_result(out, err, result, bounds_json(bounds),
                                            as_json, out_path);
        }

        if (app.got_subcommand(sweep)) {
            const NumericalSemigroup s(detail::parse_int_list(gens_text, "generator"));
            const ScanResult result =
                sweep_theorem_conclusion(s, *bounds.ideal_window, jobs, cap);
            nlohmann::json bj;
            bj["gens"] = s.minimal_generators();
            bj["ideal_window"] = *bounds.ideal_window;
            return detail::emit_scan_result(out, err, result, bj, as_json, out_path);
        }

        if (app.got_subcommand(verify))
            return detail::run_verify(fixture_path, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hilbmon::cli
