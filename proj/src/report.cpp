#include "clawcycle/report.hpp"

#include <iomanip>

#include "clawcycle/textio.hpp"

namespace clawcycle {

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j = {
        {"check_name", r.check_name},
        {"universe_size", r.universe_size},
        {"passed", r.passed},
        {"failed", r.failed},
        {"counterexamples", r.counterexamples},
        {"wall_time", r.wall_time},
        {"worker_count", r.worker_count},
        {"deterministic_digest", r.deterministic_digest},
        {"informational", r.informational},
    };
    j["counters"] = nlohmann::json::object();
    for (const auto& [k, v] : r.counters) j["counters"][k] = v;
    j["findings"] = r.findings;
    return j;
}

nlohmann::json to_json(const ExtremalResult& r) {
    return {
        {"dim", r.dim},
        {"forbidden", r.forbidden},
        {"max_size", r.max_size},
        {"certificate", format_set_hex(r.certificate)},
        {"nodes_explored", r.nodes_explored},
        {"wall_time", r.wall_time},
    };
}

nlohmann::json to_json(const ExtractionTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) {
        steps.push_back({
            {"dim", s.dim},
            {"split_coord", s.split_coord},
            {"chosen_side", s.chosen_side},
            {"side_cardinalities", {s.side_cardinalities.first, s.side_cardinalities.second}},
        });
    }
    return {{"steps", steps}, {"base", t.base}};
}

nlohmann::json report_document(std::span<const VerificationReport> reports) {
    nlohmann::json doc;
    doc["header"] = {{"tool", "clawcycle"}, {"generator", kGeneratorName}};
    doc["reports"] = nlohmann::json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    return doc;
}

void print_table(std::ostream& os, std::span<const VerificationReport> reports) {
    os << std::left << std::setw(56) << "check" << std::right << std::setw(10) << "universe" << std::setw(10)
       << "passed" << std::setw(8) << "failed" << std::setw(10) << "time(s)" << "  " << std::setw(16) << "digest"
       << "  status\n";
    for (const auto& r : reports) {
        const char* status = r.informational ? (r.failed == 0 ? "ok (info)" : "FINDING") : (r.failed == 0 ? "PASS" : "FAIL");
        os << std::left << std::setw(56) << r.check_name << std::right << std::setw(10) << r.universe_size
           << std::setw(10) << r.passed << std::setw(8) << r.failed << std::setw(10) << std::fixed
           << std::setprecision(3) << r.wall_time << "  " << std::setw(16) << r.deterministic_digest << "  " << status
           << '\n';
        for (const auto& [k, v] : r.counters) os << "    " << k << " = " << v << '\n';
        for (const auto& f : r.findings) os << "    " << f << '\n';
        for (const auto& c : r.counterexamples) os << "    counterexample " << c << '\n';
    }
}

}  // namespace clawcycle
