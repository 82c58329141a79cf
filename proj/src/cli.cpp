#include "clawcycle/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "clawcycle/errors.hpp"
#include "clawcycle/report.hpp"
#include "clawcycle/textio.hpp"
#include "clawcycle/verify.hpp"
#include "clawcycle/witness.hpp"

namespace clawcycle {

namespace {

constexpr const char* kFooter =
    "Vertices are written alpha_1 alpha_2 ... alpha_n, least-significant label bit first.\n"
    "Hex masks list the most-significant digit first and bit v is vertex v:\n"
    "in Q_4, --hex 5557 is the coordinate-1 = 0 half (labels 0,2,...,14) plus vertex 1000 (label 1).";

VertexSet load_set(const RunConfig& c) {
    const CubeDim dim(c.n);
    const int sources = (c.set_file ? 1 : 0) + (c.hex ? 1 : 0) + (c.list ? 1 : 0);
    if (sources != 1) {
        throw InvalidArgument("exactly one of --set-file, --hex, --list is required");
    }
    if (c.hex) {
        return parse_set(*c.hex, dim, SetFormat::Hex);
    }
    if (c.list) {
        std::string text = *c.list;
        std::replace(text.begin(), text.end(), ',', '\n');
        return parse_set(text, dim, SetFormat::Binary);
    }
    std::ifstream in(*c.set_file);
    if (!in) {
        throw InvalidArgument("cannot open set file " + *c.set_file);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_set(buf.str(), dim, SetFormat::Auto);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), *c.set_file + ": " + std::string(e.what()));
    }
}

int emit_reports(const RunConfig& c, const std::vector<VerificationReport>& reports, std::ostream& out) {
    const auto doc = report_document(reports);
    if (c.output) {
        std::ofstream f(*c.output);
        if (!f) throw InvalidArgument("cannot write report to " + *c.output);
        f << doc.dump(2) << '\n';
    }
    if (c.format == OutputFormat::Json) {
        out << doc.dump(2) << '\n';
    } else {
        print_table(out, reports);
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
    return ok ? kExitOk : kExitCheckFailed;
}

int run_witness(const RunConfig& c, std::ostream& out) {
    const VertexSet set = load_set(c);
    const CubeDim dim = set.dim();
    nlohmann::json doc;
    std::vector<std::string> lines;
    Witness w = Claw{};
    switch (c.method) {
        case Method::Inductive: {
            auto res = find_witness_inductive(set);
            w = res.witness;
            doc["trace"] = to_json(res.trace);
            for (const auto& s : res.trace.steps) {
                lines.push_back("step n=" + std::to_string(s.dim) + " split coord " + std::to_string(s.split_coord) +
                                " sides (" + std::to_string(s.side_cardinalities.first) + ", " +
                                std::to_string(s.side_cardinalities.second) + ") chose " +
                                std::to_string(s.chosen_side));
            }
            lines.push_back("base " + res.trace.base);
            break;
        }
        case Method::Bruteforce: {
            if (c.n == 4) {
                w = base_case_solve(set);
                break;
            }
            if (set.size() < theorem_bound(c.n)) {
                throw InsufficientCardinality(set.size(), theorem_bound(c.n));
            }
            auto found = find_theorem_witness(set);
            if (!found) throw TheoremViolation(format_set_hex(set));
            w = *found;
            break;
        }
        case Method::Structured: {
            auto res = base_case_solve_structured(set);
            w = res.witness;
            doc["case"] = res.case_id;
            lines.push_back("case " + std::to_string(res.case_id));
            break;
        }
    }
    if (!check_witness(w, set)) {
        throw TheoremViolation(format_set_hex(set));
    }
    doc["witness"] = format_witness(w, dim);
    doc["set"] = format_set_hex(set);
    if (c.output) {
        std::ofstream f(*c.output);
        f << doc.dump(2) << '\n';
    }
    if (c.format == OutputFormat::Json) {
        out << doc.dump(2) << '\n';
    } else {
        out << format_witness(w, dim) << '\n';
        for (const auto& l : lines) out << l << '\n';
    }
    return kExitOk;
}

int run_extremal(const RunConfig& c, std::ostream& out) {
    const auto res = extremal_search(c.n, c.cycle_length);
    const bool free = !find_claw(res.certificate) &&
                      (res.certificate.size() < static_cast<std::size_t>(c.cycle_length) ||
                       !find_induced_cycle(res.certificate, c.cycle_length));
    auto doc = to_json(res);
    doc["certificate_verified"] = free;
    if (c.output) {
        std::ofstream f(*c.output);
        f << doc.dump(2) << '\n';
    }
    if (c.format == OutputFormat::Json) {
        out << doc.dump(2) << '\n';
    } else {
        out << "n=" << res.dim << " forbidden={claw, C" << res.cycle_length << "} max_size=" << res.max_size
            << " certificate=" << format_set_hex(res.certificate) << " nodes=" << res.nodes_explored
            << " verified=" << (free ? "yes" : "NO") << '\n';
        out << format_set_binary(res.certificate);
    }
    return free ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.workers < 1) throw InvalidArgument("--workers must be at least 1");
        switch (c.command) {
            case Command::VerifyTheorem:
                return emit_reports(c, {verify_theorem_exhaustive(c.n, c.size.value_or(static_cast<int>(theorem_bound(c.n))), c.workers, c.symmetry_reduced)}, out);
            case Command::VerifyProposition:
                return emit_reports(c, {verify_proposition_exhaustive(c.workers)}, out);
            case Command::VerifyCases: {
                auto reports = verify_case_claims(c.case_id, c.workers);
                if (c.case_id == 0) {
                    // Cross-checks of the structured solver ride along with the full run.
                    reports.push_back(verify_structured_agreement(c.workers));
                    reports.push_back(verify_monotonicity(1000, c.seed, c.workers));
                }
                return emit_reports(c, reports, out);
            }
            case Command::RandomTest:
                return emit_reports(c, {random_agreement_test(c.n, c.trials, c.seed, c.workers)}, out);
            case Command::Witness:
                return run_witness(c, out);
            case Command::Extremal:
                return run_extremal(c, out);
        }
    } catch (const TheoremViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Claw / induced-cycle witnesses in hypercube vertex subsets", "clawcycle"};
    app.footer(kFooter);
    app.require_subcommand(1);

    RunConfig c;
    std::string format = "table";
    std::string method = "inductive";
    std::string forbidden = "claw,c8";
    std::string case_arg = "all";
    int size = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--workers", c.workers, "Worker threads (results do not depend on this)")->check(CLI::PositiveNumber);
        sub->add_option("--output", c.output, "Write the machine-readable report to this path");
        sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
    };

    auto* theorem = app.add_subcommand("verify-theorem", "Check every size-subset of Q_4");
    theorem->add_option("--n", c.n, "Cube dimension (4)");
    theorem->add_option("--size", size, "Subset size (default 2^{n-1}+1)");
    theorem->add_flag("--symmetry", c.symmetry_reduced, "Check orbit representatives only");
    add_common(theorem);

    auto* prop = app.add_subcommand("verify-proposition", "Check every 6-subset of Q_3");
    add_common(prop);

    auto* cases = app.add_subcommand("verify-cases", "Machine-check the base-case claims");
    cases->add_option("--case", case_arg, "1, 2, 3, 4 or all")->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
    cases->add_option("--seed", c.seed, "Seed for the monotonicity pairs (with --case all)");
    add_common(cases);

    auto* wit = app.add_subcommand("witness", "Extract a claw or induced 8-cycle from a set");
    wit->add_option("--n", c.n, "Cube dimension")->required();
    wit->add_option("--set-file", c.set_file, "File with one vertex per line, or a hex mask");
    wit->add_option("--hex", c.hex, "Hex membership mask");
    wit->add_option("--list", c.list, "Comma-separated vertices");
    wit->add_option("--method", method, "inductive, bruteforce or structured")
        ->check(CLI::IsMember({"inductive", "bruteforce", "structured"}));
    add_common(wit);

    auto* ext = app.add_subcommand("extremal", "Largest subset with no forbidden structure");
    ext->add_option("--n", c.n, "Cube dimension")->required();
    ext->add_option("--forbidden", forbidden, "claw,c8 or claw,c6")->check(CLI::IsMember({"claw,c8", "claw,c6"}));
    add_common(ext);

    auto* rnd = app.add_subcommand("random-test", "Inductive extractor on random sets at the bound");
    rnd->add_option("--n", c.n, "Cube dimension")->required();
    rnd->add_option("--trials", c.trials, "Number of random sets")->check(CLI::NonNegativeNumber);
    rnd->add_option("--seed", c.seed, "Generator seed");
    add_common(rnd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (theorem->parsed()) {
        c.command = Command::VerifyTheorem;
        if (size != 0) c.size = size;
    } else if (prop->parsed()) {
        c.command = Command::VerifyProposition;
    } else if (cases->parsed()) {
        c.command = Command::VerifyCases;
        c.case_id = case_arg == "all" ? 0 : std::stoi(case_arg);
    } else if (wit->parsed()) {
        c.command = Command::Witness;
        c.method = method == "inductive" ? Method::Inductive : method == "bruteforce" ? Method::Bruteforce : Method::Structured;
    } else if (ext->parsed()) {
        c.command = Command::Extremal;
        c.cycle_length = forbidden == "claw,c6" ? 6 : 8;
    } else {
        c.command = Command::RandomTest;
    }
    c.format = format == "json" ? OutputFormat::Json : OutputFormat::Table;
    return run(c, out, err);
}

}  // namespace clawcycle
