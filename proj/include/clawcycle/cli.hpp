#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace clawcycle {

enum class Command { VerifyTheorem, VerifyProposition, VerifyCases, Witness, Extremal, RandomTest };
enum class Method { Inductive, Bruteforce, Structured };
enum class OutputFormat { Table, Json };

struct RunConfig {
    Command command = Command::VerifyTheorem;
    int n = 4;
    std::optional<int> size;
    // Set sources for `witness`; exactly one must be given.
    std::optional<std::string> set_file;
    std::optional<std::string> hex;
    std::optional<std::string> list;
    Method method = Method::Inductive;
    int cycle_length = 8;  // forbidden structures are {claw, C_k}
    int case_id = 0;       // 0 = all cases
    int trials = 100;
    std::uint64_t seed = 1;
    int workers = 1;
    bool symmetry_reduced = false;
    std::optional<std::string> output;  // JSON report path
    OutputFormat format = OutputFormat::Table;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Executes one command. Exit status: 0 all checks pass, 1 a check fails,
/// 2 usage or input error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clawcycle
