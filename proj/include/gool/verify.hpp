#pragma once

// Cross-language verification: render, compile and run every target whose
// toolchain is installed, then compare normalised stdout.

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gool/backend.hpp"
#include "gool/ir.hpp"

namespace gool {

struct ProcessResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Runs `argv` (no shell) in `cwd`, feeding `stdin_text`.
ProcessResult run_process(const std::vector<std::string>& argv, const std::filesystem::path& cwd,
                          const std::string& stdin_text = {});

std::optional<std::string> find_executable(const std::string& name);

/// Resolved commands for one target; empty when the target is unavailable.
struct Toolchain {
    Target target;
    std::vector<std::string> compile;  // program + leading flags; empty for Python
    std::vector<std::string> run;      // interpreter/runtime prefix; empty for native
    bool available = false;
    std::string note;
};

/// Probes PATH, honouring the GOOL_PYTHON, GOOL_JAVAC, GOOL_JAVA, GOOL_CSC,
/// GOOL_MONO and GOOL_CXX overrides.
Toolchain discover_toolchain(Target t);

/// Trailing whitespace stripped per line, True/False lowered, and every
/// token that reads as a floating-point number rewritten with six
/// significant digits (the default precision of C++ streams). Integer
/// tokens are left exactly as printed.
std::string normalize_output(const std::string& raw);

enum class TargetStatus { Ran, Skipped, CompileFailed, RunFailed };

struct TargetReport {
    Target target;
    TargetStatus status = TargetStatus::Skipped;
    std::string stdout_text;  // normalised
    std::string diagnostics;
};

struct VerifyReport {
    std::vector<TargetReport> targets;
    std::vector<std::string> diffs;

    bool any_compile_failure() const;
    bool agree() const;
    /// 0 when all executed targets agree, 4 on a compile failure, 1 otherwise.
    int exit_code() const;
    std::string summary() const;
};

struct VerifyOptions {
    std::vector<Target> targets{std::begin(kAllTargets), std::end(kAllTargets)};
    std::vector<std::string> args;
    std::string stdin_text;
    std::filesystem::path work_dir;  // defaults to a fresh temp directory
    /// Hook applied to each rendered FileSet before it is built; used to
    /// inject faults in tests.
    std::function<void(Target, FileSet&)> mutate;
    /// Toolchain lookup; defaults to discover_toolchain.
    std::function<Toolchain(Target)> toolchains;
};

VerifyReport verify_package(const Package& pkg, const VerifyOptions& options);

/// Writes `files` under `dir`, creating it.
void write_fileset(const FileSet& files, const std::filesystem::path& dir);

} // namespace gool
