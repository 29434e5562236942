#include "gool/verify.hpp"

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include "gool/error.hpp"

namespace gool {

namespace fs = std::filesystem;

// Processes --------------------------------------------------------------------------------

ProcessResult run_process(const std::vector<std::string>& argv, const fs::path& cwd, const std::string& stdin_text) {
    ProcessResult result;
    if (argv.empty()) return result;
    int in_pipe[2], out_pipe[2], err_pipe[2];
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
        result.err = std::string("pipe: ") + std::strerror(errno);
        return result;
    }
    pid_t pid = fork();
    if (pid < 0) {
        result.err = std::string("fork: ") + std::strerror(errno);
        return result;
    }
    if (pid == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1]}) close(fd);
        if (!cwd.empty() && chdir(cwd.c_str()) != 0) _exit(127);
        std::vector<char*> args;
        for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
        args.push_back(nullptr);
        execvp(args[0], args.data());
        std::fprintf(stderr, "exec %s: %s\n", args[0], std::strerror(errno));
        _exit(127);
    }
    close(in_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[1]);

    // Feed stdin and drain both outputs together so no pipe can fill up and stall the child.
    std::size_t written = 0;
    int in_fd = in_pipe[1];
    fcntl(in_fd, F_SETFL, O_NONBLOCK);
    if (stdin_text.empty()) {
        close(in_fd);
        in_fd = -1;
    }
    std::array<pollfd, 3> fds{};
    std::array<char, 4096> buf{};
    bool out_open = true, err_open = true;
    while (out_open || err_open) {
        nfds_t n = 0;
        fds[n++] = {out_open ? out_pipe[0] : -1, POLLIN, 0};
        fds[n++] = {err_open ? err_pipe[0] : -1, POLLIN, 0};
        fds[n++] = {in_fd, POLLOUT, 0};
        if (poll(fds.data(), n, -1) < 0) {
            if (errno == EINTR) continue;
            break;
        }
        auto drain = [&](int idx, int fd, bool& open, std::string& sink) {
            if (fds[idx].revents & (POLLIN | POLLHUP | POLLERR)) {
                ssize_t got = read(fd, buf.data(), buf.size());
                if (got > 0) {
                    sink.append(buf.data(), static_cast<std::size_t>(got));
                } else if (got == 0 || errno != EINTR) {
                    open = false;
                }
            }
        };
        drain(0, out_pipe[0], out_open, result.out);
        drain(1, err_pipe[0], err_open, result.err);
        if (in_fd >= 0 && (fds[2].revents & (POLLOUT | POLLERR | POLLHUP))) {
            ssize_t put = write(in_fd, stdin_text.data() + written, stdin_text.size() - written);
            if (put > 0) written += static_cast<std::size_t>(put);
            if (put < 0 && errno != EAGAIN && errno != EINTR) written = stdin_text.size();
            if (written >= stdin_text.size()) {
                close(in_fd);
                in_fd = -1;
            }
        }
    }
    if (in_fd >= 0) close(in_fd);
    close(out_pipe[0]);
    close(err_pipe[0]);
    int status = 0;
    while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        result.exit_code = 128 + WTERMSIG(status);
    }
    return result;
}

std::optional<std::string> find_executable(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name.find('/') != std::string::npos) {
        if (access(name.c_str(), X_OK) == 0) return name;
        return std::nullopt;
    }
    const char* path = std::getenv("PATH");
    if (!path) return std::nullopt;
    std::stringstream dirs(path);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
        if (dir.empty()) dir = ".";
        fs::path candidate = fs::path(dir) / name;
        std::error_code ec;
        if (fs::is_regular_file(candidate, ec) && access(candidate.c_str(), X_OK) == 0) return candidate.string();
    }
    return std::nullopt;
}

namespace {

/// The first installed of the override (when set) or the default names.
std::optional<std::string> resolve(const char* env, std::initializer_list<const char*> defaults) {
    if (const char* override_value = std::getenv(env); override_value && *override_value) {
        return find_executable(override_value);
    }
    for (const char* name : defaults) {
        if (auto found = find_executable(name)) return found;
    }
    return std::nullopt;
}

} // namespace

Toolchain discover_toolchain(Target t) {
    Toolchain tc{t, {}, {}, false, {}};
    switch (t) {
    case Target::Python:
        if (auto py = resolve("GOOL_PYTHON", {"python3", "python"})) {
            tc.run = {*py};
            tc.available = true;
        } else {
            tc.note = "python3 not found";
        }
        break;
    case Target::Java: {
        auto javac = resolve("GOOL_JAVAC", {"javac"});
        auto java = resolve("GOOL_JAVA", {"java"});
        if (javac && java) {
            tc.compile = {*javac};
            tc.run = {*java, "-cp", "."};
            tc.available = true;
        } else {
            tc.note = "javac/java not found";
        }
        break;
    }
    case Target::CSharp: {
        auto csc = resolve("GOOL_CSC", {"mcs", "csc"});
        auto mono = resolve("GOOL_MONO", {"mono"});
        if (csc && mono) {
            tc.compile = {*csc};
            tc.run = {*mono};
            tc.available = true;
        } else {
            tc.note = "mcs/mono not found";
        }
        break;
    }
    case Target::Cpp:
        if (auto cxx = resolve("GOOL_CXX", {"g++", "clang++", "c++"})) {
            tc.compile = {*cxx, "-std=c++11"};
            tc.available = true;
        } else {
            tc.note = "no C++ compiler found";
        }
        break;
    }
    return tc;
}

// Output normalisation ---------------------------------------------------------------------

namespace {

bool is_integer_token(const std::string& tok) {
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i >= tok.size()) return false;
    for (; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return false;
    }
    return true;
}

std::string normalize_token(const std::string& tok) {
    if (tok == "True" || tok == "False") return tok == "True" ? "true" : "false";
    if (tok.empty() || is_integer_token(tok)) return tok;
    if (tok.find_first_of(".eE") == std::string::npos) return tok;
    char* end = nullptr;
    double value = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(value)) return tok;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

/// Normalises each maximal run of characters that can belong to a number,
/// so list punctuation such as "[1.50, 2.0]" is kept intact.
std::string normalize_line(const std::string& line) {
    std::string out;
    std::size_t i = 0;
    auto numeric = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' || c == '_'; };
    while (i < line.size()) {
        if (!numeric(line[i])) {
            out += line[i++];
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && numeric(line[j])) ++j;
        out += normalize_token(line.substr(i, j - i));
        i = j;
    }
    std::size_t keep = out.find_last_not_of(" \t\r");
    out.erase(keep == std::string::npos ? 0 : keep + 1);
    return out;
}

} // namespace

std::string normalize_output(const std::string& raw) {
    std::stringstream in(raw);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(normalize_line(line));
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

// Reports -----------------------------------------------------------------------------------

bool VerifyReport::any_compile_failure() const {
    for (const auto& t : targets) {
        if (t.status == TargetStatus::CompileFailed) return true;
    }
    return false;
}

bool VerifyReport::agree() const {
    if (!diffs.empty()) return false;
    for (const auto& t : targets) {
        if (t.status == TargetStatus::CompileFailed || t.status == TargetStatus::RunFailed) return false;
    }
    return true;
}

int VerifyReport::exit_code() const {
    if (any_compile_failure()) return 4;
    return agree() ? 0 : 1;
}

std::string VerifyReport::summary() const {
    std::ostringstream out;
    for (const auto& t : targets) {
        out << to_string(t.target) << ": ";
        switch (t.status) {
        case TargetStatus::Ran: out << "ran"; break;
        case TargetStatus::Skipped: out << "skipped"; break;
        case TargetStatus::CompileFailed: out << "compile failed"; break;
        case TargetStatus::RunFailed: out << "run failed"; break;
        }
        if (!t.diagnostics.empty()) out << " (" << t.diagnostics << ")";
        out << "\n";
    }
    for (const auto& d : diffs) out << d << "\n";
    out << (agree() ? "outputs agree" : "outputs differ") << "\n";
    return out.str();
}

void write_fileset(const FileSet& files, const fs::path& dir) {
    fs::create_directories(dir);
    for (const auto& f : files.files) {
        fs::path p = dir / f.path;
        if (p.has_parent_path()) fs::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary);
        out << f.text;
        if (!out) throw std::runtime_error("cannot write " + p.string());
    }
}

namespace {

std::string first_lines(const std::string& text, std::size_t n = 6) {
    std::stringstream in(text);
    std::string line, out;
    for (std::size_t i = 0; i < n && std::getline(in, line); ++i) out += (i ? " | " : "") + line;
    return out;
}

fs::path fresh_work_dir() {
    std::random_device rd;
    fs::path base = fs::temp_directory_path();
    for (int attempt = 0; attempt < 100; ++attempt) {
        fs::path dir = base / ("gool-verify-" + std::to_string(rd()));
        std::error_code ec;
        if (fs::create_directory(dir, ec)) return dir;
    }
    throw std::runtime_error("cannot create a temporary directory");
}

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

TargetReport run_target(const Package& pkg, Target t, const Toolchain& tc, const VerifyOptions& options,
                        const fs::path& dir) {
    TargetReport report{t, TargetStatus::Skipped, {}, {}};
    if (!tc.available) {
        report.diagnostics = tc.note.empty() ? "toolchain unavailable" : tc.note;
        return report;
    }
    const Module* main = pkg.main_module();
    if (!main) {
        report.diagnostics = "package has no main module";
        return report;
    }
    FileSet files = render_target(pkg, t);
    if (options.mutate) options.mutate(t, files);
    write_fileset(files, dir);

    std::vector<std::string> sources;
    std::string ext = t == Target::Cpp ? ".cpp" : t == Target::Java ? ".java" : t == Target::CSharp ? ".cs" : ".py";
    for (const auto& f : files.files) {
        if (f.type != FileType::Header && f.path.size() > ext.size() &&
            f.path.compare(f.path.size() - ext.size(), ext.size(), ext) == 0) {
            sources.push_back(f.path);
        }
    }

    std::vector<std::string> compile, run;
    switch (t) {
    case Target::Python: run = with(tc.run, {main->name + ".py"}); break;
    case Target::Java:
        compile = with(tc.compile, sources);
        run = with(tc.run, {main->name});
        break;
    case Target::CSharp:
        compile = with(tc.compile, with({"-out:" + main->name + ".exe"}, sources));
        run = with(tc.run, {main->name + ".exe"});
        break;
    case Target::Cpp:
        compile = with(tc.compile, with(sources, {"-o", main->name}));
        run = {(dir / main->name).string()};
        break;
    }
    if (!compile.empty()) {
        ProcessResult c = run_process(compile, dir);
        if (c.exit_code != 0) {
            report.status = TargetStatus::CompileFailed;
            report.diagnostics = first_lines(c.err.empty() ? c.out : c.err);
            return report;
        }
    }
    ProcessResult r = run_process(with(run, options.args), dir, options.stdin_text);
    report.stdout_text = normalize_output(r.out);
    if (r.exit_code != 0) {
        report.status = TargetStatus::RunFailed;
        report.diagnostics = "exit " + std::to_string(r.exit_code) + ": " + first_lines(r.err);
        return report;
    }
    report.status = TargetStatus::Ran;
    return report;
}

std::string describe_diff(const TargetReport& a, const TargetReport& b) {
    std::stringstream la(a.stdout_text), lb(b.stdout_text);
    std::string x, y;
    for (int line = 1;; ++line) {
        bool ha = static_cast<bool>(std::getline(la, x));
        bool hb = static_cast<bool>(std::getline(lb, y));
        if (!ha && !hb) break;
        if (!ha) x = "<end of output>";
        if (!hb) y = "<end of output>";
        if (!ha || !hb || x != y) {
            return std::string(to_string(a.target)) + " and " + std::string(to_string(b.target)) + " differ at line " +
                   std::to_string(line) + ": \"" + x + "\" vs \"" + y + "\"";
        }
    }
    return std::string(to_string(a.target)) + " and " + std::string(to_string(b.target)) + " differ";
}

} // namespace

VerifyReport verify_package(const Package& pkg, const VerifyOptions& options) {
    VerifyReport report;
    fs::path root = options.work_dir.empty() ? fresh_work_dir() : options.work_dir;
    for (Target t : options.targets) {
        Toolchain tc = options.toolchains ? options.toolchains(t) : discover_toolchain(t);
        report.targets.push_back(run_target(pkg, t, tc, options, root / std::string(to_string(t))));
    }
    const TargetReport* reference = nullptr;
    for (const auto& t : report.targets) {
        if (t.status != TargetStatus::Ran) continue;
        if (!reference) {
            reference = &t;
        } else if (t.stdout_text != reference->stdout_text) {
            report.diffs.push_back(describe_diff(*reference, t));
        }
    }
    if (options.work_dir.empty()) {
        std::error_code ec;
        fs::remove_all(root, ec);
    }
    return report;
}

} // namespace gool
