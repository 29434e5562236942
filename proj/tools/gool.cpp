// gool: render language-agnostic OO programs to Python, Java, C# and C++.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gool/backend.hpp"
#include "gool/build.hpp"
#include "gool/error.hpp"
#include "gool/gallery.hpp"
#include "gool/json_codec.hpp"
#include "gool/verify.hpp"

namespace {

namespace fs = std::filesystem;

enum Exit { kOk = 0, kDiffer = 1, kBadInput = 2, kUnsupported = 3, kCompileFailed = 4 };

struct Loaded {
    gool::Package package;
    std::vector<std::string> args;
    std::string stdin_text;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gool::Error(gool::ErrorKind::DecodeError, "cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

Loaded load(const std::string& input) {
    constexpr std::string_view kPrefix = "example:";
    if (input.rfind(kPrefix, 0) == 0) {
        std::string name = input.substr(kPrefix.size());
        const gool::GalleryEntry* entry = gool::find_example(name);
        if (!entry) throw gool::Error(gool::ErrorKind::DecodeError, "unknown example \"" + name + "\"");
        return {entry->package, entry->args, entry->stdin_text};
    }
    return {gool::json::decode_text(read_file(input)), {}, {}};
}

/// Adds the auxiliary files requested on the command line that the package
/// does not already ask for.
gool::Package with_aux(gool::Package pkg, bool want_makefile, bool want_doc) {
    auto has = [&](gool::AuxKind k) {
        for (const auto& a : pkg.aux_files) {
            if (a.kind == k) return true;
        }
        return false;
    };
    if (want_makefile) {
        bool found = false;
        for (auto& a : pkg.aux_files) {
            if (a.kind == gool::AuxKind::Makefile) {
                a.with_doc_rule = a.with_doc_rule || want_doc;
                found = true;
            }
        }
        if (!found) pkg.aux_files.push_back(gool::makefile(want_doc));
    }
    if (want_doc && !has(gool::AuxKind::DoxygenConfig)) pkg.aux_files.push_back(gool::dox_config());
    return pkg;
}

std::vector<gool::Target> parse_targets(const std::vector<std::string>& names) {
    std::vector<gool::Target> out;
    for (const auto& n : names) {
        if (n == "all") return {std::begin(gool::kAllTargets), std::end(gool::kAllTargets)};
        auto t = gool::parse_target(n);
        if (!t) throw CLI::ValidationError("--target", "unknown target \"" + n + "\"");
        out.push_back(*t);
    }
    return out;
}

int report_error(const gool::Error& e) {
    std::cerr << "gool: " << e.what() << "\n";
    return e.kind() == gool::ErrorKind::UnsupportedConstruct ? kUnsupported : kBadInput;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Render language-agnostic object-oriented programs to Python, Java, C# and C++."};
    app.require_subcommand(1);

    std::string input;
    std::vector<std::string> target_names;
    std::string out_dir;
    bool want_makefile = false;
    bool want_doc = false;
    auto add_render_options = [&](CLI::App* cmd, bool need_out) {
        cmd->add_option("--input", input, "JSON package file, or example:NAME for a built-in example")->required();
        auto* target = cmd->add_option("--target", target_names, "python, java, csharp, cpp or all (repeatable)")
                           ->expected(1, -1);
        if (need_out) {
            target->required();
        } else {
            target->default_str("all");
        }
        auto* out = cmd->add_option("--out", out_dir, "output directory; files go to DIR/<target>/");
        if (need_out) out->required();
        cmd->add_flag("--makefile", want_makefile, "also emit a Makefile");
        cmd->add_flag("--doc", want_doc, "emit a Doxygen config and a doc: rule in the Makefile");
    };

    auto* render = app.add_subcommand("render", "render a package to source files");
    add_render_options(render, true);

    auto* examples = app.add_subcommand("examples", "list the built-in examples or print one as JSON");
    std::string emit;
    examples->add_option("--emit", emit, "print the named example's package JSON");

    auto* verify = app.add_subcommand(
        "verify",
        "render, compile and run each target with an installed toolchain and compare outputs.\n"
        "Toolchains are found on PATH; override with GOOL_PYTHON, GOOL_JAVAC, GOOL_JAVA,\n"
        "GOOL_CSC, GOOL_MONO and GOOL_CXX.");
    add_render_options(verify, false);
    std::vector<std::string> run_args;
    std::string stdin_file;
    bool args_given = false;
    verify->add_option("--args", run_args, "command-line arguments for the generated program")
        ->expected(0, -1)
        ->each([&](const std::string&) { args_given = true; });
    verify->add_option("--stdin", stdin_file, "file fed to the generated program's standard input");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (examples->parsed()) {
            if (emit.empty()) {
                for (const auto& e : gool::gallery()) std::cout << e.name << "\n";
                return kOk;
            }
            const gool::GalleryEntry* entry = gool::find_example(emit);
            if (!entry) {
                std::cerr << "gool: unknown example \"" << emit << "\"\n";
                return kBadInput;
            }
            std::cout << gool::json::encode_text(entry->package);
            return kOk;
        }

        if (target_names.empty()) target_names = {"all"};
        std::vector<gool::Target> targets = parse_targets(target_names);
        Loaded loaded = load(input);
        gool::Package pkg = with_aux(std::move(loaded.package), want_makefile, want_doc);

        if (render->parsed()) {
            // Render everything first so a failure leaves no partial output.
            std::vector<std::pair<gool::Target, gool::FileSet>> rendered;
            for (auto t : targets) rendered.emplace_back(t, gool::render_target(pkg, t));
            for (const auto& [t, files] : rendered) {
                fs::path dir = fs::path(out_dir) / std::string(gool::to_string(t));
                gool::write_fileset(files, dir);
                for (const auto& f : files.files) std::cout << (dir / f.path).string() << "\n";
            }
            return kOk;
        }

        gool::VerifyOptions options;
        options.targets = targets;
        options.args = args_given ? run_args : loaded.args;
        options.stdin_text = stdin_file.empty() ? loaded.stdin_text : read_file(stdin_file);
        if (!out_dir.empty()) options.work_dir = out_dir;
        for (auto t : targets) gool::render_target(pkg, t);  // surface unsupported constructs before running
        gool::VerifyReport report = gool::verify_package(pkg, options);
        std::cout << report.summary();
        for (const auto& t : report.targets) {
            if (t.status == gool::TargetStatus::CompileFailed) std::cerr << t.diagnostics << "\n";
        }
        return report.exit_code();
    } catch (const gool::Error& e) {
        return report_error(e);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "gool: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "gool: " << e.what() << "\n";
        return kBadInput;
    }
}
