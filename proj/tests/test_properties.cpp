// Behavioural agreement between the reference interpreter and rendered code:
// every gallery program and a feature tour, plus randomly generated in/out
// procedures.

#include <random>

#include <doctest.h>

#include "gool/backend.hpp"
#include "gool/build.hpp"
#include "gool/gallery.hpp"
#include "gool/patterns.hpp"
#include "gool/verify.hpp"
#include "support/ref_interp.hpp"
#include "support/test_util.hpp"

using namespace gool;
using namespace gool::ops;

namespace {

bool have(Target t) { return discover_toolchain(t).available; }

/// Runs `pkg` through the C++ toolchain and returns normalised stdout.
std::optional<std::string> run_cpp(const Package& pkg, const std::vector<std::string>& args, const std::string& input) {
    if (!have(Target::Cpp)) return std::nullopt;
    VerifyOptions options;
    options.targets = {Target::Cpp};
    options.args = args;
    options.stdin_text = input;
    VerifyReport report = verify_package(pkg, options);
    REQUIRE(report.targets.size() == 1);
    INFO(report.summary());
    REQUIRE(report.targets[0].status == TargetStatus::Ran);
    return report.targets[0].stdout_text;
}

} // namespace

TEST_CASE("the interpreter agrees with rendered Python and C++ on the gallery") {
    for (const auto& e : gallery()) {
        CAPTURE(e.name);
        refi::RunResult expected = refi::run(e.package, e.args, e.stdin_text);
        CHECK_FALSE(expected.threw);
        CHECK_FALSE(expected.out.empty());
        if (testutil::python()) {
            ProcessResult r = testutil::run_python(e.package, e.args, e.stdin_text);
            CHECK(r.exit_code == 0);
            CHECK(r.out == expected.out);
        }
        if (auto cpp = run_cpp(e.package, e.args, e.stdin_text)) CHECK(*cpp == normalize_output(expected.out));
    }
}

TEST_CASE("feature tour: interpreter, Python and C++ agree") {
    Package tour = testutil::feature_tour();
    const std::vector<std::string> args{"alpha", "beta"};
    const std::string input = "yes\n21\n";
    refi::RunResult expected = refi::run(tour, args, input);
    CHECK(expected.out ==
          "yes\n42\nseven\n0\n1\n2\n10\n5\n0\n1\n3\n4\nbefore\ncaught\nY\nf\n3\n3.474744871391589\nab\n4.0\n9.0\nshape\n2\n"
          "[4, 9, 15, 16, 23]\n2\nTrue\n23\n[9, 16]\n[4, 9]\n2\nTrue\nalpha!\n");
    if (testutil::python()) {
        ProcessResult r = testutil::run_python(tour, args, input);
        INFO(r.err);
        CHECK(r.exit_code == 0);
        CHECK(r.out == expected.out);
    }
    if (auto cpp = run_cpp(tour, args, input)) CHECK(*cpp == normalize_output(expected.out));
}

TEST_CASE("feature tour renders in Java and C#") {
    Package tour = testutil::feature_tour();
    for (Target t : {Target::Java, Target::CSharp}) {
        CAPTURE(to_string(t));
        FileSet files = render_target(tour, t);
        CHECK(files.files.size() == 2);
        if (have(t)) {
            VerifyOptions options;
            options.targets = {t};
            options.args = {"alpha", "beta"};
            options.stdin_text = "yes\n21\n";
            VerifyReport report = verify_package(tour, options);
            INFO(report.summary());
            CHECK(report.targets[0].status == TargetStatus::Ran);
            CHECK(report.targets[0].stdout_text == normalize_output(refi::run(tour, options.args, options.stdin_text).out));
        }
    }
}

namespace {

/// Random straight-line integer code over the variables of an in/out
/// procedure with one input `a`, one in-out `x` and one output `y`.
Expr random_operand(std::mt19937& rng, const std::vector<Variable>& readable, int depth) {
    std::uniform_int_distribution<int> pick(0, 3);
    if (depth == 0 || pick(rng) == 0) {
        std::uniform_int_distribution<int> choice(0, static_cast<int>(readable.size()));
        int c = choice(rng);
        if (c == static_cast<int>(readable.size())) {
            std::uniform_int_distribution<int> lit(-4, 4);
            return lit_int(lit(rng));
        }
        return value_of(readable[static_cast<std::size_t>(c)]);
    }
    Expr l = random_operand(rng, readable, depth - 1);
    Expr r = random_operand(rng, readable, depth - 1);
    switch (pick(rng) % 3) {
    case 0: return l + r;
    case 1: return l - r;
    default: return l * r;
    }
}

Package random_in_out(std::mt19937& rng, std::int64_t a0, std::int64_t x0) {
    Variable a = var("a", Type::integer());
    Variable x = var("x", Type::integer());
    Variable y = var("y", Type::integer());
    std::vector<Stmt> stmts;
    std::vector<Variable> readable{a, x};
    stmts.push_back(assign(y, random_operand(rng, readable, 2)));
    readable.push_back(y);
    std::uniform_int_distribution<int> extra(0, 3);
    for (int n = extra(rng); n > 0; --n) {
        std::uniform_int_distribution<int> which(0, 3);
        Variable target = which(rng) % 2 ? x : y;
        switch (which(rng)) {
        case 0: stmts.push_back(add_assign(target, random_operand(rng, readable, 1))); break;
        case 1: stmts.push_back(sub_assign(target, random_operand(rng, readable, 1))); break;
        case 2: stmts.push_back(increment(target)); break;
        default: stmts.push_back(assign(target, random_operand(rng, readable, 2))); break;
        }
    }
    Method f = in_out_func("mix", Scope::Public, Binding::Static, {a}, {y}, {x}, body_statements(stmts));
    Method main = main_function(body({
        block({var_dec_def(a, lit_int(a0)), var_dec_def(x, lit_int(x0)), var_dec(y)}),
        block({in_out_call(f, {value_of(a)}, {y}, {x})}),
        block({print_ln(value_of(x)), print_ln(value_of(y))}),
    }));
    return package(prog("mix", {build_module("Mix", {}, {f, main}, {})}), {});
}

} // namespace

TEST_CASE("random in/out procedures: rendered Python matches the interpreter") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> start(-6, 6);
    const int cases = testutil::python() ? 40 : 0;
    if (cases == 0) MESSAGE("python3 not installed; interpreter-only checks below");
    for (int n = 0; n < 40; ++n) {
        std::int64_t a0 = start(rng), x0 = start(rng);
        Package pkg = random_in_out(rng, a0, x0);
        CAPTURE(make_backend(Target::Python)->render_method(pkg.modules[0].functions[0]).str());
        auto direct = refi::call_in_out(pkg, "Mix", "mix", {x0}, {a0});
        REQUIRE(direct.size() == 2);
        refi::RunResult whole = refi::run(pkg);
        CHECK(whole.out == refi::show(direct[0]) + "\n" + refi::show(direct[1]) + "\n");
        if (n < cases) {
            ProcessResult r = testutil::run_python(pkg);
            INFO(r.err);
            CHECK(r.out == whole.out);
        }
    }
}
