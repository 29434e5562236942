#include "test_util.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gool/build.hpp"
#include "gool/patterns.hpp"

namespace testutil {

namespace fs = std::filesystem;
using namespace gool;
using namespace gool::ops;

std::string golden(const std::string& name) {
    std::ifstream in(fs::path(GOOL_GOLDEN_DIR) / name, std::ios::binary);
    if (!in) throw std::runtime_error("missing golden file " + name);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

TempDir::TempDir() {
    std::random_device rd;
    for (int attempt = 0; attempt < 100; ++attempt) {
        fs::path p = fs::temp_directory_path() / ("gool-test-" + std::to_string(rd()));
        std::error_code ec;
        if (fs::create_directory(p, ec)) {
            path_ = p;
            return;
        }
    }
    throw std::runtime_error("cannot create a temporary directory");
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

std::optional<std::string> python() {
    Toolchain tc = discover_toolchain(Target::Python);
    if (!tc.available) return std::nullopt;
    return tc.run.front();
}

ProcessResult run_python(const Package& pkg, const std::vector<std::string>& args, const std::string& stdin_text) {
    auto py = python();
    if (!py) throw std::runtime_error("python is not installed");
    const Module* main = pkg.main_module();
    if (!main) throw std::runtime_error("package has no main module");
    TempDir dir;
    write_fileset(render_target(pkg, Target::Python), dir.path());
    std::vector<std::string> argv{*py, main->name + ".py"};
    argv.insert(argv.end(), args.begin(), args.end());
    return run_process(argv, dir.path(), stdin_text);
}

ProcessResult run_python_source(const std::string& source) {
    auto py = python();
    if (!py) throw std::runtime_error("python is not installed");
    return run_process({*py, "-c", source}, fs::temp_directory_path());
}

Package main_only(const std::string& module, Body b) {
    return package(prog(module, {build_module(module, {}, {main_function(std::move(b))}, {})}), {});
}

Method apply_discount() {
    Variable price = var("price", Type::integer());
    Variable discount = var("discount", Type::integer());
    Variable affordable = var("isAffordable", Type::boolean());
    return in_out_func("applyDiscount", Scope::Public, Binding::Static, {discount}, {affordable}, {price},
                       body_statements({sub_assign(price, value_of(discount)),
                                        assign(affordable, value_of(price) < lit_float(20.0))}));
}

Package pattern_test(const std::string& label) {
    Type obs_type = Type::object("Observer");
    ClassDecl observer =
        pub_class("Observer", std::nullopt, {priv_mvar(var("x", Type::integer()), lit_int(5))},
                  {pub_method("Observer", "printNum", Type::void_type(), {},
                              one_liner(print_ln(value_of(self_var("x", Type::integer())))))});
    Variable obs1 = var("obs1", obs_type);
    Variable obs2 = var("obs2", obs_type);
    Variable total = var("total", Type::integer());
    Method main = main_function(body({
        block({init_state("myFSM", "Off"), change_state("myFSM", label),
               check_state("myFSM",
                           {{"Off", one_liner(print_str_ln("Off"))}, {"On", one_liner(print_str_ln("On"))}},
                           one_liner(print_str_ln("Neither")))}),
        block({var_dec_def(obs1, new_obj(obs_type, {})), var_dec_def(obs2, new_obj(obs_type, {}))}),
        block({init_observer_list(obs_type, {value_of(obs1)}), add_observer(value_of(obs2)),
               notify_observers("printNum", obs_type)}),
        block({var_dec_def(total, lit_int(0)),
               run_strategy("add",
                            {{"add", one_liner(print_str_ln("Adding"))},
                             {"multiply", one_liner(print_str_ln("Multiplying"))}},
                            total, lit_int(2) + lit_int(3)),
               print_ln(value_of(total))}),
    }));
    return package(prog("patternTest", {build_module("Observer", {}, {}, {observer}),
                                        build_module("PatternTest", {}, {main}, {})}),
                   {});
}

Package feature_tour() {
    Type shape_t = Type::object("Shape");
    Type square_t = Type::object("Square");
    Variable count = with_binding(var("count", Type::integer()), Binding::Static);
    Variable shared = class_var("Shape", "count", Type::integer());
    Variable name = self_var("name", Type::string());
    Variable side = self_var("side", Type::floating());
    ClassDecl shape = pub_class(
        "Shape", std::nullopt, {pub_gvar(count, lit_int(0)), priv_mvar(var("name", Type::string()))},
        {constructor("Shape", {}, body_statements({assign(name, lit_string("shape")), increment(shared)})),
         pub_method("Shape", "area", Type::floating(), {}, one_liner(return_stmt(lit_float(0.0)))),
         pub_method("Shape", "describe", Type::string(), {}, one_liner(return_stmt(value_of(name)))),
         method("Shape", "total", Scope::Public, Binding::Static, Type::integer(), {},
                one_liner(return_stmt(value_of(shared))))});
    ClassDecl square = pub_class("Square", std::string("Shape"), {priv_mvar(var("side", Type::floating()), lit_float(2.0))},
                                 {pub_method("Square", "area", Type::floating(), {},
                                             one_liner(return_stmt(value_of(side) * value_of(side)))),
                                  pub_method("Square", "grow", Type::void_type(), {param(var("by", Type::floating()))},
                                             one_liner(add_assign(side, value_of(var("by", Type::floating())))))});

    Variable x = var("x", Type::integer());
    Variable f = var("f", Type::floating());
    Variable b = var("b", Type::boolean());
    Variable s = var("s", Type::string());
    Variable k = var("k", Type::integer());
    Variable i = var("i", Type::integer());
    Variable j = var("j", Type::integer());
    Variable n = var("n", Type::integer());
    Variable xs = list_var("xs", Type::integer());
    Variable ys = list_var("ys", Type::integer());
    Variable sq = var("sq", square_t);
    Method half = function("half", Scope::Public, Binding::Static, Type::integer(), {param(x)},
                           one_liner(return_stmt(value_of(x) / lit_int(2))));
    Method main = main_function(body({
        block({var_dec_def(x, lit_int(7)), var_dec_def(f, lit_float(1.5)),
               var_dec_def(b, lit_true() && !(value_of(x) > lit_int(3))), var_dec(s), read_line(s), var_dec(n),
               read_int(n), print_ln(value_of(s)), print_ln(value_of(n) * lit_int(2))}),
        block({switch_stmt(value_of(x),
                           {{lit_int(1), one_liner(print_str_ln("one"))}, {lit_int(7), one_liner(print_str_ln("seven"))}},
                           one_liner(print_str_ln("other")))}),
        block({for_loop(var_dec_def(i, lit_int(0)), value_of(i) < lit_int(3), increment(i), one_liner(print_ln(value_of(i))))}),
        block({for_range(j, lit_int(10), lit_int(0), lit_int(-5), one_liner(print_ln(value_of(j))))}),
        block({var_dec_def(k, lit_int(0)),
               while_loop(lit_true(),
                          body_statements({increment(k),
                                           if_no_else({{eq(value_of(k), lit_int(2)), one_liner(continue_stmt())}}),
                                           if_no_else({{value_of(k) > lit_int(4), one_liner(break_stmt())}}),
                                           print_ln(value_of(k))}))}),
        block({try_catch(body_statements({print_str_ln("before"), throw_stmt("bad"), print_str_ln("after")}),
                         one_liner(print_str_ln("caught")))}),
        block({if_cond({{eq(value_of(s), lit_string("yes")), one_liner(print_str_ln("Y"))},
                        {value_of(f) >= lit_float(1.0), one_liner(print_str_ln("F"))}},
                       one_liner(comment("nothing to do")))}),
        block({print_ln(inline_if(value_of(b), lit_string("t"), lit_string("f"))),
               print_ln(func_app("half", Type::integer(), {value_of(x)})),
               print_ln(math_fn(MathFn::Sqrt, value_of(f)) + apply_binary(BinaryOp::Pow, value_of(f), lit_int(2))),
               print_ln(lit_string("a") + lit_string("b"))}),
        block({var_dec_def(sq, new_obj(square_t, {})), print_ln(obj_method_call(value_of(sq), "area", Type::floating(), {})),
               expr_stmt(obj_method_call(value_of(sq), "grow", Type::void_type(), {lit_float(1.0)})),
               print_ln(obj_method_call(value_of(sq), "area", Type::floating(), {})),
               print_ln(obj_method_call(value_of(sq), "describe", Type::string(), {})),
               var_dec_def(var("sq2", square_t), new_obj(square_t, {})), print_ln(value_of(shared))}),
        block({var_dec_def(xs, lit_list(Type::integer(), {lit_int(4), lit_int(8), lit_int(15), lit_int(16)})),
               expr_stmt(list_append(value_of(xs), lit_int(23))), list_set(value_of(xs), lit_int(1), lit_int(9)),
               print_ln(value_of(xs)), print_ln(index_of(value_of(xs), lit_int(15))),
               print_ln(list_index_exists(value_of(xs), lit_int(4))), print_ln(list_access(value_of(xs), lit_int(4))),
               var_dec(ys), list_slice(ys, value_of(xs), lit_int(1), std::nullopt, lit_int(2)), print_ln(value_of(ys)),
               list_slice(ys, value_of(xs), std::nullopt, lit_int(2), std::nullopt), print_ln(value_of(ys))}),
        block({print_ln(list_size(args_list())), print_ln(arg_exists(lit_int(1))),
               print(arg_at(lit_int(0))), print_str_ln("!")}),
    }));
    return package(prog("tour", {build_module("Shapes", {}, {}, {shape, square}),
                                 build_module("Tour", {}, {half, main}, {})}),
                   {});
}

} // namespace testutil
