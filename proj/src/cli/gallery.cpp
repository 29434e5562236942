#include "gool/gallery.hpp"

#include "gool/build.hpp"
#include "gool/patterns.hpp"

namespace gool {
namespace {

using namespace ops;

Package single_module(const std::string& name, std::vector<Method> functions, std::vector<ClassDecl> classes = {}) {
    return package(prog(name, {build_module(name, {}, std::move(functions), std::move(classes))}), {});
}

GalleryEntry hello_world() {
    Variable i = var("i", Type::integer());
    Method main = main_function(body({
        block({print_str_ln("Hello, World!")}),
        block({var_dec_def(i, lit_int(1)),
               while_loop(value_of(i) <= lit_int(3), body_statements({print_ln(value_of(i)), increment(i)}))}),
    }));
    return {"helloWorld", single_module("HelloWorld", {main}), {}, {}};
}

GalleryEntry add_function() {
    Variable a = var("a", Type::integer());
    Variable b = var("b", Type::integer());
    Method add = function("add", Scope::Public, Binding::Static, Type::integer(), {param(a), param(b)},
                          one_liner(return_stmt(value_of(a) + value_of(b))));
    Method main = main_function(one_liner(print_ln(func_app("add", Type::integer(), {lit_int(3), lit_int(4)}))));
    return {"addFunction", single_module("AddFunction", {add, main}), {}, {}};
}

GalleryEntry sign_test() {
    Variable foo = var("foo", Type::integer());
    Stmt sign = if_cond({{value_of(foo) > lit_int(0), one_liner(print_str_ln("foo is positive"))},
                         {value_of(foo) < lit_int(0), one_liner(print_str_ln("foo is negative"))}},
                        one_liner(print_str_ln("foo is zero")));
    Method main = main_function(one_liner(for_range(foo, -lit_int(1), lit_int(1), lit_int(1), one_liner(sign))));
    return {"signTest", single_module("SignTest", {main}), {}, {}};
}

GalleryEntry slice_demo() {
    Variable ages = list_var("ages", Type::floating());
    Variable some = list_var("someAges", Type::floating());
    Variable evens = list_var("evenAges", Type::floating());
    Variable age = var("age", Type::floating());
    Variable total = var("total", Type::floating());
    Expr agesv = value_of(ages);
    Method main = main_function(body({
        block({var_dec_def(ages, lit_list(Type::floating(), {lit_float(10.0), lit_float(22.5), lit_float(31.0),
                                                             lit_float(45.0), lit_float(60.0)})),
               print_ln(agesv)}),
        block({var_dec(some), list_slice(some, agesv, lit_int(1), lit_int(3), std::nullopt), print_ln(value_of(some))}),
        block({var_dec(evens), list_slice(evens, agesv, std::nullopt, std::nullopt, lit_int(2)),
               print_ln(value_of(evens))}),
        block({expr_stmt(list_append(agesv, lit_float(70.5))), print_ln(list_size(agesv)),
               list_set(agesv, lit_int(0), lit_float(11.0)), print_ln(at(agesv, lit_int(0))),
               print_ln(index_of(agesv, lit_float(45.0))), print_ln(list_index_exists(agesv, lit_int(10)))}),
        block({var_dec_def(total, lit_float(0.0)),
               for_each(age, agesv, one_liner(add_assign(total, value_of(age)))), print_ln(value_of(total))}),
    }));
    return {"sliceDemo", single_module("SliceDemo", {main}), {}, {}};
}

GalleryEntry list_print_demo() {
    Variable nums = list_var("nums", Type::integer());
    Variable none = list_var("none", Type::integer());
    Variable nested = list_var("nested", Type::list(Type::integer()));
    Variable flags = list_var("flags", Type::boolean());
    Variable words = list_var("words", Type::string());
    Method main = main_function(body({
        block({var_dec_def(nums, lit_list(Type::integer(), {lit_int(1), lit_int(2), lit_int(3)})),
               print_ln(value_of(nums))}),
        block({var_dec_def(none, lit_list(Type::integer(), {})), print_ln(value_of(none))}),
        block({var_dec_def(nested, lit_list(Type::list(Type::integer()),
                                            {lit_list(Type::integer(), {lit_int(1), lit_int(2)}),
                                             lit_list(Type::integer(), {lit_int(3)})})),
               print_ln(value_of(nested))}),
        block({var_dec_def(flags, lit_list(Type::boolean(), {lit_true(), lit_false()})), print(value_of(flags)),
               print_str_ln(" flags")}),
        block({var_dec_def(words, lit_list(Type::string(), {lit_string("a"), lit_string("b")})),
               print_ln(value_of(words))}),
    }));
    return {"listPrintDemo", single_module("ListPrintDemo", {main}), {}, {}};
}

GalleryEntry apply_discount() {
    Variable price = var("price", Type::integer());
    Variable discount = var("discount", Type::integer());
    Variable affordable = var("isAffordable", Type::boolean());
    Method f = doc_func("Applies a discount to a price and checks whether the result is affordable",
                        {{"price", "the original price, updated in place"}, {"discount", "the amount to subtract"}},
                        "whether the discounted price is below 20",
                        in_out_func("applyDiscount", Scope::Public, Binding::Static, {discount}, {affordable}, {price},
                                    body_statements({sub_assign(price, value_of(discount)),
                                                     assign(affordable, value_of(price) < lit_float(20.0))})));
    Method main = main_function(body({
        block({var_dec_def(price, lit_int(25)), var_dec_def(discount, lit_int(10)), var_dec(affordable)}),
        block({in_out_call(f, {value_of(discount)}, {affordable}, {price})}),
        block({print_ln(value_of(price)), print_ln(value_of(affordable))}),
    }));
    return {"applyDiscount", single_module("ApplyDiscount", {f, main}), {}, {}};
}

GalleryEntry foo_class_get_set() {
    Variable foo = var("foo", Type::integer());
    Type foo_class = Type::object("FooClass");
    Variable obj = var("fooObj", foo_class);
    ClassDecl cls = pub_class("FooClass", std::nullopt, {priv_mvar(foo, lit_int(0))},
                              {get_method("FooClass", foo), set_method("FooClass", foo)});
    Method main = main_function(body({
        block({var_dec_def(obj, new_obj(foo_class, {})), print_ln(get(value_of(obj), foo))}),
        block({set(value_of(obj), foo, lit_int(42)), print_ln(get(value_of(obj), foo))}),
    }));
    return {"fooClassGetSet",
            package(prog("fooClassGetSet", {build_module("FooClass", {}, {}, {cls}),
                                             build_module("GetSetMain", {}, {main}, {})}),
                    {}),
            {},
            {}};
}

GalleryEntry pattern_test() {
    Type obs_type = Type::object("Observer");
    Variable x = var("x", Type::integer());
    ClassDecl observer =
        pub_class("Observer", std::nullopt, {priv_mvar(x, lit_int(5))},
                  {pub_method("Observer", "printNum", Type::void_type(), {},
                              one_liner(print_ln(value_of(self_var("x", Type::integer())))))});

    Variable n = var("n", Type::integer());
    Variable obs1 = var("obs1", obs_type);
    Variable obs2 = var("obs2", obs_type);
    Variable total = var("total", Type::integer());
    Method main = main_function(body({
        block({var_dec(n), init_state("myFSM", "Off"), change_state("myFSM", "On"),
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
    return {"patternTest",
            package(prog("patternTest", {build_module("Observer", {}, {}, {observer}),
                                         build_module("PatternTest", {}, {main}, {})}),
                    {}),
            {},
            {}};
}

GalleryEntry args_echo() {
    Variable all = list_var("all", Type::string());
    Method main = main_function(body({
        block({if_cond({{arg_exists(lit_int(0)), one_liner(print_ln(arg_at(lit_int(0))))}},
                       one_liner(print_str_ln("no arguments")))}),
        block({var_dec_def(all, args_list()), print_ln(list_size(value_of(all))), print_ln(value_of(all))}),
    }));
    return {"argsEcho", single_module("ArgsEcho", {main}), {"hello"}, {}};
}

} // namespace

const std::vector<GalleryEntry>& gallery() {
    static const std::vector<GalleryEntry> entries = {
        hello_world(),    add_function(),      sign_test(),    slice_demo(), list_print_demo(),
        apply_discount(), foo_class_get_set(), pattern_test(), args_echo(),
    };
    return entries;
}

const GalleryEntry* find_example(std::string_view name) {
    for (const auto& e : gallery()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

} // namespace gool
