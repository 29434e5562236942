// Program-tree builders: typing, identifiers, structural invariants and the
// errors each builder raises.

#include <functional>

#include <doctest.h>

#include "gool/build.hpp"
#include "gool/error.hpp"
#include "gool/patterns.hpp"

using namespace gool;
using namespace gool::ops;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::DecodeError;
}

Variable i(const char* name) { return var(name, Type::integer()); }

} // namespace

TEST_CASE("types carry exactly their payload") {
    CHECK(Type::list(Type::integer()).element() == Type::integer());
    CHECK(Type::object("Observer").class_name() == "Observer");
    CHECK(Type::list(Type::list(Type::floating())).describe() == "list(list(float))");
    CHECK(kind_of([] { (void)Type::integer().element(); }) == ErrorKind::TypeMismatch);
    CHECK(kind_of([] { (void)Type::object(""); }) == ErrorKind::InvalidIdentifier);
    CHECK(numeric_join(Type::integer(), Type::floating()) == Type::floating());
    CHECK(numeric_join(Type::integer(), Type::integer()) == Type::integer());
}

TEST_CASE("identifiers are validated") {
    CHECK(is_identifier("price"));
    CHECK(is_identifier("_x1"));
    CHECK_FALSE(is_identifier("1x"));
    CHECK_FALSE(is_identifier("a-b"));
    CHECK_FALSE(is_identifier(""));
    CHECK(kind_of([] { (void)var("not valid", Type::integer()); }) == ErrorKind::InvalidIdentifier);
}

TEST_CASE("literals") {
    CHECK(lit_int(3).type == Type::integer());
    CHECK(lit_float(2.5).type == Type::floating());
    CHECK(lit_string("s").type == Type::string());
    CHECK(lit_char('c').type == Type::character());
    CHECK(lit_true().type == Type::boolean());
    CHECK(kind_of([] { (void)lit_float(1.0 / 0.0); }) == ErrorKind::InvalidLiteral);
    Expr l = lit_list(Type::floating(), {lit_float(1.0), lit_int(2)});
    CHECK(l.type == Type::list(Type::floating()));
    CHECK(kind_of([] { (void)lit_list(Type::integer(), {lit_string("x")}); }) == ErrorKind::TypeMismatch);
}

TEST_CASE("operators type their results and record precedence") {
    Expr sum = lit_int(1) + lit_int(2);
    CHECK(sum.type == Type::integer());
    CHECK((lit_int(1) + lit_float(2.0)).type == Type::floating());
    CHECK((lit_int(1) < lit_int(2)).type == Type::boolean());
    CHECK((lit_int(1) * lit_int(2)).precedence > sum.precedence);
    CHECK(kind_of([] { (void)(lit_int(1) + lit_true()); }) == ErrorKind::TypeMismatch);
    CHECK(kind_of([] { (void)!lit_int(1); }) == ErrorKind::TypeMismatch);
    CHECK(kind_of([] { (void)(lit_true() && lit_int(1)); }) == ErrorKind::TypeMismatch);
    CHECK(kind_of([] { (void)inline_if(lit_true(), lit_int(1), lit_string("x")); }) == ErrorKind::TypeMismatch);
}

TEST_CASE("symbolic operator spellings resolve") {
    CHECK(apply_binary("#+", lit_int(1), lit_int(2)) == lit_int(1) + lit_int(2));
    CHECK(apply_unary("?!", lit_true()) == !lit_true());
    CHECK(kind_of([] { (void)apply_binary("#?", lit_int(1), lit_int(2)); }) == ErrorKind::TypeMismatch);
}

TEST_CASE("assignments check their operands") {
    Variable x = i("x");
    CHECK(kind_of([&] { (void)assign(x, lit_string("s")); }) == ErrorKind::TypeMismatch);
    CHECK(kind_of([&] { (void)increment(var("s", Type::string())); }) == ErrorKind::TypeMismatch);
    CHECK(kind_of([&] { (void)sub_assign(var("s", Type::string()), lit_string("t")); }) == ErrorKind::TypeMismatch);
    CHECK_NOTHROW((void)add_assign(var("s", Type::string()), lit_string("t")));
    CHECK_NOTHROW((void)assign(var("f", Type::floating()), lit_int(1)));
    auto s = assign(x, lit_int(1));
    CHECK(std::get<Assign>(s.node).mode == AssignMode::Set);
    CHECK_FALSE(check_arity(s).has_value());
}

TEST_CASE("conditionals need branches and literal case labels") {
    CHECK(kind_of([] { (void)if_no_else({}); }) == ErrorKind::EmptyConditional);
    CHECK(kind_of([] { (void)switch_stmt(lit_int(1), {}, body({})); }) == ErrorKind::EmptyConditional);
    CHECK(kind_of([] {
              (void)switch_stmt(value_of(i("x")), {{value_of(i("y")), body({})}}, body({}));
          }) == ErrorKind::TypeMismatch);
    CHECK(kind_of([] { (void)switch_stmt(value_of(i("x")), {{lit_string("a"), body({})}}, body({})); }) ==
          ErrorKind::TypeMismatch);
}

TEST_CASE("loops check their variables") {
    Variable xs = list_var("xs", Type::integer());
    CHECK(kind_of([&] { (void)for_each(var("s", Type::string()), value_of(xs), body({})); }) == ErrorKind::TypeMismatch);
    CHECK(kind_of([&] { (void)for_each(i("x"), lit_int(1), body({})); }) == ErrorKind::TypeMismatch);
    CHECK(kind_of([] { (void)for_range(var("s", Type::string()), lit_int(0), lit_int(1), lit_int(1), body({})); }) ==
          ErrorKind::TypeMismatch);
    CHECK(kind_of([] { (void)while_loop(lit_int(1), body({})); }) == ErrorKind::TypeMismatch);
}

TEST_CASE("methods reject duplicate parameters") {
    CHECK(kind_of([] {
              (void)function("f", Scope::Public, Binding::Static, Type::void_type(), {param(i("a")), param(i("a"))},
                             body({}));
          }) == ErrorKind::DuplicateParam);
}

TEST_CASE("classes own their methods and guard constants") {
    Variable c = i("limit");
    CHECK(kind_of([&] {
              (void)pub_class("K", std::nullopt, {const_var(Scope::Public, Binding::Static, c, lit_int(3))},
                              {pub_method("K", "bump", Type::void_type(), {},
                                          one_liner(assign(class_var("K", "limit", Type::integer()), lit_int(4))))});
          }) == ErrorKind::ConstAssignment);
    CHECK(kind_of([] {
              Method m = pub_method("K", "m", Type::void_type(), {}, body({}));
              (void)pub_class("K", std::nullopt, {}, {m, m});
          }) == ErrorKind::DuplicateMethod);
    CHECK(kind_of([] {
              (void)pub_class("K", std::nullopt, {}, {pub_method("Other", "m", Type::void_type(), {}, body({}))});
          }) == ErrorKind::TypeMismatch);
    ClassDecl k = pub_class("K", std::string("Base"), {}, {pub_method("K", "m", Type::void_type(), {}, body({}))});
    CHECK(k.methods.front().containing_class == std::optional<std::string>("K"));
    CHECK(k.parent == std::optional<std::string>("Base"));
}

TEST_CASE("modules and programs") {
    Method main = main_function(body({}));
    Module m = build_module("M", {}, {main}, {});
    CHECK(m.is_main_module);
    CHECK_FALSE(build_module("N", {}, {}, {}).is_main_module);
    CHECK(build_module("N", {}, {}, {}).empty());
    CHECK(kind_of([&] { (void)build_module("M", {}, {main, main}, {}); }) == ErrorKind::DuplicateMethod);
    CHECK(kind_of([&] { (void)prog("p", {m, build_module("M", {}, {}, {})}); }) == ErrorKind::DuplicateModule);
    CHECK(kind_of([&] { (void)prog("p", {m, build_module("M2", {}, {main}, {})}); }) == ErrorKind::MultipleMain);
    Package pkg = package(prog("p", {m}), {makefile(false)});
    CHECK(pkg.main_module() == &pkg.modules.front());
    CHECK(kind_of([&] { (void)package(prog("p", {m}), {makefile(false), makefile(true)}); }) == ErrorKind::DuplicateAuxFile);
}

TEST_CASE("documentation must describe declared parameters") {
    Method f = function("f", Scope::Public, Binding::Static, Type::void_type(), {param(i("a"))}, body({}));
    CHECK_NOTHROW((void)doc_func("d", {{"a", "the a"}}, std::nullopt, f));
    CHECK(kind_of([&] { (void)doc_func("d", {{"b", "no such"}}, std::nullopt, f); }) == ErrorKind::UnknownParamDoc);
}

TEST_CASE("in/out procedures") {
    Method f = in_out_func("f", Scope::Public, Binding::Static, {i("a")}, {i("b")}, {i("c")}, body({}));
    REQUIRE(f.in_out.has_value());
    REQUIRE(f.params.size() == 3);
    CHECK(f.params[0].var.name == "c");
    CHECK(f.params[0].by_reference);
    CHECK(f.params[1].var.name == "a");
    CHECK_FALSE(f.params[1].by_reference);
    CHECK(f.params[2].var.name == "b");
    CHECK(f.params[2].by_reference);
    CHECK_NOTHROW((void)in_out_call(f, {lit_int(1)}, {i("b")}, {i("c")}));
    CHECK(kind_of([&] { (void)in_out_call(f, {}, {i("b")}, {i("c")}); }) == ErrorKind::SignatureMismatch);
    CHECK(kind_of([&] { (void)in_out_call(f, {lit_string("s")}, {i("b")}, {i("c")}); }) == ErrorKind::SignatureMismatch);
    Method plain = function("g", Scope::Public, Binding::Static, Type::void_type(), {}, body({}));
    CHECK(kind_of([&] { (void)in_out_call(plain, {}, {}, {}); }) == ErrorKind::SignatureMismatch);
}

TEST_CASE("getters and setters") {
    Variable foo = i("foo");
    CHECK(getter_name("foo") == "getFoo");
    CHECK(setter_name("foo") == "setFoo");
    Method g = get_method("FooClass", foo);
    CHECK(g.return_type == Type::integer());
    Method s = set_method("FooClass", foo);
    REQUIRE(s.params.size() == 1);
    CHECK(s.params[0].var == foo);
    CHECK(kind_of([&] { (void)set(new_obj(Type::object("FooClass"), {}), foo, lit_string("x")); }) == ErrorKind::TypeMismatch);
}

TEST_CASE("design pattern builders") {
    Type obs = Type::object("Observer");
    CHECK(kind_of([] { (void)run_strategy("missing", {{"a", body({})}}, std::nullopt, std::nullopt); }) ==
          ErrorKind::UnknownStrategy);
    Stmt chosen = run_strategy("a", {{"a", one_liner(print_str_ln("A"))}, {"b", one_liner(print_str_ln("B"))}},
                               std::nullopt, std::nullopt);
    REQUIRE(std::holds_alternative<Inline>(chosen.node));
    CHECK(std::get<Inline>(chosen.node).body == one_liner(print_str_ln("A")));
    CHECK(kind_of([] { (void)check_state("s", {{"A", body({})}, {"A", body({})}}, body({})); }) ==
          ErrorKind::DuplicateStateLabel);
    CHECK(kind_of([] { (void)notify_observers("m", Type::integer()); }) == ErrorKind::TypeMismatch);
    CHECK(kind_of([&] { (void)main_function(one_liner(add_observer(new_obj(obs, {})))); }) ==
          ErrorKind::ObserverNotInitialized);
    CHECK_NOTHROW((void)main_function(body_statements({init_observer_list(obs, {}), add_observer(new_obj(obs, {}))})));
}

TEST_CASE("fresh names") {
    NameSupply names;
    CHECK(names.fresh("temp") == "temp");
    CHECK(names.fresh("temp") == "temp2");
    CHECK(names.fresh("temp") == "temp3");
    CHECK(names.fresh("other") == "other");
}
