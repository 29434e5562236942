// Byte-exact comparison of rendered fragments against the reference listings
// in tests/golden. Listings that were split with manual line breaks are
// stored joined.

#include <doctest.h>

#include "gool/backend.hpp"
#include "gool/build.hpp"
#include "gool/patterns.hpp"
#include "support/test_util.hpp"

using namespace gool;
using namespace gool::ops;
using testutil::golden;

namespace {

const char* suffix(Target t) {
    switch (t) {
    case Target::Python: return "python";
    case Target::Java: return "java";
    case Target::CSharp: return "csharp";
    case Target::Cpp: return "cpp";
    }
    return "";
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')) + "\n"; }

} // namespace

TEST_CASE("for-each loop headers") {
    Variable age = var("age", Type::integer());
    Stmt loop = for_each(age, value_of(list_var("ages", Type::integer())), one_liner(print_ln(value_of(age))));
    for (Target t : kAllTargets) {
        CAPTURE(to_string(t));
        std::string text = make_backend(t)->render_statement(loop).str();
        CHECK(first_line(text) == golden(std::string("foreach_") + suffix(t) + ".txt"));
    }
}

TEST_CASE("list slice in Python and Java") {
    Variable some = list_var("someAges", Type::floating());
    Stmt slice = list_slice(some, value_of(list_var("ages", Type::floating())), lit_int(1), lit_int(3), std::nullopt);
    CHECK(make_backend(Target::Python)->render_statement(slice).str() + "\n" == golden("slice_python.txt"));
    CHECK(make_backend(Target::Java)->render_statement(slice).str() + "\n" == golden("slice_java.txt"));
}

TEST_CASE("C++ list printing loop") {
    Stmt p = print_ln(value_of(list_var("myName", Type::integer())));
    CHECK(make_backend(Target::Cpp)->render_statement(p).str() + "\n" == golden("listprint_cpp.txt"));
}

TEST_CASE("applyDiscount in every target") {
    Method f = testutil::apply_discount();
    for (Target t : kAllTargets) {
        CAPTURE(to_string(t));
        CHECK(make_backend(t)->render_method(f).str() + "\n" == golden(std::string("applydiscount_") + suffix(t) + ".txt"));
    }
}

TEST_CASE("setFoo in every target") {
    Method m = set_method("FooClass", var("foo", Type::integer()));
    for (Target t : kAllTargets) {
        CAPTURE(to_string(t));
        CHECK(make_backend(t)->render_method(m).str() + "\n" == golden(std::string("setfoo_") + suffix(t) + ".txt"));
    }
}

TEST_CASE("sine in every target") {
    Expr e = gool::sin(value_of(var("foo", Type::floating())));
    for (Target t : kAllTargets) {
        CAPTURE(to_string(t));
        CHECK(make_backend(t)->render_expr(e) + "\n" == golden(std::string("sine_") + suffix(t) + ".txt"));
    }
}

TEST_CASE("first command-line argument in Python") {
    CHECK(make_backend(Target::Python)->render_expr(arg_at(lit_int(0))) + "\n" == golden("argv_python.txt"));
}
