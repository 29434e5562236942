#include "gool/patterns.hpp"

#include <cctype>
#include <set>

#include "../ir/checks.hpp"
#include "gool/build.hpp"
#include "gool/error.hpp"

namespace gool {

namespace {

Expr make_expr(ExprNode node, Type type, int precedence = kAtomicPrecedence) {
    return Expr{std::move(node), std::move(type), precedence};
}

std::string capitalized(std::string_view name) {
    std::string out(name);
    if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
}

Variable observer_list(const Type& element) { return list_var(std::string(kObserverListName), element); }

} // namespace

// Library functions --------------------------------------------------------------

Expr math_fn(MathFn fn, Expr arg) {
    if (!arg.type.is_numeric()) {
        throw Error(ErrorKind::TypeMismatch,
                    std::string(to_string(fn)) + " needs a numeric argument, got " + arg.type.describe());
    }
    Type result = fn == MathFn::Abs ? arg.type : Type::floating();
    return make_expr(MathCall{fn, Box<Expr>(std::move(arg))}, std::move(result));
}

// Command-line arguments -----------------------------------------------------------

Expr args_list() { return make_expr(ArgsList{}, Type::list(Type::string())); }

Expr arg_at(Expr index) {
    detail::require_int(index, "argument index");
    return make_expr(ArgAt{Box<Expr>(std::move(index))}, Type::string());
}

Expr arg_exists(Expr index) {
    detail::require_int(index, "argument index");
    return make_expr(ArgExists{Box<Expr>(std::move(index))}, Type::boolean());
}

// Lists ----------------------------------------------------------------------------

Expr list_access(Expr list, Expr index) {
    detail::require_list(list, "listAccess");
    detail::require_int(index, "listAccess index");
    Type elem = list.type.element();
    return make_expr(ListAccess{Box<Expr>(std::move(list)), Box<Expr>(std::move(index))}, std::move(elem));
}

Stmt list_set(Expr list, Expr index, Expr value) {
    detail::require_list(list, "listSet");
    detail::require_int(index, "listSet index");
    detail::require_assignable(list.type.element(), value.type, "listSet value");
    return Stmt{ListSet{std::move(list), std::move(index), std::move(value)}};
}

Expr list_size(Expr list) {
    detail::require_list(list, "listSize");
    return make_expr(ListSize{Box<Expr>(std::move(list))}, Type::integer());
}

Expr list_append(Expr list, Expr value) {
    detail::require_list(list, "listAppend");
    detail::require_assignable(list.type.element(), value.type, "listAppend value");
    return make_expr(ListAppend{Box<Expr>(std::move(list)), Box<Expr>(std::move(value))}, Type::void_type());
}

Expr list_index_exists(Expr list, Expr index) {
    detail::require_list(list, "listIndexExists");
    detail::require_int(index, "listIndexExists index");
    return make_expr(ListIndexExists{Box<Expr>(std::move(list)), Box<Expr>(std::move(index))}, Type::boolean());
}

Expr index_of(Expr list, Expr value) {
    detail::require_list(list, "indexOf");
    detail::require_assignable(list.type.element(), value.type, "indexOf value");
    return make_expr(IndexOf{Box<Expr>(std::move(list)), Box<Expr>(std::move(value))}, Type::integer());
}

Stmt list_slice(const Variable& target, Expr source, std::optional<Expr> start, std::optional<Expr> end,
                std::optional<Expr> step) {
    if (!target.type.is_list()) {
        throw Error(ErrorKind::TypeMismatch, "listSlice target " + target.name + " is not a list");
    }
    detail::require_list(source, "listSlice source");
    if (!(source.type == target.type)) {
        throw Error(ErrorKind::TypeMismatch, "listSlice from " + source.type.describe() + " into " +
                                                 target.type.describe());
    }
    for (const auto* bound : {&start, &end, &step}) {
        if (*bound) detail::require_int(**bound, "listSlice bound");
    }
    return Stmt{ListSlice{target, std::move(source), std::move(start), std::move(end), std::move(step)}};
}

// Printing and reading ----------------------------------------------------------------

Stmt print(Expr value) { return Stmt{Print{false, std::move(value)}}; }
Stmt print_ln(Expr value) { return Stmt{Print{true, std::move(value)}}; }
Stmt print_str(std::string text) { return print(lit_string(std::move(text))); }
Stmt print_str_ln(std::string text) { return print_ln(lit_string(std::move(text))); }

Stmt read_line(const Variable& target) {
    if (!target.type.is(TypeKind::String)) {
        throw Error(ErrorKind::TypeMismatch, "readLine target " + target.name + " must be a string");
    }
    return Stmt{Read{ReadKind::Line, target}};
}

Stmt read_int(const Variable& target) {
    if (!target.type.is(TypeKind::Int)) {
        throw Error(ErrorKind::TypeMismatch, "readInt target " + target.name + " must be an int");
    }
    return Stmt{Read{ReadKind::Int, target}};
}

// In/out procedures --------------------------------------------------------------------

Method in_out_func(std::string name, Scope scope, Binding binding, std::vector<Variable> ins,
                   std::vector<Variable> outs, std::vector<Variable> inouts, Body b) {
    if (outs.empty() && inouts.empty()) {
        throw Error(ErrorKind::SignatureMismatch, "inOutFunc " + name + " needs at least one output");
    }
    std::vector<Param> params;
    for (const auto& v : inouts) params.push_back(pointer_param(v));
    for (const auto& v : ins) params.push_back(param(v));
    for (const auto& v : outs) params.push_back(pointer_param(v));
    Method m = detail::make_method(std::move(name), scope, binding, Type::void_type(), std::move(params),
                                   std::move(b));
    m.in_out = InOutSpec{std::move(ins), std::move(outs), std::move(inouts)};
    return m;
}

Stmt in_out_call(const Method& callee, std::vector<Expr> ins, std::vector<Variable> outs,
                 std::vector<Variable> inouts, std::string library) {
    if (!callee.in_out) {
        throw Error(ErrorKind::SignatureMismatch, callee.name + " was not built with inOutFunc");
    }
    const auto& sig = *callee.in_out;
    auto arity = [&](std::size_t got, std::size_t want, std::string_view role) {
        if (got != want) {
            throw Error(ErrorKind::SignatureMismatch, "inOutCall " + callee.name + " passes " + std::to_string(got) +
                                                          " " + std::string(role) + " arguments, expected " +
                                                          std::to_string(want));
        }
    };
    arity(ins.size(), sig.ins.size(), "input");
    arity(outs.size(), sig.outs.size(), "output");
    arity(inouts.size(), sig.inouts.size(), "in-out");
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (!detail::assignable(sig.ins[i].type, ins[i].type)) {
            throw Error(ErrorKind::SignatureMismatch, "inOutCall " + callee.name + " input " + sig.ins[i].name +
                                                          " expects " + sig.ins[i].type.describe());
        }
    }
    for (std::size_t i = 0; i < outs.size(); ++i) {
        if (!(sig.outs[i].type == outs[i].type)) {
            throw Error(ErrorKind::SignatureMismatch, "inOutCall " + callee.name + " output " + sig.outs[i].name +
                                                          " expects " + sig.outs[i].type.describe());
        }
    }
    for (std::size_t i = 0; i < inouts.size(); ++i) {
        if (!(sig.inouts[i].type == inouts[i].type)) {
            throw Error(ErrorKind::SignatureMismatch, "inOutCall " + callee.name + " in-out " +
                                                          sig.inouts[i].name + " expects " +
                                                          sig.inouts[i].type.describe());
        }
    }
    if (!library.empty()) require_identifier(library, "library name");
    return Stmt{InOutCall{callee.name, std::move(library), std::move(ins), std::move(outs), std::move(inouts)}};
}

// Getters and setters -------------------------------------------------------------------

std::string getter_name(std::string_view var_name) { return "get" + capitalized(var_name); }
std::string setter_name(std::string_view var_name) { return "set" + capitalized(var_name); }

Method get_method(std::string class_name, const Variable& v) {
    return pub_method(std::move(class_name), getter_name(v.name), v.type, {},
                      one_liner(return_stmt(value_of(self_var(v.name, v.type)))));
}

Method set_method(std::string class_name, const Variable& v) {
    Variable arg = var(v.name, v.type);
    return pub_method(std::move(class_name), setter_name(v.name), Type::void_type(), {param(arg)},
                      one_liner(assign(self_var(v.name, v.type), value_of(arg))));
}

Expr get(Expr object, const Variable& v) { return obj_method_call(std::move(object), getter_name(v.name), v.type, {}); }

Stmt set(Expr object, const Variable& v, Expr value) {
    detail::require_assignable(v.type, value.type, "set " + v.name);
    std::vector<Expr> args;
    args.push_back(std::move(value));
    return expr_stmt(obj_method_call(std::move(object), setter_name(v.name), Type::void_type(), std::move(args)));
}

// Strategy ------------------------------------------------------------------------------

Stmt run_strategy(const std::string& chosen, std::vector<std::pair<std::string, Body>> strategies,
                  std::optional<Variable> result_var, std::optional<Expr> result_value) {
    if (result_var.has_value() != result_value.has_value()) {
        throw Error(ErrorKind::SignatureMismatch, "runStrategy result variable and value must be given together");
    }
    for (auto& [name, b] : strategies) {
        if (name != chosen) continue;
        Body out = std::move(b);
        if (result_var) out.blocks.push_back(block({assign(*result_var, std::move(*result_value))}));
        return Stmt{Inline{std::move(out)}};
    }
    throw Error(ErrorKind::UnknownStrategy, "strategy \"" + chosen + "\" is not in the table");
}

// Observer ------------------------------------------------------------------------------

Stmt init_observer_list(Type element, std::vector<Expr> initial) {
    for (const auto& e : initial) detail::require_assignable(element, e.type, "initObserverList value");
    return Stmt{InitObserverList{std::move(element), std::move(initial)}};
}

Stmt add_observer(Expr value) { return Stmt{AddObserver{std::move(value)}}; }

Stmt notify_observers(std::string method, Type element) {
    require_identifier(method, "observer method");
    if (!element.is(TypeKind::Object)) {
        throw Error(ErrorKind::TypeMismatch, "observers must be objects, got " + element.describe());
    }
    return Stmt{NotifyObservers{std::move(method), std::move(element)}};
}

// State ---------------------------------------------------------------------------------

Stmt init_state(std::string name, std::string label) {
    require_identifier(name, "state variable");
    return Stmt{InitState{std::move(name), std::move(label)}};
}

Stmt change_state(std::string name, std::string label) {
    require_identifier(name, "state variable");
    return Stmt{ChangeState{std::move(name), std::move(label)}};
}

Stmt check_state(std::string name, std::vector<std::pair<std::string, Body>> cases, Body fallback) {
    require_identifier(name, "state variable");
    std::set<std::string> labels;
    CheckState node{std::move(name), {}, std::move(fallback)};
    for (auto& [label, b] : cases) {
        if (!labels.insert(label).second) {
            throw Error(ErrorKind::DuplicateStateLabel, "state \"" + label + "\" checked twice");
        }
        node.cases.push_back(StateCase{std::move(label), std::move(b)});
    }
    return Stmt{std::move(node)};
}

// Lowerings -----------------------------------------------------------------------------

std::string NameSupply::fresh(const std::string& base) {
    for (auto& [name, count] : used_) {
        if (name == base) return base + std::to_string(++count);
    }
    used_.emplace_back(base, 1);
    return base;
}

Body lower_list_print(const Expr& list, bool newline, int depth) {
    using namespace ops;
    Variable index = var("list_i" + std::to_string(depth), Type::integer());
    auto print_element = [&](Expr element) -> Stmt {
        if (element.type.is_list()) return Stmt{Inline{lower_list_print(element, false, depth + 1)}};
        return print(std::move(element));
    };
    std::vector<Stmt> stmts;
    stmts.push_back(print_str("["));
    stmts.push_back(for_loop(var_dec_def(index, lit_int(0)), value_of(index) < list_size(list) - lit_int(1),
                             increment(index),
                             body_statements({print_element(list_access(list, value_of(index))), print_str(", ")})));
    stmts.push_back(if_no_else(
        {{list_size(list) > lit_int(0), one_liner(print_element(list_access(list, list_size(list) - lit_int(1))))}}));
    stmts.push_back(newline ? print_str_ln("]") : print_str("]"));
    return body_statements(std::move(stmts));
}

namespace {

std::optional<std::int64_t> int_literal(const std::optional<Expr>& e) {
    if (!e) return std::nullopt;
    if (const auto* lit = std::get_if<Literal>(&e->node)) {
        if (const auto* i = std::get_if<std::int64_t>(&lit->value)) return *i;
    }
    if (const auto* neg = std::get_if<Unary>(&e->node); neg && neg->op == UnaryOp::Negate) {
        if (auto inner = int_literal(neg->operand.get())) return -*inner;
    }
    return std::nullopt;
}

} // namespace

Body lower_list_slice(const ListSlice& slice, const std::string& temp_name, const std::string& index_name) {
    using namespace ops;
    const Type& elem = slice.target.type.element();
    Variable temp = list_var(temp_name, elem);
    Variable index = var(index_name, Type::integer());
    auto step = int_literal(slice.step);
    bool descending = step && *step < 0;

    Expr start = slice.start ? *slice.start : (descending ? list_size(slice.source) - lit_int(1) : lit_int(0));
    Expr end = slice.end ? *slice.end : (descending ? -lit_int(1) : list_size(slice.source));
    Expr cond = descending ? value_of(index) > end : value_of(index) < end;
    Stmt update = !slice.step || step == 1 ? increment(index)
                  : step == -1             ? decrement(index)
                                           : add_assign(index, *slice.step);

    std::vector<Stmt> stmts;
    stmts.push_back(var_dec_def(temp, lit_list(elem, {})));
    stmts.push_back(for_loop(var_dec_def(index, std::move(start)), std::move(cond), std::move(update),
                             one_liner(expr_stmt(list_append(value_of(temp),
                                                             list_access(slice.source, value_of(index)))))));
    stmts.push_back(assign(slice.target, value_of(temp)));
    return body_statements(std::move(stmts));
}

Stmt lower_pattern(const Stmt& s) {
    return std::visit(
        [&](const auto& n) -> Stmt {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, InitObserverList>) {
                return var_dec_def(observer_list(n.element), lit_list(n.element, n.initial));
            } else if constexpr (std::is_same_v<T, AddObserver>) {
                return expr_stmt(list_append(value_of(observer_list(n.value.type)), n.value));
            } else if constexpr (std::is_same_v<T, NotifyObservers>) {
                Variable observer = var("observer", n.element);
                return for_each(observer, value_of(observer_list(n.element)),
                                one_liner(expr_stmt(obj_method_call(value_of(observer), n.method,
                                                                    Type::void_type(), {}))));
            } else if constexpr (std::is_same_v<T, InitState>) {
                return var_dec_def(var(n.name, Type::string()), lit_string(n.label));
            } else if constexpr (std::is_same_v<T, ChangeState>) {
                return assign(var(n.name, Type::string()), lit_string(n.label));
            } else if constexpr (std::is_same_v<T, CheckState>) {
                if (n.cases.empty()) return Stmt{Inline{n.fallback}};
                std::vector<std::pair<Expr, Body>> cases;
                for (const auto& c : n.cases) cases.emplace_back(lit_string(c.label), c.body);
                return switch_stmt(value_of(var(n.name, Type::string())), std::move(cases), n.fallback);
            } else {
                return s;
            }
        },
        s.node);
}

} // namespace gool
