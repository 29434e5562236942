#include "common.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "gool/auxfiles.hpp"
#include "gool/build.hpp"
#include "gool/error.hpp"

namespace gool::detail {

std::string format_int(std::int64_t v) { return std::to_string(v); }

std::string format_float(double v) {
    if (std::isnan(v) || std::isinf(v)) {
        throw Error(ErrorKind::InvalidLiteral, "non-finite float literal");
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

namespace {

void escape_into(std::string& out, char c, char quote) {
    switch (c) {
    case '\\': out += "\\\\"; break;
    case '\n': out += "\\n"; break;
    case '\t': out += "\\t"; break;
    case '\r': out += "\\r"; break;
    default:
        if (c == quote) out += '\\';
        out += c;
    }
}

} // namespace

std::string quote_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) escape_into(out, c, '"');
    return out + "\"";
}

std::string quote_char(char c) {
    std::string out = "'";
    escape_into(out, c, '\'');
    return out + "'";
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string upper(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

std::optional<std::int64_t> int_literal(const Expr& e) {
    if (const auto* lit = std::get_if<Literal>(&e.node)) {
        if (const auto* i = std::get_if<std::int64_t>(&lit->value)) return *i;
    }
    if (const auto* neg = std::get_if<Unary>(&e.node); neg && neg->op == UnaryOp::Negate) {
        if (auto inner = int_literal(neg->operand.get())) return -*inner;
    }
    return std::nullopt;
}

bool is_literal(const Expr& e) { return std::holds_alternative<Literal>(e.node); }

bool is_comparison(BinaryOp op) {
    switch (op) {
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge:
    case BinaryOp::Eq:
    case BinaryOp::Ne: return true;
    default: return false;
    }
}

Expr assigned_value(const Assign& a) {
    switch (a.mode) {
    case AssignMode::Set: return *a.value;
    case AssignMode::AddEq: return apply_binary(BinaryOp::Add, value_of(a.target), *a.value);
    case AssignMode::SubEq: return apply_binary(BinaryOp::Sub, value_of(a.target), *a.value);
    case AssignMode::Inc: return apply_binary(BinaryOp::Add, value_of(a.target), lit_int(1));
    case AssignMode::Dec: return apply_binary(BinaryOp::Sub, value_of(a.target), lit_int(1));
    }
    return *a.value;
}

std::vector<Variable> in_out_results(const InOutSpec& spec) {
    std::vector<Variable> out = spec.inouts;
    out.insert(out.end(), spec.outs.begin(), spec.outs.end());
    return out;
}

bool holds_text(const Type& list_type) {
    const Type* t = &list_type;
    while (t->is_list()) t = &t->element();
    return t->is(TypeKind::String) || t->is(TypeKind::Char);
}

std::vector<std::string> sorted_lines(const std::set<std::string>& lines) {
    return {lines.begin(), lines.end()};
}

bool Ctx::is_iterator(const std::string& name) const {
    return std::find(iterators.begin(), iterators.end(), name) != iterators.end();
}

// Fragment entry points ------------------------------------------------------------------

std::string BackendBase::render_expr(const Expr& e) const {
    FragmentCtx f;
    return expr(f.ctx, e).text;
}

Doc BackendBase::render_statement(const Stmt& s) const {
    FragmentCtx f;
    return stmt(f.ctx, s);
}

Doc BackendBase::render_method(const Method& m) const {
    FragmentCtx f;
    return method_def(f.ctx, m);
}

Doc BackendBase::render_doc_comment(const DocSpec& doc, DocKind kind, std::string_view file_name,
                                    const std::vector<std::string>& param_order) const {
    return gool::render_doc_comment(doc, kind, comment_style(), file_name, param_order);
}

std::vector<std::string> BackendBase::signature_params(const Method& m) const {
    std::vector<std::string> out;
    for (const auto& p : m.params) out.push_back(p.var.name);
    return out;
}

Doc BackendBase::body(Ctx& ctx, const Body& b) const {
    return render_body(b, [&](const Stmt& s) { return stmt(ctx, s); });
}

// Expressions ----------------------------------------------------------------------------

Code BackendBase::expr(Ctx& ctx, const Expr& e) const {
    return std::visit(
        [&](const auto& n) -> Code {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Literal>) {
                return std::visit(
                    [&](const auto& v) -> Code {
                        using V = std::decay_t<decltype(v)>;
                        if constexpr (std::is_same_v<V, bool>) {
                            return {bool_text(v)};
                        } else if constexpr (std::is_same_v<V, std::int64_t>) {
                            return {format_int(v), v < 0 ? kUnary : kAtom};
                        } else if constexpr (std::is_same_v<V, double>) {
                            return {format_float(v), std::signbit(v) ? kUnary : kAtom};
                        } else if constexpr (std::is_same_v<V, char>) {
                            return {char_text(v)};
                        } else {
                            return {quote_string(v)};
                        }
                    },
                    n.value);
            } else if constexpr (std::is_same_v<T, ValueOf>) {
                return {var_text(ctx, n.var)};
            } else if constexpr (std::is_same_v<T, Unary>) {
                return unary(ctx, n.op, n.operand.get());
            } else if constexpr (std::is_same_v<T, Binary>) {
                return binary(ctx, n, e);
            } else if constexpr (std::is_same_v<T, InlineIf>) {
                return inline_if(ctx, n);
            } else if constexpr (std::is_same_v<T, Call>) {
                return call(ctx, n, e.type);
            } else if constexpr (std::is_same_v<T, MathCall>) {
                return math_call(ctx, n.fn, n.arg.get());
            } else if constexpr (std::is_same_v<T, ListLiteral>) {
                return list_literal(ctx, e.type.element(), n.elements);
            } else if constexpr (std::is_same_v<T, ArgsList>) {
                return args_list(ctx);
            } else if constexpr (std::is_same_v<T, ArgAt>) {
                return arg_at(ctx, n.index.get());
            } else if constexpr (std::is_same_v<T, ArgExists>) {
                return arg_exists(ctx, n.index.get());
            } else if constexpr (std::is_same_v<T, ListAccess>) {
                return list_access(ctx, n.list.get(), n.index.get());
            } else if constexpr (std::is_same_v<T, ListSize>) {
                return list_size(ctx, n.list.get());
            } else if constexpr (std::is_same_v<T, ListAppend>) {
                return list_append(ctx, n.list.get(), n.value.get());
            } else if constexpr (std::is_same_v<T, ListIndexExists>) {
                return list_index_exists(ctx, n.list.get(), n.index.get());
            } else {
                static_assert(std::is_same_v<T, IndexOf>);
                return index_of(ctx, n.list.get(), n.value.get());
            }
        },
        e.node);
}

std::string BackendBase::coerce(Ctx& ctx, const Expr& e, const Type& target) const {
    if (target.is(TypeKind::Float) && e.type.is(TypeKind::Int)) {
        if (auto v = int_literal(e)) return format_float(static_cast<double>(*v));
    }
    return expr(ctx, e).text;
}

std::string BackendBase::args_text(Ctx& ctx, const std::vector<Box<Expr>>& args) const {
    std::vector<std::string> parts;
    for (const auto& a : args) parts.push_back(expr(ctx, a.get()).text);
    return join(parts, ", ");
}

std::string BackendBase::atom(Ctx& ctx, const Expr& e, int min_prec) const {
    Code c = expr(ctx, e);
    return c.prec < min_prec ? "(" + c.text + ")" : c.text;
}

Code BackendBase::operand(Ctx& ctx, const Expr& e, bool comparison) const {
    if (comparison) {
        if (const auto* lit = std::get_if<Literal>(&e.node)) {
            if (const auto* d = std::get_if<double>(&lit->value)) {
                if (std::isfinite(*d) && *d == std::trunc(*d) && std::fabs(*d) < 1e15) {
                    auto i = static_cast<std::int64_t>(*d);
                    return {format_int(i), i < 0 ? kUnary : kAtom};
                }
            }
        }
    }
    return expr(ctx, e);
}

Code BackendBase::infix(Ctx& ctx, const Expr& lhs, const Expr& rhs, std::string_view token, int prec,
                        Assoc assoc, bool comparison) const {
    Code l = operand(ctx, lhs, comparison);
    Code r = operand(ctx, rhs, comparison);
    std::string text = parenthesize_child(prec, Side::Left, l.prec, l.text, assoc);
    text += " ";
    text += token;
    text += " ";
    text += parenthesize_child(prec, Side::Right, r.prec, r.text, assoc);
    return {text, prec};
}

Code BackendBase::unary(Ctx& ctx, UnaryOp op, const Expr& operand) const {
    switch (op) {
    case UnaryOp::Sqrt: return math_call(ctx, MathFn::Sqrt, operand);
    case UnaryOp::Abs: return math_call(ctx, MathFn::Abs, operand);
    case UnaryOp::Not:
    case UnaryOp::Negate: {
        Code c = expr(ctx, operand);
        std::string inner = parenthesize_child(kUnary, Side::Operand, c.prec, c.text);
        if (inner.front() == '-') inner = "(" + inner + ")";
        return {(op == UnaryOp::Not ? "!" : "-") + inner, kUnary};
    }
    }
    return {};
}

Code BackendBase::binary(Ctx& ctx, const Binary& b, const Expr&) const {
    const Expr& l = b.lhs.get();
    const Expr& r = b.rhs.get();
    switch (b.op) {
    case BinaryOp::Pow: return pow(ctx, l, r);
    case BinaryOp::And: return infix(ctx, l, r, "&&", kAnd, Assoc::Left, false);
    case BinaryOp::Or: return infix(ctx, l, r, "||", kOr, Assoc::Left, false);
    case BinaryOp::Add: return infix(ctx, l, r, "+", kAdd, Assoc::Left, false);
    case BinaryOp::Sub: return infix(ctx, l, r, "-", kAdd, Assoc::Left, false);
    case BinaryOp::Mul: return infix(ctx, l, r, "*", kMul, Assoc::Left, false);
    case BinaryOp::Div: return infix(ctx, l, r, "/", kMul, Assoc::Left, false);
    case BinaryOp::Lt: return infix(ctx, l, r, "<", kCmp, Assoc::Left, true);
    case BinaryOp::Le: return infix(ctx, l, r, "<=", kCmp, Assoc::Left, true);
    case BinaryOp::Gt: return infix(ctx, l, r, ">", kCmp, Assoc::Left, true);
    case BinaryOp::Ge: return infix(ctx, l, r, ">=", kCmp, Assoc::Left, true);
    case BinaryOp::Eq: return infix(ctx, l, r, "==", kEq, Assoc::Left, true);
    case BinaryOp::Ne: return infix(ctx, l, r, "!=", kEq, Assoc::Left, true);
    }
    return {};
}

Code BackendBase::plus_one(Ctx& ctx, const Expr& index) const {
    if (auto v = int_literal(index)) return {format_int(*v + 1), *v + 1 < 0 ? kUnary : kAtom};
    return infix(ctx, index, lit_int(1), "+", kAdd, Assoc::Left, false);
}

} // namespace gool::detail
