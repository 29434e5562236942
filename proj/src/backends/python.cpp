// Python 3 renderer: one combined .py file per module, module-level code for
// main, native slices, tuple returns for in/out procedures.

#include <algorithm>
#include <sstream>

#include "common.hpp"
#include "gool/build.hpp"
#include "gool/error.hpp"

namespace gool::detail {
namespace {

constexpr int kPyNot = 35;
constexpr int kPyCmp = 45;
constexpr int kPyPowLeft = 95;

class PythonBackend final : public BackendBase {
public:
    Target target() const override { return Target::Python; }
    std::string source_extension() const override { return "py"; }

    std::vector<RenderedFile> render_module(const Module& m, const Package& pkg) const override;
    Doc stmt(Ctx& ctx, const Stmt& s) const override;
    Doc method_def(Ctx& ctx, const Method& m) const override { return method_with_prelude(ctx, m, {}); }

protected:
    CommentStyle comment_style() const override { return CommentStyle::Hash; }
    std::vector<std::string> signature_params(const Method& m) const override;

    std::string bool_text(bool b) const override { return b ? "True" : "False"; }
    std::string var_text(Ctx& ctx, const Variable& v) const override;
    Code unary(Ctx& ctx, UnaryOp op, const Expr& operand) const override;
    Code binary(Ctx& ctx, const Binary& b, const Expr& whole) const override;
    Code inline_if(Ctx& ctx, const InlineIf& n) const override;
    Code call(Ctx& ctx, const Call& c, const Type& type) const override;
    Code math_call(Ctx& ctx, MathFn fn, const Expr& arg) const override;
    Code pow(Ctx& ctx, const Expr& base, const Expr& exponent) const override;
    Code list_literal(Ctx& ctx, const Type& element, const std::vector<Box<Expr>>& values) const override;
    Code args_list(Ctx& ctx) const override;
    Code arg_at(Ctx& ctx, const Expr& index) const override;
    Code arg_exists(Ctx& ctx, const Expr& index) const override;
    Code list_access(Ctx& ctx, const Expr& list, const Expr& index) const override;
    Code list_size(Ctx& ctx, const Expr& list) const override;
    Code list_append(Ctx& ctx, const Expr& list, const Expr& value) const override;
    Code list_index_exists(Ctx& ctx, const Expr& list, const Expr& index) const override;
    Code index_of(Ctx& ctx, const Expr& list, const Expr& value) const override;

private:
    Doc suite(Ctx& ctx, const Body& b) const;
    Doc headed(const std::string& header, Doc inner) const;
    std::string cmp_right(Ctx& ctx, const std::string& left, std::string_view op, const Expr& rhs) const;
    Doc method_with_prelude(Ctx& ctx, const Method& m, const Doc& prelude) const;
    Doc class_def(Ctx& ctx, const ClassDecl& c) const;
};

std::vector<std::string> PythonBackend::signature_params(const Method& m) const {
    std::vector<std::string> out;
    if (m.in_out) {
        for (const auto& v : m.in_out->inouts) out.push_back(v.name);
        for (const auto& v : m.in_out->ins) out.push_back(v.name);
        return out;
    }
    for (const auto& p : m.params) out.push_back(p.var.name);
    return out;
}

// Expressions ----------------------------------------------------------------------------

std::string PythonBackend::var_text(Ctx& ctx, const Variable& v) const {
    switch (v.form) {
    case VarForm::Plain: return v.name;
    case VarForm::External: ctx.import("import " + v.qualifier); return v.qualifier + "." + v.name;
    case VarForm::ClassMember: ctx.refer_class(v.qualifier); return v.qualifier + "." + v.name;
    case VarForm::ObjectMember: return var_text(ctx, v.owner->get()) + "." + v.name;
    case VarForm::Self: return "self." + v.name;
    }
    return v.name;
}

Code PythonBackend::unary(Ctx& ctx, UnaryOp op, const Expr& operand) const {
    if (op != UnaryOp::Not) return BackendBase::unary(ctx, op, operand);
    Code c = expr(ctx, operand);
    return {"not " + parenthesize_child(kPyNot, Side::Operand, c.prec, c.text), kPyNot};
}

std::string PythonBackend::cmp_right(Ctx& ctx, const std::string& left, std::string_view op, const Expr& rhs) const {
    Code r = operand(ctx, rhs, true);
    return left + " " + std::string(op) + " " + parenthesize_child(kPyCmp, Side::Right, r.prec, r.text);
}

Code PythonBackend::binary(Ctx& ctx, const Binary& b, const Expr& whole) const {
    const Expr& l = b.lhs.get();
    const Expr& r = b.rhs.get();
    auto chained = [&](std::string_view token) {
        // Python chains comparisons, so equal-precedence operands are always wrapped.
        Code lc = operand(ctx, l, true);
        return Code{cmp_right(ctx, parenthesize_child(kPyCmp, Side::Left, lc.prec, lc.text, Assoc::Right), token, r),
                    kPyCmp};
    };
    switch (b.op) {
    case BinaryOp::And: return infix(ctx, l, r, "and", kAnd, Assoc::Left, false);
    case BinaryOp::Or: return infix(ctx, l, r, "or", kOr, Assoc::Left, false);
    case BinaryOp::Div:
        if (l.type.is(TypeKind::Int) && r.type.is(TypeKind::Int)) {
            return infix(ctx, l, r, "//", kMul, Assoc::Left, false);
        }
        return infix(ctx, l, r, "/", kMul, Assoc::Left, false);
    case BinaryOp::Lt: return chained("<");
    case BinaryOp::Le: return chained("<=");
    case BinaryOp::Gt: return chained(">");
    case BinaryOp::Ge: return chained(">=");
    case BinaryOp::Eq: return chained("==");
    case BinaryOp::Ne: return chained("!=");
    default: return BackendBase::binary(ctx, b, whole);
    }
}

Code PythonBackend::pow(Ctx& ctx, const Expr& base, const Expr& exponent) const {
    Code l = expr(ctx, base);
    Code r = expr(ctx, exponent);
    std::string lt = l.prec < kPyPowLeft ? "(" + l.text + ")" : l.text;
    std::string rt = r.prec < kUnary ? "(" + r.text + ")" : r.text;
    return {lt + " ** " + rt, kPow};
}

Code PythonBackend::inline_if(Ctx& ctx, const InlineIf& n) const {
    Code c = expr(ctx, n.cond.get());
    Code t = expr(ctx, n.then_value.get());
    Code f = expr(ctx, n.else_value.get());
    return {parenthesize_child(kCond, Side::Left, t.prec, t.text, Assoc::Right) + " if " +
                parenthesize_child(kCond, Side::Left, c.prec, c.text, Assoc::Right) + " else " +
                parenthesize_child(kCond, Side::Right, f.prec, f.text, Assoc::Right),
            kCond};
}

Code PythonBackend::call(Ctx& ctx, const Call& c, const Type&) const {
    std::string args = "(" + args_text(ctx, c.args) + ")";
    switch (c.form) {
    case CallForm::Function: return {c.name + args};
    case CallForm::ExternalFunction: ctx.import("import " + c.library); return {c.library + "." + c.name + args};
    case CallForm::Constructor: ctx.refer_class(c.name); return {c.name + args};
    case CallForm::Method: return {atom(ctx, c.receiver->get()) + "." + c.name + args};
    case CallForm::SelfMethod:
        if (ctx.cls && ctx.method && ctx.method->binding == Binding::Static) return {ctx.cls->name + "." + c.name + args};
        if (ctx.cls) return {"self." + c.name + args};
        return {c.name + args};
    }
    return {};
}

Code PythonBackend::math_call(Ctx& ctx, MathFn fn, const Expr& arg) const {
    std::string a = expr(ctx, arg).text;
    if (fn == MathFn::Abs) return {"abs(" + a + ")"};
    ctx.import("import math");
    return {"math." + std::string(to_string(fn)) + "(" + a + ")"};
}

Code PythonBackend::list_literal(Ctx& ctx, const Type& element, const std::vector<Box<Expr>>& values) const {
    std::vector<std::string> parts;
    for (const auto& v : values) parts.push_back(coerce(ctx, v.get(), element));
    return {"[" + join(parts, ", ") + "]"};
}

Code PythonBackend::args_list(Ctx& ctx) const {
    ctx.import("import sys");
    return {"sys.argv[1:]"};
}

Code PythonBackend::arg_at(Ctx& ctx, const Expr& index) const {
    ctx.import("import sys");
    return {"sys.argv[" + plus_one(ctx, index).text + "]"};
}

Code PythonBackend::arg_exists(Ctx& ctx, const Expr& index) const {
    ctx.import("import sys");
    Code i = plus_one(ctx, index);
    return {"len(sys.argv) > " + parenthesize_child(kPyCmp, Side::Right, i.prec, i.text), kPyCmp};
}

Code PythonBackend::list_access(Ctx& ctx, const Expr& list, const Expr& index) const {
    return {atom(ctx, list) + "[" + expr(ctx, index).text + "]"};
}

Code PythonBackend::list_size(Ctx& ctx, const Expr& list) const { return {"len(" + expr(ctx, list).text + ")"}; }

Code PythonBackend::list_append(Ctx& ctx, const Expr& list, const Expr& value) const {
    return {atom(ctx, list) + ".append(" + coerce(ctx, value, list.type.element()) + ")"};
}

Code PythonBackend::list_index_exists(Ctx& ctx, const Expr& list, const Expr& index) const {
    return {cmp_right(ctx, "len(" + expr(ctx, list).text + ")", ">", index), kPyCmp};
}

Code PythonBackend::index_of(Ctx& ctx, const Expr& list, const Expr& value) const {
    return {atom(ctx, list) + ".index(" + expr(ctx, value).text + ")"};
}

// Statements -----------------------------------------------------------------------------

namespace {

/// True when a suite has no statement Python would execute, so it still
/// needs a `pass` (comments alone do not form a block).
bool needs_pass(const Doc& d) {
    std::stringstream lines(d.str());
    std::string line;
    while (std::getline(lines, line)) {
        auto start = line.find_first_not_of(' ');
        if (start != std::string::npos && line[start] != '#') return false;
    }
    return true;
}

} // namespace

Doc PythonBackend::suite(Ctx& ctx, const Body& b) const {
    Doc d = body(ctx, b);
    if (needs_pass(d)) d += Doc::text("pass");
    return d;
}

Doc PythonBackend::headed(const std::string& header, Doc inner) const {
    if (needs_pass(inner)) inner += Doc::text("pass");
    return Doc::text(header) + inner.indented();
}

Doc PythonBackend::stmt(Ctx& ctx, const Stmt& s) const {
    return std::visit(
        [&](const auto& n) -> Doc {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarDec>) {
                return {};
            } else if constexpr (std::is_same_v<T, VarDecDef>) {
                return Doc::text(var_text(ctx, n.var) + " = " + coerce(ctx, n.value, n.var.type));
            } else if constexpr (std::is_same_v<T, Assign>) {
                return Doc::text(var_text(ctx, n.target) + " = " + coerce(ctx, assigned_value(n), n.target.type));
            } else if constexpr (std::is_same_v<T, Return>) {
                return Doc::text("return " + expr(ctx, n.value).text);
            } else if constexpr (std::is_same_v<T, Throw>) {
                return Doc::text("raise Exception(" + quote_string(n.message) + ")");
            } else if constexpr (std::is_same_v<T, Free>) {
                return Doc::text("del " + var_text(ctx, n.var));
            } else if constexpr (std::is_same_v<T, Comment>) {
                return Doc::text("# " + n.text);
            } else if constexpr (std::is_same_v<T, Break>) {
                return Doc::text("break");
            } else if constexpr (std::is_same_v<T, Continue>) {
                return Doc::text("continue");
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                return Doc::text(expr(ctx, n.value).text);
            } else if constexpr (std::is_same_v<T, If>) {
                Doc d;
                bool first = true;
                for (const auto& br : n.branches) {
                    d += headed((first ? "if " : "elif ") + expr(ctx, br.cond).text + ":", suite(ctx, br.body));
                    first = false;
                }
                if (n.else_body) d += headed("else:", suite(ctx, *n.else_body));
                return d;
            } else if constexpr (std::is_same_v<T, Switch>) {
                Doc d;
                bool first = true;
                Code scrutinee = expr(ctx, n.scrutinee);
                std::string lhs = parenthesize_child(kPyCmp, Side::Left, scrutinee.prec, scrutinee.text, Assoc::Right);
                for (const auto& c : n.cases) {
                    d += headed((first ? "if " : "elif ") + cmp_right(ctx, lhs, "==", c.label) + ":",
                                suite(ctx, c.body));
                    first = false;
                }
                if (!n.default_body.empty()) d += headed("else:", suite(ctx, n.default_body));
                return d;
            } else if constexpr (std::is_same_v<T, For>) {
                Doc loop = body(ctx, n.body);
                loop += stmt(ctx, n.update.get());
                return stmt(ctx, n.init.get()) + headed("while " + expr(ctx, n.cond).text + ":", loop);
            } else if constexpr (std::is_same_v<T, ForRange>) {
                std::vector<std::string> args;
                args.push_back(expr(ctx, n.start).text);
                auto step = int_literal(n.step);
                bool descending = step && *step < 0;
                if (auto end = int_literal(n.end)) {
                    args.push_back(format_int(descending ? *end - 1 : *end + 1));
                } else {
                    Code e = expr(ctx, n.end);
                    args.push_back(parenthesize_child(kAdd, Side::Left, e.prec, e.text) + (descending ? " - 1" : " + 1"));
                }
                if (!step || *step != 1) args.push_back(expr(ctx, n.step).text);
                return headed("for " + var_text(ctx, n.var) + " in range(" + join(args, ", ") + "):",
                              suite(ctx, n.body));
            } else if constexpr (std::is_same_v<T, ForEach>) {
                return headed("for " + var_text(ctx, n.var) + " in " + expr(ctx, n.list).text + ":",
                              suite(ctx, n.body));
            } else if constexpr (std::is_same_v<T, While>) {
                return headed("while " + expr(ctx, n.cond).text + ":", suite(ctx, n.body));
            } else if constexpr (std::is_same_v<T, TryCatch>) {
                return headed("try:", suite(ctx, n.try_body)) + headed("except Exception:", suite(ctx, n.catch_body));
            } else if constexpr (std::is_same_v<T, ListSlice>) {
                auto part = [&](const std::optional<Expr>& e) { return e ? expr(ctx, *e).text : std::string(); };
                return Doc::text(var_text(ctx, n.target) + " = " + atom(ctx, n.source) + "[" + part(n.start) + ":" +
                                 part(n.end) + ":" + part(n.step) + "]");
            } else if constexpr (std::is_same_v<T, ListSet>) {
                return Doc::text(atom(ctx, n.list) + "[" + expr(ctx, n.index).text +
                                 "] = " + coerce(ctx, n.value, n.list.type.element()));
            } else if constexpr (std::is_same_v<T, Print>) {
                if (n.value.type.is_list() && holds_text(n.value.type)) {
                    // print() would show the quotes of repr(); spell the list out instead.
                    return body(ctx, lower_list_print(n.value, n.newline));
                }
                std::string v = expr(ctx, n.value).text;
                return Doc::text(n.newline ? "print(" + v + ")" : "print(" + v + ", end=\"\")");
            } else if constexpr (std::is_same_v<T, Read>) {
                return Doc::text(var_text(ctx, n.target) + " = " +
                                 (n.kind == ReadKind::Int ? "int(input())" : "input()"));
            } else if constexpr (std::is_same_v<T, Inline>) {
                return body(ctx, n.body);
            } else if constexpr (std::is_same_v<T, InOutCall>) {
                std::vector<std::string> targets;
                for (const auto& v : n.inouts) targets.push_back(var_text(ctx, v));
                for (const auto& v : n.outs) targets.push_back(var_text(ctx, v));
                std::vector<std::string> args;
                for (const auto& v : n.inouts) args.push_back(var_text(ctx, v));
                for (const auto& e : n.ins) args.push_back(expr(ctx, e).text);
                std::string callee = n.name;
                if (!n.library.empty()) {
                    ctx.import("import " + n.library);
                    callee = n.library + "." + n.name;
                }
                return Doc::text(join(targets, ", ") + " = " + callee + "(" + join(args, ", ") + ")");
            } else {
                return stmt(ctx, lower_pattern(s));
            }
        },
        s.node);
}

// Methods, classes, modules ---------------------------------------------------------------

Doc PythonBackend::method_with_prelude(Ctx& outer, const Method& m, const Doc& prelude) const {
    NameSupply names;
    Ctx ctx = outer;
    ctx.names = &names;
    ctx.method = &m;
    if (m.is_main) return body(ctx, m.body);

    std::vector<std::string> params;
    bool in_class = m.containing_class.has_value();
    if (in_class && m.binding == Binding::Dynamic) params.push_back("self");
    for (const auto& p : signature_params(m)) params.push_back(p);

    Doc d;
    if (m.doc) d += render_doc_comment(*m.doc, DocKind::Function, {}, signature_params(m));
    if (in_class && m.binding == Binding::Static && !m.is_constructor) d += Doc::text("@staticmethod");
    std::string name = m.is_constructor ? "__init__" : m.name;

    std::vector<Doc> parts{prelude, body(ctx, m.body)};
    if (m.in_out) {
        std::vector<std::string> results;
        for (const auto& v : in_out_results(*m.in_out)) results.push_back(v.name);
        parts.push_back(Doc::text("return " + join(results, ", ")));
    }
    d += headed("def " + name + "(" + join(params, ", ") + "):", separated(parts));
    return d;
}

Doc PythonBackend::class_def(Ctx& outer, const ClassDecl& c) const {
    Ctx ctx = outer;
    ctx.cls = &c;
    Doc d;
    if (c.doc) d += render_doc_comment(*c.doc, DocKind::Class);
    std::string header = "class " + c.name;
    if (c.parent) {
        ctx.refer_class(*c.parent);
        header += "(" + *c.parent + ")";
    }

    std::vector<Doc> members;
    Doc statics;
    Doc inits;
    if (c.parent) inits += Doc::text("super().__init__()");
    for (const auto& sv : c.state_vars) {
        std::string value = sv.initial ? coerce(ctx, *sv.initial, sv.var.type) : "None";
        if (sv.binding == Binding::Static) {
            statics += Doc::text(sv.var.name + " = " + value);
        } else {
            inits += Doc::text("self." + sv.var.name + " = " + value);
        }
    }
    members.push_back(statics);

    const Method* ctor = nullptr;
    for (const auto& m : c.methods) {
        if (m.is_constructor) ctor = &m;
    }
    bool needs_init = !inits.empty() || ctor;
    if (ctor) {
        members.push_back(method_with_prelude(ctx, *ctor, inits));
    } else if (needs_init) {
        members.push_back(headed("def __init__(self):", inits));
    }
    for (const auto& m : c.methods) {
        if (!m.is_constructor) members.push_back(method_def(ctx, m));
    }
    d += headed(header + ":", separated(members));
    return d;
}

std::vector<RenderedFile> PythonBackend::render_module(const Module& m, const Package& pkg) const {
    ModuleState state;
    NameSupply names;
    Ctx ctx;
    ctx.state = &state;
    ctx.names = &names;
    ctx.pkg = &pkg;
    ctx.module = &m;

    std::vector<Doc> parts;
    Doc main_code;
    for (const auto& c : m.classes) parts.push_back(class_def(ctx, c));
    for (const auto& f : m.functions) {
        if (f.is_main) {
            main_code = method_def(ctx, f);
            if (f.doc) main_code = render_doc_comment(*f.doc, DocKind::Function) + main_code;
        } else {
            parts.push_back(method_def(ctx, f));
        }
    }
    parts.push_back(main_code);

    for (const auto& lib : m.imports) state.imports.insert("import " + lib);
    std::set<std::string> from_imports;
    for (const auto& cls : state.class_refs) {
        const Module* owner = pkg.module_of_class(cls);
        if (owner && owner->name != m.name) from_imports.insert("from " + owner->name + " import " + cls);
    }
    Doc imports;
    for (const auto& line : sorted_lines(state.imports)) imports += Doc::text(line);
    for (const auto& line : sorted_lines(from_imports)) imports += Doc::text(line);

    std::string file = m.name + ".py";
    Doc head;
    if (m.doc) head = render_doc_comment(*m.doc, DocKind::Module, file);
    parts.insert(parts.begin(), {head, imports});
    return {RenderedFile{file, FileType::Combined, separated(parts).str()}};
}

} // namespace

std::unique_ptr<Backend> make_python_backend() { return std::make_unique<PythonBackend>(); }

} // namespace gool::detail
