// Java renderer: one .java file per module; free functions become static
// methods of a public class named after the module.

#include "clike.hpp"
#include "gool/build.hpp"
#include "gool/error.hpp"

namespace gool::detail {
namespace {

constexpr std::string_view kScanner = "scanner";

class JavaBackend final : public CLikeBackend {
public:
    Target target() const override { return Target::Java; }
    std::string source_extension() const override { return "java"; }

    std::vector<RenderedFile> render_module(const Module& m, const Package& pkg) const override;
    Doc method_def(Ctx& ctx, const Method& m) const override;

protected:
    CommentStyle comment_style() const override { return CommentStyle::Block; }
    std::vector<std::string> signature_params(const Method& m) const override;

    std::string type_name(Ctx& ctx, const Type& t) const override { return java_type(ctx, t, false); }
    std::string self_prefix() const override { return "this."; }

    Code binary(Ctx& ctx, const Binary& b, const Expr& whole) const override;
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

    Doc print_scalar(Ctx& ctx, const Expr& value, bool newline) const override;
    Doc read_stmt(Ctx& ctx, const Read& r) const override;
    std::string throw_text(Ctx&, const std::string& message) const override {
        return "throw new Exception(" + quote_string(message) + ");";
    }
    std::string catch_header(Ctx&) const override { return "catch (Exception exc)"; }
    std::string foreach_header(Ctx& ctx, const ForEach& f) const override;
    Doc list_set_stmt(Ctx& ctx, const ListSet& s) const override;
    Doc in_out_call(Ctx& ctx, const InOutCall& c) const override;

private:
    std::string java_type(Ctx& ctx, const Type& t, bool boxed) const;
    /// Element values stored into a generic list must match the boxed type.
    std::string element_value(Ctx& ctx, const Expr& e, const Type& element) const;
    Doc class_def(Ctx& ctx, const ClassDecl& c, const std::vector<const Method*>& extra, bool is_public) const;
    Doc field(Ctx& ctx, const StateVar& sv) const;
};

std::string JavaBackend::java_type(Ctx& ctx, const Type& t, bool boxed) const {
    switch (t.kind()) {
    case TypeKind::Void: return "void";
    case TypeKind::Bool: return "Boolean";
    case TypeKind::Int: return boxed ? "Integer" : "int";
    case TypeKind::Float: return boxed ? "Double" : "double";
    case TypeKind::Char: return boxed ? "Character" : "char";
    case TypeKind::String: return "String";
    case TypeKind::InFile: ctx.import("import java.util.Scanner;"); return "Scanner";
    case TypeKind::OutFile: ctx.import("import java.io.PrintWriter;"); return "PrintWriter";
    case TypeKind::List:
        ctx.import("import java.util.ArrayList;");
        return "ArrayList<" + java_type(ctx, t.element(), true) + ">";
    case TypeKind::Object: ctx.refer_class(t.class_name()); return t.class_name();
    }
    return "Object";
}

std::vector<std::string> JavaBackend::signature_params(const Method& m) const {
    std::vector<std::string> out;
    if (m.in_out) {
        for (const auto& v : m.in_out->inouts) out.push_back(v.name);
        for (const auto& v : m.in_out->ins) out.push_back(v.name);
        return out;
    }
    return BackendBase::signature_params(m);
}

std::string JavaBackend::element_value(Ctx& ctx, const Expr& e, const Type& element) const {
    if (element.is(TypeKind::Float) && e.type.is(TypeKind::Int) && !int_literal(e)) {
        return "(double) " + atom(ctx, e, kUnary);
    }
    return coerce(ctx, e, element);
}

Code JavaBackend::binary(Ctx& ctx, const Binary& b, const Expr& whole) const {
    if ((b.op == BinaryOp::Eq || b.op == BinaryOp::Ne) && b.lhs->type.is(TypeKind::String)) {
        std::string text = atom(ctx, b.lhs.get()) + ".equals(" + expr(ctx, b.rhs.get()).text + ")";
        if (b.op == BinaryOp::Eq) return {text};
        return {"!" + text, kUnary};
    }
    return BackendBase::binary(ctx, b, whole);
}

Code JavaBackend::call(Ctx& ctx, const Call& c, const Type&) const {
    std::string args = "(" + args_text(ctx, c.args) + ")";
    switch (c.form) {
    case CallForm::Function:
        // Free functions live in the module's wrapper class.
        if (ctx.cls && ctx.module && ctx.cls->name != ctx.module->name) return {ctx.module->name + "." + c.name + args};
        return {c.name + args};
    case CallForm::ExternalFunction: return {c.library + "." + c.name + args};
    case CallForm::Constructor: ctx.refer_class(c.name); return {"new " + c.name + args};
    case CallForm::Method: return {atom(ctx, c.receiver->get()) + "." + c.name + args};
    case CallForm::SelfMethod: return {c.name + args};
    }
    return {};
}

Code JavaBackend::math_call(Ctx& ctx, MathFn fn, const Expr& arg) const {
    return {"Math." + std::string(to_string(fn)) + "(" + expr(ctx, arg).text + ")"};
}

Code JavaBackend::pow(Ctx& ctx, const Expr& base, const Expr& exponent) const {
    return {"Math.pow(" + expr(ctx, base).text + ", " + expr(ctx, exponent).text + ")"};
}

Code JavaBackend::list_literal(Ctx& ctx, const Type& element, const std::vector<Box<Expr>>& values) const {
    ctx.import("import java.util.ArrayList;");
    std::string type = "ArrayList<" + java_type(ctx, element, true) + ">";
    if (values.empty()) return {"new " + type + "(0)"};
    ctx.import("import java.util.Arrays;");
    std::vector<std::string> parts;
    for (const auto& v : values) parts.push_back(element_value(ctx, v.get(), element));
    return {"new " + type + "(Arrays.asList(" + join(parts, ", ") + "))"};
}

Code JavaBackend::args_list(Ctx& ctx) const {
    ctx.import("import java.util.ArrayList;");
    ctx.import("import java.util.Arrays;");
    return {"new ArrayList<String>(Arrays.asList(args))"};
}

Code JavaBackend::arg_at(Ctx& ctx, const Expr& index) const { return {"args[" + expr(ctx, index).text + "]"}; }

Code JavaBackend::arg_exists(Ctx& ctx, const Expr& index) const {
    Code i = expr(ctx, index);
    return {"args.length > " + parenthesize_child(kCmp, Side::Right, i.prec, i.text), kCmp};
}

Code JavaBackend::list_access(Ctx& ctx, const Expr& list, const Expr& index) const {
    return {atom(ctx, list) + ".get(" + expr(ctx, index).text + ")"};
}

Code JavaBackend::list_size(Ctx& ctx, const Expr& list) const { return {atom(ctx, list) + ".size()"}; }

Code JavaBackend::list_append(Ctx& ctx, const Expr& list, const Expr& value) const {
    return {atom(ctx, list) + ".add(" + element_value(ctx, value, list.type.element()) + ")"};
}

Code JavaBackend::list_index_exists(Ctx& ctx, const Expr& list, const Expr& index) const {
    Code i = expr(ctx, index);
    return {atom(ctx, list) + ".size() > " + parenthesize_child(kCmp, Side::Right, i.prec, i.text), kCmp};
}

Code JavaBackend::index_of(Ctx& ctx, const Expr& list, const Expr& value) const {
    return {atom(ctx, list) + ".indexOf(" + element_value(ctx, value, list.type.element()) + ")"};
}

Doc JavaBackend::print_scalar(Ctx& ctx, const Expr& value, bool newline) const {
    return Doc::text(std::string(newline ? "System.out.println(" : "System.out.print(") + expr(ctx, value).text + ");");
}

Doc JavaBackend::read_stmt(Ctx& ctx, const Read& r) const {
    ctx.import("import java.util.Scanner;");
    ctx.state->flags.insert("scanner:" + (ctx.cls ? ctx.cls->name : ctx.module ? ctx.module->name : ""));
    std::string line = std::string(kScanner) + ".nextLine()";
    if (r.kind == ReadKind::Int) line = "Integer.parseInt(" + line + ")";
    return Doc::text(var_text(ctx, r.target) + " = " + line + ";");
}

std::string JavaBackend::foreach_header(Ctx& ctx, const ForEach& f) const {
    return "for (" + type_name(ctx, f.var.type) + " " + f.var.name + " : " + expr(ctx, f.list).text + ")";
}

Doc JavaBackend::list_set_stmt(Ctx& ctx, const ListSet& s) const {
    return Doc::text(atom(ctx, s.list) + ".set(" + expr(ctx, s.index).text + ", " +
                     element_value(ctx, s.value, s.list.type.element()) + ");");
}

Doc JavaBackend::in_out_call(Ctx& ctx, const InOutCall& c) const {
    std::vector<std::string> args;
    for (const auto& v : c.inouts) args.push_back(var_text(ctx, v));
    for (const auto& e : c.ins) args.push_back(expr(ctx, e).text);
    std::string callee = c.library.empty() ? c.name : c.library + "." + c.name;
    if (c.library.empty() && ctx.cls && ctx.module && ctx.cls->name != ctx.module->name) {
        callee = ctx.module->name + "." + c.name;
    }
    std::string outputs = ctx.names->fresh("outputs");
    Doc d = Doc::text("Object[] " + outputs + " = " + callee + "(" + join(args, ", ") + ");");
    std::vector<Variable> results = c.inouts;
    results.insert(results.end(), c.outs.begin(), c.outs.end());
    for (std::size_t i = 0; i < results.size(); ++i) {
        d += Doc::text(var_text(ctx, results[i]) + " = (" + type_name(ctx, results[i].type) + ")(" + outputs + "[" +
                       std::to_string(i) + "]);");
    }
    return d;
}

Doc JavaBackend::method_def(Ctx& outer, const Method& m) const {
    NameSupply names;
    Ctx ctx = method_ctx(outer, m, names);
    Doc d;
    if (m.doc) d += render_doc_comment(*m.doc, DocKind::Function, {}, signature_params(m));

    std::string scope = m.scope == Scope::Public ? "public" : "private";
    bool is_static = m.binding == Binding::Static || !m.containing_class;
    if (m.is_main) {
        return d + method_block(ctx, m, "public static void main(String[] args) throws Exception", {}, {});
    }

    std::vector<std::string> params;
    std::vector<Variable> param_vars;
    if (m.in_out) {
        param_vars = m.in_out->inouts;
        param_vars.insert(param_vars.end(), m.in_out->ins.begin(), m.in_out->ins.end());
    } else {
        for (const auto& p : m.params) param_vars.push_back(p.var);
    }
    for (const auto& v : param_vars) params.push_back(type_name(ctx, v.type) + " " + v.name);
    std::string plist = "(" + join(params, ", ") + ") throws Exception";

    if (m.is_constructor) return d + method_block(ctx, m, scope + " " + *m.containing_class + plist, {}, {});

    Doc prelude;
    Doc postlude;
    std::string ret = type_name(ctx, m.return_type);
    if (m.in_out) {
        ret = "Object[]";
        std::string outputs = ctx.names->fresh("outputs");
        for (const auto& v : m.in_out->outs) prelude += Doc::text(decl(ctx, v, nullptr) + ";");
        auto results = in_out_results(*m.in_out);
        postlude += Doc::text("Object[] " + outputs + " = new Object[" + std::to_string(results.size()) + "];");
        for (std::size_t i = 0; i < results.size(); ++i) {
            postlude += Doc::text(outputs + "[" + std::to_string(i) + "] = " + results[i].name + ";");
        }
        postlude += Doc::text("return " + outputs + ";");
    }
    std::string header = scope + (is_static ? " static " : " ") + ret + " " + m.name + plist;
    return d + method_block(ctx, m, header, prelude, postlude);
}

Doc JavaBackend::field(Ctx& ctx, const StateVar& sv) const {
    std::string mods = sv.scope == Scope::Public ? "public" : "private";
    if (sv.binding == Binding::Static) mods += " static";
    if (sv.is_const) mods += " final";
    const Expr* init = sv.initial ? &*sv.initial : nullptr;
    return Doc::text(mods + " " + decl(ctx, sv.var, init) + ";");
}

Doc JavaBackend::class_def(Ctx& outer, const ClassDecl& c, const std::vector<const Method*>& extra,
                           bool is_public) const {
    Ctx ctx = outer;
    ctx.cls = &c;
    Doc fields;
    for (const auto& sv : c.state_vars) fields += field(ctx, sv);

    std::vector<Doc> methods;
    for (const auto& m : c.methods) methods.push_back(method_def(ctx, m));
    Ctx wrapper_ctx = outer;  // free functions keep module-level call spelling
    for (const Method* m : extra) methods.push_back(method_def(wrapper_ctx, *m));
    if (ctx.state->flags.count("scanner:" + c.name)) {
        ctx.import("import java.util.Scanner;");
        fields += Doc::text("private static Scanner " + std::string(kScanner) + " = new Scanner(System.in);");
    }

    std::string header = (is_public ? "public class " : "class ") + c.name;
    if (c.parent) {
        ctx.refer_class(*c.parent);
        header += " extends " + *c.parent;
    }
    std::vector<Doc> members{fields};
    members.insert(members.end(), methods.begin(), methods.end());
    Doc d;
    if (c.doc) d += render_doc_comment(*c.doc, DocKind::Class);
    return d + braced(header, separated(members));
}

std::vector<RenderedFile> JavaBackend::render_module(const Module& m, const Package& pkg) const {
    ModuleState state;
    NameSupply names;
    Ctx ctx;
    ctx.state = &state;
    ctx.names = &names;
    ctx.pkg = &pkg;
    ctx.module = &m;

    std::vector<const Method*> functions;
    for (const auto& f : m.functions) functions.push_back(&f);
    bool merged = false;
    std::vector<Doc> parts;
    for (const auto& c : m.classes) {
        bool host = c.name == m.name;
        merged = merged || (host && !functions.empty());
        parts.push_back(class_def(ctx, c, host ? functions : std::vector<const Method*>{}, host));
    }
    if (!functions.empty() && !merged) {
        ClassDecl wrapper;
        wrapper.name = m.name;
        Ctx wctx = ctx;
        std::vector<Doc> methods;
        for (const Method* f : functions) methods.push_back(method_def(wctx, *f));
        Doc fields;
        if (state.flags.count("scanner:" + m.name)) {
            ctx.import("import java.util.Scanner;");
            fields += Doc::text("private static Scanner " + std::string(kScanner) + " = new Scanner(System.in);");
        }
        methods.insert(methods.begin(), fields);
        parts.push_back(braced("public class " + m.name, separated(methods)));
    }

    for (const auto& lib : m.imports) {
        if (!pkg.find_module(lib)) state.imports.insert("import " + lib + ";");
    }
    Doc imports;
    for (const auto& line : sorted_lines(state.imports)) imports += Doc::text(line);
    std::string file = m.name + ".java";
    Doc head;
    if (m.doc) head = render_doc_comment(*m.doc, DocKind::Module, file);
    parts.insert(parts.begin(), {head, imports});
    return {RenderedFile{file, FileType::Combined, separated(parts).str()}};
}

} // namespace

std::unique_ptr<Backend> make_java_backend() { return std::make_unique<JavaBackend>(); }

} // namespace gool::detail
