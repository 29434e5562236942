// C# renderer: one .cs file per module; free functions become static methods
// of a public class named after the module; ref/out for in/out parameters.

#include "clike.hpp"
#include "gool/build.hpp"
#include "gool/error.hpp"

namespace gool::detail {
namespace {

std::string capitalized(std::string_view s) {
    std::string out(s);
    if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
}

class CSharpBackend final : public CLikeBackend {
public:
    Target target() const override { return Target::CSharp; }
    std::string source_extension() const override { return "cs"; }

    std::vector<RenderedFile> render_module(const Module& m, const Package& pkg) const override;
    Doc method_def(Ctx& ctx, const Method& m) const override;

protected:
    CommentStyle comment_style() const override { return CommentStyle::Block; }

    std::string type_name(Ctx& ctx, const Type& t) const override;
    std::string self_prefix() const override { return "this."; }

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
    std::string catch_header(Ctx&) const override { return "catch (Exception)"; }
    std::string foreach_header(Ctx& ctx, const ForEach& f) const override;
    Doc list_set_stmt(Ctx& ctx, const ListSet& s) const override;
    Doc in_out_call(Ctx& ctx, const InOutCall& c) const override;

private:
    Doc class_def(Ctx& ctx, const ClassDecl& c, const std::vector<const Method*>& extra) const;
    Doc field(Ctx& ctx, const StateVar& sv) const;
    std::string qualified_function(Ctx& ctx, const std::string& name, const std::string& library) const;
};

std::string CSharpBackend::type_name(Ctx& ctx, const Type& t) const {
    switch (t.kind()) {
    case TypeKind::Void: return "void";
    case TypeKind::Bool: ctx.import("using System;"); return "Boolean";
    case TypeKind::Int: return "int";
    case TypeKind::Float: return "double";
    case TypeKind::Char: return "char";
    case TypeKind::String: return "string";
    case TypeKind::InFile: ctx.import("using System.IO;"); return "StreamReader";
    case TypeKind::OutFile: ctx.import("using System.IO;"); return "StreamWriter";
    case TypeKind::List:
        ctx.import("using System.Collections.Generic;");
        return "List<" + type_name(ctx, t.element()) + ">";
    case TypeKind::Object: ctx.refer_class(t.class_name()); return t.class_name();
    }
    return "object";
}

std::string CSharpBackend::qualified_function(Ctx& ctx, const std::string& name, const std::string& library) const {
    if (!library.empty()) return library + "." + name;
    if (ctx.cls && ctx.module && ctx.cls->name != ctx.module->name) return ctx.module->name + "." + name;
    return name;
}

Code CSharpBackend::call(Ctx& ctx, const Call& c, const Type&) const {
    std::string args = "(" + args_text(ctx, c.args) + ")";
    switch (c.form) {
    case CallForm::Function: return {qualified_function(ctx, c.name, {}) + args};
    case CallForm::ExternalFunction: return {c.library + "." + c.name + args};
    case CallForm::Constructor: ctx.refer_class(c.name); return {"new " + c.name + args};
    case CallForm::Method: return {atom(ctx, c.receiver->get()) + "." + c.name + args};
    case CallForm::SelfMethod: return {c.name + args};
    }
    return {};
}

Code CSharpBackend::math_call(Ctx& ctx, MathFn fn, const Expr& arg) const {
    ctx.import("using System;");
    std::string name = fn == MathFn::Ceil ? "Ceiling" : capitalized(to_string(fn));
    return {"Math." + name + "(" + expr(ctx, arg).text + ")"};
}

Code CSharpBackend::pow(Ctx& ctx, const Expr& base, const Expr& exponent) const {
    ctx.import("using System;");
    return {"Math.Pow(" + expr(ctx, base).text + ", " + expr(ctx, exponent).text + ")"};
}

Code CSharpBackend::list_literal(Ctx& ctx, const Type& element, const std::vector<Box<Expr>>& values) const {
    ctx.import("using System.Collections.Generic;");
    std::string type = "List<" + type_name(ctx, element) + ">";
    if (values.empty()) return {"new " + type + "(0)"};
    std::vector<std::string> parts;
    for (const auto& v : values) parts.push_back(coerce(ctx, v.get(), element));
    return {"new " + type + " {" + join(parts, ", ") + "}"};
}

Code CSharpBackend::args_list(Ctx& ctx) const {
    ctx.import("using System.Collections.Generic;");
    return {"new List<string>(args)"};
}

Code CSharpBackend::arg_at(Ctx& ctx, const Expr& index) const { return {"args[" + expr(ctx, index).text + "]"}; }

Code CSharpBackend::arg_exists(Ctx& ctx, const Expr& index) const {
    Code i = expr(ctx, index);
    return {"args.Length > " + parenthesize_child(kCmp, Side::Right, i.prec, i.text), kCmp};
}

Code CSharpBackend::list_access(Ctx& ctx, const Expr& list, const Expr& index) const {
    return {atom(ctx, list) + "[" + expr(ctx, index).text + "]"};
}

Code CSharpBackend::list_size(Ctx& ctx, const Expr& list) const { return {atom(ctx, list) + ".Count"}; }

Code CSharpBackend::list_append(Ctx& ctx, const Expr& list, const Expr& value) const {
    return {atom(ctx, list) + ".Add(" + coerce(ctx, value, list.type.element()) + ")"};
}

Code CSharpBackend::list_index_exists(Ctx& ctx, const Expr& list, const Expr& index) const {
    Code i = expr(ctx, index);
    return {atom(ctx, list) + ".Count > " + parenthesize_child(kCmp, Side::Right, i.prec, i.text), kCmp};
}

Code CSharpBackend::index_of(Ctx& ctx, const Expr& list, const Expr& value) const {
    return {atom(ctx, list) + ".IndexOf(" + coerce(ctx, value, list.type.element()) + ")"};
}

Doc CSharpBackend::print_scalar(Ctx& ctx, const Expr& value, bool newline) const {
    ctx.import("using System;");
    return Doc::text(std::string(newline ? "Console.WriteLine(" : "Console.Write(") + expr(ctx, value).text + ");");
}

Doc CSharpBackend::read_stmt(Ctx& ctx, const Read& r) const {
    ctx.import("using System;");
    std::string line = "Console.ReadLine()";
    if (r.kind == ReadKind::Int) line = "Int32.Parse(" + line + ")";
    return Doc::text(var_text(ctx, r.target) + " = " + line + ";");
}

std::string CSharpBackend::foreach_header(Ctx& ctx, const ForEach& f) const {
    return "foreach (" + type_name(ctx, f.var.type) + " " + f.var.name + " in " + expr(ctx, f.list).text + ")";
}

Doc CSharpBackend::list_set_stmt(Ctx& ctx, const ListSet& s) const {
    return Doc::text(atom(ctx, s.list) + "[" + expr(ctx, s.index).text + "] = " +
                     coerce(ctx, s.value, s.list.type.element()) + ";");
}

Doc CSharpBackend::in_out_call(Ctx& ctx, const InOutCall& c) const {
    std::vector<std::string> args;
    for (const auto& v : c.inouts) args.push_back("ref " + var_text(ctx, v));
    for (const auto& e : c.ins) args.push_back(expr(ctx, e).text);
    for (const auto& v : c.outs) args.push_back("out " + var_text(ctx, v));
    return Doc::text(qualified_function(ctx, c.name, c.library) + "(" + join(args, ", ") + ");");
}

Doc CSharpBackend::method_def(Ctx& outer, const Method& m) const {
    NameSupply names;
    Ctx ctx = method_ctx(outer, m, names);
    Doc d;
    if (m.doc) d += render_doc_comment(*m.doc, DocKind::Function, {}, signature_params(m));
    if (m.is_main) return d + method_block(ctx, m, "static void Main(string[] args)", {}, {});

    std::string scope = m.scope == Scope::Public ? "public" : "private";
    bool is_static = m.binding == Binding::Static || !m.containing_class;
    std::vector<std::string> params;
    for (const auto& p : m.params) {
        std::string mode;
        if (m.in_out && p.by_reference) {
            bool is_out = false;
            for (const auto& v : m.in_out->outs) is_out = is_out || v.name == p.var.name;
            mode = is_out ? "out " : "ref ";
        } else if (p.by_reference) {
            mode = "ref ";
        }
        params.push_back(mode + type_name(ctx, p.var.type) + " " + p.var.name);
    }
    std::string plist = "(" + join(params, ", ") + ")";
    if (m.is_constructor) return d + method_block(ctx, m, scope + " " + *m.containing_class + plist, {}, {});
    std::string header = scope + (is_static ? " static " : " ") + type_name(ctx, m.return_type) + " " + m.name + plist;
    return d + method_block(ctx, m, header, {}, {});
}

Doc CSharpBackend::field(Ctx& ctx, const StateVar& sv) const {
    std::string mods = sv.scope == Scope::Public ? "public" : "private";
    if (sv.binding == Binding::Static) mods += " static";
    if (sv.is_const) mods += " readonly";
    const Expr* init = sv.initial ? &*sv.initial : nullptr;
    return Doc::text(mods + " " + decl(ctx, sv.var, init) + ";");
}

Doc CSharpBackend::class_def(Ctx& outer, const ClassDecl& c, const std::vector<const Method*>& extra) const {
    Ctx ctx = outer;
    ctx.cls = &c;
    Doc fields;
    for (const auto& sv : c.state_vars) fields += field(ctx, sv);
    std::vector<Doc> members{fields};
    for (const auto& m : c.methods) members.push_back(method_def(ctx, m));
    for (const Method* m : extra) members.push_back(method_def(outer, *m));

    std::string header = (c.scope == Scope::Public ? "public class " : "class ") + c.name;
    if (c.parent) {
        ctx.refer_class(*c.parent);
        header += " : " + *c.parent;
    }
    Doc d;
    if (c.doc) d += render_doc_comment(*c.doc, DocKind::Class);
    return d + braced(header, separated(members));
}

std::vector<RenderedFile> CSharpBackend::render_module(const Module& m, const Package& pkg) const {
    ModuleState state;
    state.imports.insert("using System;");  // Console, Math and Exception live here
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
        parts.push_back(class_def(ctx, c, host ? functions : std::vector<const Method*>{}));
    }
    if (!functions.empty() && !merged) {
        std::vector<Doc> methods;
        for (const Method* f : functions) methods.push_back(method_def(ctx, *f));
        parts.push_back(braced("public class " + m.name, separated(methods)));
    }

    for (const auto& lib : m.imports) {
        if (!pkg.find_module(lib)) state.imports.insert("using " + lib + ";");
    }
    Doc imports;
    for (const auto& line : sorted_lines(state.imports)) imports += Doc::text(line);
    std::string file = m.name + ".cs";
    Doc head;
    if (m.doc) head = render_doc_comment(*m.doc, DocKind::Module, file);
    parts.insert(parts.begin(), {head, imports});
    return {RenderedFile{file, FileType::Combined, separated(parts).str()}};
}

} // namespace

std::unique_ptr<Backend> make_csharp_backend() { return std::make_unique<CSharpBackend>(); }

} // namespace gool::detail
