// C++ renderer: a header with class declarations and prototypes plus a
// source file with definitions; objects have value semantics.

#include "clike.hpp"
#include "gool/build.hpp"
#include "gool/error.hpp"

namespace gool::detail {
namespace {

class CppBackend final : public CLikeBackend {
public:
    Target target() const override { return Target::Cpp; }
    std::string source_extension() const override { return "cpp"; }

    std::vector<RenderedFile> render_module(const Module& m, const Package& pkg) const override;
    Doc method_def(Ctx& ctx, const Method& m) const override;

protected:
    CommentStyle comment_style() const override { return CommentStyle::Block; }

    std::string type_name(Ctx& ctx, const Type& t) const override;
    std::string self_prefix() const override { return "this->"; }
    std::string static_sep() const override { return "::"; }
    std::string decl(Ctx& ctx, const Variable& v, const Expr* init) const override;

    Code call(Ctx& ctx, const Call& c, const Type& type) const override;
    Code math_call(Ctx& ctx, MathFn fn, const Expr& arg) const override;
    Code pow(Ctx& ctx, const Expr& base, const Expr& exponent) const override;
    Code binary(Ctx& ctx, const Binary& b, const Expr& whole) const override;
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
    std::string throw_text(Ctx& ctx, const std::string& message) const override {
        ctx.import("#include <stdexcept>");
        return "throw std::runtime_error(" + quote_string(message) + ");";
    }
    Doc free_stmt(Ctx& ctx, const Variable& v) const override { return Doc::text("delete " + var_text(ctx, v) + ";"); }
    std::string catch_header(Ctx& ctx) const override {
        ctx.import("#include <stdexcept>");
        return "catch (const std::exception &exc)";
    }
    std::string foreach_header(Ctx& ctx, const ForEach& f) const override;
    void enter_foreach(Ctx& ctx, const ForEach& f) const override { ctx.iterators.push_back(f.var.name); }
    Doc switch_stmt(Ctx& ctx, const Switch& s) const override;
    Doc list_set_stmt(Ctx& ctx, const ListSet& s) const override;
    Doc in_out_call(Ctx& ctx, const InOutCall& c) const override;

private:
    std::string param_list(Ctx& ctx, const Method& m) const;
    /// Declaration inside a class body or a free-function prototype.
    Doc declaration(Ctx& ctx, const Method& m) const;
    Doc class_declaration(Ctx& ctx, const ClassDecl& c) const;
    Doc member_decl(Ctx& ctx, const StateVar& sv) const;
    Doc definition(Ctx& ctx, const Method& m, bool with_doc) const;
    std::vector<std::string> includes(const Ctx& ctx, const Module& m, const Package& pkg) const;
};

std::string CppBackend::type_name(Ctx& ctx, const Type& t) const {
    switch (t.kind()) {
    case TypeKind::Void: return "void";
    case TypeKind::Bool: return "bool";
    case TypeKind::Int: return "int";
    case TypeKind::Float: return "double";
    case TypeKind::Char: return "char";
    case TypeKind::String: ctx.import("#include <string>"); return "std::string";
    case TypeKind::InFile: ctx.import("#include <fstream>"); return "std::ifstream";
    case TypeKind::OutFile: ctx.import("#include <fstream>"); return "std::ofstream";
    case TypeKind::List:
        ctx.import("#include <vector>");
        return "std::vector<" + type_name(ctx, t.element()) + ">";
    case TypeKind::Object: ctx.refer_class(t.class_name()); return t.class_name();
    }
    return "void";
}

std::string CppBackend::decl(Ctx& ctx, const Variable& v, const Expr* init) const {
    if (init) {
        if (const auto* lit = std::get_if<ListLiteral>(&init->node)) {
            std::string head = type_name(ctx, v.type) + " " + v.name;
            if (lit->elements.empty()) return head + "(0)";
            std::vector<std::string> parts;
            for (const auto& e : lit->elements) parts.push_back(coerce(ctx, e.get(), v.type.element()));
            return head + " {" + join(parts, ", ") + "}";
        }
    }
    return CLikeBackend::decl(ctx, v, init);
}

Code CppBackend::call(Ctx& ctx, const Call& c, const Type&) const {
    std::string args = "(" + args_text(ctx, c.args) + ")";
    switch (c.form) {
    case CallForm::Function:
    case CallForm::SelfMethod: return {c.name + args};
    case CallForm::ExternalFunction:
        if (ctx.pkg && ctx.pkg->find_module(c.library)) {
            ctx.state->module_refs.insert(c.library);
            return {c.name + args};
        }
        return {c.library + "::" + c.name + args};
    case CallForm::Constructor: ctx.refer_class(c.name); return {c.name + args};
    case CallForm::Method: return {atom(ctx, c.receiver->get()) + "." + c.name + args};
    }
    return {};
}

Code CppBackend::math_call(Ctx& ctx, MathFn fn, const Expr& arg) const {
    ctx.import("#include <math.h>");
    return {std::string(to_string(fn)) + "(" + expr(ctx, arg).text + ")"};
}

// Two quoted literals are char arrays in C++; wrapping the left one makes
// `+` and the comparisons resolve to std::string's operators.
Code CppBackend::binary(Ctx& ctx, const Binary& b, const Expr& whole) const {
    Code out = BackendBase::binary(ctx, b, whole);
    const auto* lit = std::get_if<Literal>(&b.lhs.get().node);
    const auto* text = lit ? std::get_if<std::string>(&lit->value) : nullptr;
    const bool string_op = b.op != BinaryOp::And && b.op != BinaryOp::Or && b.op != BinaryOp::Pow;
    if (text && string_op) {
        const std::string quoted = quote_string(*text);
        if (out.text.compare(0, quoted.size(), quoted) == 0) {
            ctx.import("#include <string>");
            out.text = "std::string(" + quoted + ")" + out.text.substr(quoted.size());
        }
    }
    return out;
}

Code CppBackend::pow(Ctx& ctx, const Expr& base, const Expr& exponent) const {
    ctx.import("#include <math.h>");
    return {"pow(" + expr(ctx, base).text + ", " + expr(ctx, exponent).text + ")"};
}

Code CppBackend::list_literal(Ctx& ctx, const Type& element, const std::vector<Box<Expr>>& values) const {
    ctx.import("#include <vector>");
    std::string type = "std::vector<" + type_name(ctx, element) + ">";
    if (values.empty()) return {type + "(0)"};
    std::vector<std::string> parts;
    for (const auto& v : values) parts.push_back(coerce(ctx, v.get(), element));
    return {type + " {" + join(parts, ", ") + "}"};
}

Code CppBackend::args_list(Ctx& ctx) const {
    ctx.import("#include <string>");
    ctx.import("#include <vector>");
    return {"std::vector<std::string>(argv + 1, argv + argc)"};
}

Code CppBackend::arg_at(Ctx& ctx, const Expr& index) const {
    ctx.import("#include <string>");
    return {"std::string(argv[" + plus_one(ctx, index).text + "])"};
}

Code CppBackend::arg_exists(Ctx& ctx, const Expr& index) const {
    Code i = plus_one(ctx, index);
    return {"argc > " + parenthesize_child(kCmp, Side::Right, i.prec, i.text), kCmp};
}

Code CppBackend::list_access(Ctx& ctx, const Expr& list, const Expr& index) const {
    return {atom(ctx, list) + ".at(" + expr(ctx, index).text + ")"};
}

Code CppBackend::list_size(Ctx& ctx, const Expr& list) const {
    return {"(int)(" + atom(ctx, list) + ".size())", kUnary};
}

Code CppBackend::list_append(Ctx& ctx, const Expr& list, const Expr& value) const {
    return {atom(ctx, list) + ".push_back(" + coerce(ctx, value, list.type.element()) + ")"};
}

Code CppBackend::list_index_exists(Ctx& ctx, const Expr& list, const Expr& index) const {
    Code i = expr(ctx, index);
    return {"(int)(" + atom(ctx, list) + ".size()) > " + parenthesize_child(kCmp, Side::Right, i.prec, i.text), kCmp};
}

Code CppBackend::index_of(Ctx& ctx, const Expr& list, const Expr& value) const {
    ctx.import("#include <algorithm>");
    std::string l = atom(ctx, list);
    return {"(int)(std::find(" + l + ".begin(), " + l + ".end(), " + expr(ctx, value).text + ") - " + l + ".begin())",
            kUnary};
}

Doc CppBackend::print_scalar(Ctx& ctx, const Expr& value, bool newline) const {
    ctx.import("#include <iostream>");
    Code v = expr(ctx, value);
    // `<<` binds tighter than comparisons, logic and ?:.
    std::string text = v.prec < kAdd ? "(" + v.text + ")" : v.text;
    std::string line = "std::cout << ";
    if (value.type.is(TypeKind::Bool)) line += "std::boolalpha << ";
    line += text;
    if (newline) line += " << std::endl";
    return Doc::text(line + ";");
}

Doc CppBackend::read_stmt(Ctx& ctx, const Read& r) const {
    ctx.import("#include <iostream>");
    std::string target = var_text(ctx, r.target);
    if (r.kind == ReadKind::Line) {
        ctx.import("#include <string>");
        return Doc::text("std::getline(std::cin, " + target + ");");
    }
    return Doc::text("std::cin >> " + target + ";") + Doc::text("std::cin.ignore();");
}

std::string CppBackend::foreach_header(Ctx& ctx, const ForEach& f) const {
    std::string list = atom(ctx, f.list);
    return "for (" + type_name(ctx, f.list.type) + "::iterator " + f.var.name + " = " + list + ".begin(); " +
           f.var.name + " != " + list + ".end(); " + f.var.name + "++)";
}

Doc CppBackend::switch_stmt(Ctx& ctx, const Switch& s) const {
    if (!s.scrutinee.type.is(TypeKind::String)) return CLikeBackend::switch_stmt(ctx, s);
    // C++ cannot switch on strings; compare in sequence instead.
    std::vector<std::pair<std::string, const Body*>> branches;
    for (const auto& c : s.cases) {
        branches.emplace_back(expr(ctx, apply_binary(BinaryOp::Eq, s.scrutinee, c.label)).text, &c.body);
    }
    return if_chain(ctx, branches, s.default_body.empty() ? nullptr : &s.default_body);
}

Doc CppBackend::list_set_stmt(Ctx& ctx, const ListSet& s) const {
    return Doc::text(atom(ctx, s.list) + ".at(" + expr(ctx, s.index).text + ") = " +
                     coerce(ctx, s.value, s.list.type.element()) + ";");
}

Doc CppBackend::in_out_call(Ctx& ctx, const InOutCall& c) const {
    std::vector<std::string> args;
    for (const auto& v : c.inouts) args.push_back(var_text(ctx, v));
    for (const auto& e : c.ins) args.push_back(expr(ctx, e).text);
    for (const auto& v : c.outs) args.push_back(var_text(ctx, v));
    if (!c.library.empty() && ctx.pkg && ctx.pkg->find_module(c.library)) ctx.state->module_refs.insert(c.library);
    return Doc::text(c.name + "(" + join(args, ", ") + ");");
}

std::string CppBackend::param_list(Ctx& ctx, const Method& m) const {
    std::vector<std::string> params;
    for (const auto& p : m.params) {
        params.push_back(type_name(ctx, p.var.type) + (p.by_reference ? " &" : " ") + p.var.name);
    }
    return "(" + join(params, ", ") + ")";
}

Doc CppBackend::definition(Ctx& outer, const Method& m, bool with_doc) const {
    NameSupply names;
    Ctx ctx = method_ctx(outer, m, names);
    Doc d;
    if (with_doc && m.doc) d += render_doc_comment(*m.doc, DocKind::Function, {}, signature_params(m));
    if (m.is_main) {
        return d + method_block(ctx, m, "int main(int argc, const char *argv[])", {}, Doc::text("return 0;"));
    }
    std::string qualifier = m.containing_class ? *m.containing_class + "::" : "";
    std::string plist = param_list(ctx, m);
    if (m.is_constructor) return d + method_block(ctx, m, qualifier + *m.containing_class + plist, {}, {});
    return d + method_block(ctx, m, type_name(ctx, m.return_type) + " " + qualifier + m.name + plist, {}, {});
}

Doc CppBackend::method_def(Ctx& ctx, const Method& m) const { return definition(ctx, m, true); }

Doc CppBackend::declaration(Ctx& ctx, const Method& m) const {
    Doc d;
    if (m.doc) d += render_doc_comment(*m.doc, DocKind::Function, {}, signature_params(m));
    std::string plist = param_list(ctx, m);
    if (m.is_constructor) return d + Doc::text(*m.containing_class + plist + ";");
    std::string prefix = m.containing_class && m.binding == Binding::Static ? "static " : "";
    return d + Doc::text(prefix + type_name(ctx, m.return_type) + " " + m.name + plist + ";");
}

Doc CppBackend::member_decl(Ctx& ctx, const StateVar& sv) const {
    std::string prefix = sv.binding == Binding::Static ? "static " : "";
    if (sv.is_const) prefix += "const ";
    // Static members are defined (and initialised) in the source file.
    const Expr* init = sv.initial && sv.binding == Binding::Dynamic ? &*sv.initial : nullptr;
    return Doc::text(prefix + decl(ctx, sv.var, init) + ";");
}

Doc CppBackend::class_declaration(Ctx& outer, const ClassDecl& c) const {
    Ctx ctx = outer;
    ctx.cls = &c;
    std::vector<Doc> groups;
    for (Scope scope : {Scope::Public, Scope::Private}) {
        Doc members;
        for (const auto& sv : c.state_vars) {
            if (sv.scope == scope) members += member_decl(ctx, sv);
        }
        for (const auto& m : c.methods) {
            if (m.scope == scope) members += declaration(ctx, m);
        }
        if (members.empty()) continue;
        groups.push_back(Doc::text(scope == Scope::Public ? "public:" : "private:") + members.indented());
    }
    std::string header = "class " + c.name;
    if (c.parent) {
        ctx.refer_class(*c.parent);
        header += " : public " + *c.parent;
    }
    Doc d;
    if (c.doc) d += render_doc_comment(*c.doc, DocKind::Class);
    return d + Doc::text(header + " {") + separated(groups) + Doc::text("};");
}

std::vector<std::string> CppBackend::includes(const Ctx& ctx, const Module& m, const Package& pkg) const {
    std::set<std::string> lines = ctx.state->imports;
    for (const auto& cls : ctx.state->class_refs) {
        const Module* owner = pkg.module_of_class(cls);
        if (owner && owner->name != m.name) lines.insert("#include \"" + owner->name + ".hpp\"");
    }
    for (const auto& mod : ctx.state->module_refs) {
        if (mod != m.name) lines.insert("#include \"" + mod + ".hpp\"");
    }
    return sorted_lines(lines);
}

std::vector<RenderedFile> CppBackend::render_module(const Module& m, const Package& pkg) const {
    std::string header_name = m.name + ".hpp";
    std::string source_name = m.name + ".cpp";

    // Header: class declarations and free-function prototypes.
    ModuleState hstate;
    NameSupply hnames;
    Ctx hctx;
    hctx.state = &hstate;
    hctx.names = &hnames;
    hctx.pkg = &pkg;
    hctx.module = &m;
    std::vector<Doc> hparts;
    for (const auto& c : m.classes) hparts.push_back(class_declaration(hctx, c));
    Doc prototypes;
    for (const auto& f : m.functions) {
        if (!f.is_main) prototypes += declaration(hctx, f);
    }
    hparts.push_back(prototypes);
    bool has_header = !separated(hparts).empty();

    // Source: definitions.
    ModuleState sstate;
    NameSupply snames;
    Ctx sctx = hctx;
    sctx.state = &sstate;
    sctx.names = &snames;
    std::vector<Doc> sparts;
    Doc statics;
    for (const auto& c : m.classes) {
        Ctx cctx = sctx;
        cctx.cls = &c;
        for (const auto& sv : c.state_vars) {
            if (sv.binding != Binding::Static) continue;
            std::string line = (sv.is_const ? "const " : "") + type_name(cctx, sv.var.type) + " " + c.name + "::" +
                               sv.var.name;
            if (sv.initial) line += " = " + coerce(cctx, *sv.initial, sv.var.type);
            statics += Doc::text(line + ";");
        }
    }
    sparts.push_back(statics);
    for (const auto& c : m.classes) {
        Ctx cctx = sctx;
        cctx.cls = &c;
        for (const auto& meth : c.methods) sparts.push_back(definition(cctx, meth, false));
    }
    for (const auto& f : m.functions) sparts.push_back(definition(sctx, f, f.is_main || !has_header));
    bool has_source = !separated(sparts).empty();

    for (const auto& lib : m.imports) {
        if (pkg.find_module(lib)) {
            sstate.module_refs.insert(lib);
        } else {
            sstate.imports.insert("#include <" + lib + ">");
        }
    }

    std::vector<RenderedFile> files;
    Doc hdoc;
    Doc sdoc;
    if (m.doc) {
        hdoc = render_doc_comment(*m.doc, DocKind::Module, header_name);
        sdoc = render_doc_comment(*m.doc, DocKind::Module, source_name);
    }
    if (has_header) {
        std::string guard = upper(m.name) + "_HPP";
        Doc includes_doc;
        for (const auto& line : includes(hctx, m, pkg)) includes_doc += Doc::text(line);
        std::vector<Doc> parts{hdoc, Doc::text("#ifndef " + guard) + Doc::text("#define " + guard), includes_doc};
        parts.insert(parts.end(), hparts.begin(), hparts.end());
        parts.push_back(Doc::text("#endif"));
        files.push_back(RenderedFile{header_name, FileType::Header, separated(parts).str()});
    }
    if (has_source) {
        std::vector<std::string> header_lines = includes(hctx, m, pkg);
        Doc includes_doc;
        for (const auto& line : includes(sctx, m, pkg)) {
            if (std::find(header_lines.begin(), header_lines.end(), line) == header_lines.end()) {
                includes_doc += Doc::text(line);
            }
        }
        std::vector<Doc> parts{sdoc};
        if (has_header) parts.push_back(Doc::text("#include \"" + header_name + "\""));
        parts.push_back(includes_doc);
        parts.insert(parts.end(), sparts.begin(), sparts.end());
        files.push_back(RenderedFile{source_name, FileType::Source, separated(parts).str()});
    }
    return files;
}

} // namespace

std::unique_ptr<Backend> make_cpp_backend() { return std::make_unique<CppBackend>(); }

} // namespace gool::detail
