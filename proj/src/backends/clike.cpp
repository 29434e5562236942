#include "clike.hpp"

#include "gool/build.hpp"
#include "gool/error.hpp"

namespace gool::detail {

std::string CLikeBackend::var_text(Ctx& ctx, const Variable& v) const {
    switch (v.form) {
    case VarForm::Plain: return ctx.is_iterator(v.name) ? "(*" + v.name + ")" : v.name;
    case VarForm::External: return v.qualifier + static_sep() + v.name;
    case VarForm::ClassMember: ctx.refer_class(v.qualifier); return v.qualifier + static_sep() + v.name;
    case VarForm::ObjectMember: return var_text(ctx, v.owner->get()) + "." + v.name;
    case VarForm::Self: return self_prefix() + v.name;
    }
    return v.name;
}

Code CLikeBackend::inline_if(Ctx& ctx, const InlineIf& n) const {
    Code c = expr(ctx, n.cond.get());
    Code t = expr(ctx, n.then_value.get());
    Code f = expr(ctx, n.else_value.get());
    return {parenthesize_child(kCond, Side::Left, c.prec, c.text, Assoc::Right) + " ? " + t.text + " : " +
                parenthesize_child(kCond, Side::Right, f.prec, f.text, Assoc::Right),
            kCond};
}

std::string CLikeBackend::decl(Ctx& ctx, const Variable& v, const Expr* init) const {
    std::string out = type_name(ctx, v.type) + " " + v.name;
    if (init) out += " = " + coerce(ctx, *init, v.type);
    return out;
}

Doc CLikeBackend::free_stmt(Ctx&, const Variable&) const { return {}; }

Doc CLikeBackend::braced(const std::string& header, const Doc& inner) const {
    return Doc::text(header + " {") + inner.indented() + Doc::text("}");
}

Doc CLikeBackend::if_chain(Ctx& ctx, const std::vector<std::pair<std::string, const Body*>>& branches,
                           const Body* else_body) const {
    Doc d;
    bool first = true;
    for (const auto& [cond, b] : branches) {
        d += Doc::text(first ? "if (" + cond + ") {" : "} else if (" + cond + ") {");
        d += body(ctx, *b).indented();
        first = false;
    }
    if (else_body) {
        d += Doc::text("} else {");
        d += body(ctx, *else_body).indented();
    }
    d += Doc::text("}");
    return d;
}

Doc CLikeBackend::switch_stmt(Ctx& ctx, const Switch& s) const {
    Doc cases;
    for (const auto& c : s.cases) {
        cases += Doc::text("case " + expr(ctx, c.label).text + ":");
        cases += (body(ctx, c.body) + Doc::text("break;")).indented();
    }
    cases += Doc::text("default:");
    cases += (body(ctx, s.default_body) + Doc::text("break;")).indented();
    return braced("switch (" + expr(ctx, s.scrutinee).text + ")", cases);
}

std::string CLikeBackend::stmt_line(Ctx& ctx, const Stmt& s) const {
    std::string line = stmt(ctx, s).str();
    if (line.find('\n') != std::string::npos) {
        throw Error(ErrorKind::UnsupportedConstruct, "loop header statement must fit on one line");
    }
    if (!line.empty() && line.back() == ';') line.pop_back();
    return line;
}

Ctx CLikeBackend::method_ctx(const Ctx& outer, const Method& m, NameSupply& names) const {
    Ctx ctx = outer;
    ctx.names = &names;
    ctx.method = &m;
    ctx.iterators.clear();
    return ctx;
}

Doc CLikeBackend::method_block(Ctx& ctx, const Method& m, const std::string& header, const Doc& prelude,
                               const Doc& postlude) const {
    return braced(header, separated({prelude, body(ctx, m.body), postlude}));
}

Doc CLikeBackend::stmt(Ctx& ctx, const Stmt& s) const {
    return std::visit(
        [&](const auto& n) -> Doc {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarDec>) {
                return Doc::text(decl(ctx, n.var, nullptr) + ";");
            } else if constexpr (std::is_same_v<T, VarDecDef>) {
                return Doc::text(decl(ctx, n.var, &n.value) + ";");
            } else if constexpr (std::is_same_v<T, Assign>) {
                if (n.mode == AssignMode::Inc) return Doc::text(var_text(ctx, n.target) + "++;");
                if (n.mode == AssignMode::Dec) return Doc::text(var_text(ctx, n.target) + "--;");
                return Doc::text(var_text(ctx, n.target) + " = " + coerce(ctx, assigned_value(n), n.target.type) + ";");
            } else if constexpr (std::is_same_v<T, Return>) {
                std::string v = ctx.method ? coerce(ctx, n.value, ctx.method->return_type) : expr(ctx, n.value).text;
                return Doc::text("return " + v + ";");
            } else if constexpr (std::is_same_v<T, Throw>) {
                return Doc::text(throw_text(ctx, n.message));
            } else if constexpr (std::is_same_v<T, Free>) {
                return free_stmt(ctx, n.var);
            } else if constexpr (std::is_same_v<T, Comment>) {
                return Doc::text("// " + n.text);
            } else if constexpr (std::is_same_v<T, Break>) {
                return Doc::text("break;");
            } else if constexpr (std::is_same_v<T, Continue>) {
                return Doc::text("continue;");
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                return Doc::text(expr(ctx, n.value).text + ";");
            } else if constexpr (std::is_same_v<T, If>) {
                std::vector<std::pair<std::string, const Body*>> branches;
                for (const auto& br : n.branches) branches.emplace_back(expr(ctx, br.cond).text, &br.body);
                return if_chain(ctx, branches, n.else_body ? &*n.else_body : nullptr);
            } else if constexpr (std::is_same_v<T, Switch>) {
                return switch_stmt(ctx, n);
            } else if constexpr (std::is_same_v<T, For>) {
                Ctx inner = ctx;
                std::string header = "for (" + stmt_line(inner, n.init.get()) + "; " + expr(inner, n.cond).text + "; " +
                                     stmt_line(inner, n.update.get()) + ")";
                return braced(header, body(inner, n.body));
            } else if constexpr (std::is_same_v<T, ForRange>) {
                auto step = int_literal(n.step);
                bool descending = step && *step < 0;
                Variable loop_var = n.var;
                Stmt update = step == 1    ? increment(loop_var)
                              : step == -1 ? decrement(loop_var)
                                           : add_assign(loop_var, n.step);
                Expr cond = apply_binary(descending ? BinaryOp::Ge : BinaryOp::Le, value_of(loop_var), n.end);
                return stmt(ctx, for_loop(var_dec_def(loop_var, n.start), cond, update, n.body));
            } else if constexpr (std::is_same_v<T, ForEach>) {
                Ctx inner = ctx;
                std::string header = foreach_header(inner, n);
                enter_foreach(inner, n);
                return braced(header, body(inner, n.body));
            } else if constexpr (std::is_same_v<T, While>) {
                return braced("while (" + expr(ctx, n.cond).text + ")", body(ctx, n.body));
            } else if constexpr (std::is_same_v<T, TryCatch>) {
                return Doc::text("try {") + body(ctx, n.try_body).indented() + Doc::text("} " + catch_header(ctx) + " {") +
                       body(ctx, n.catch_body).indented() + Doc::text("}");
            } else if constexpr (std::is_same_v<T, ListSlice>) {
                std::string temp = ctx.names->fresh("temp");
                return body(ctx, lower_list_slice(n, temp, "i_" + temp));
            } else if constexpr (std::is_same_v<T, ListSet>) {
                return list_set_stmt(ctx, n);
            } else if constexpr (std::is_same_v<T, Print>) {
                if (n.value.type.is_list()) return body(ctx, lower_list_print(n.value, n.newline));
                return print_scalar(ctx, n.value, n.newline);
            } else if constexpr (std::is_same_v<T, Read>) {
                return read_stmt(ctx, n);
            } else if constexpr (std::is_same_v<T, Inline>) {
                return body(ctx, n.body);
            } else if constexpr (std::is_same_v<T, InOutCall>) {
                return in_out_call(ctx, n);
            } else {
                return stmt(ctx, lower_pattern(s));
            }
        },
        s.node);
}

} // namespace gool::detail
