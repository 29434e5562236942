#pragma once

// Statement layer shared by the brace-delimited targets (Java, C#, C++).

#include "common.hpp"

namespace gool::detail {

class CLikeBackend : public BackendBase {
public:
    Doc stmt(Ctx& ctx, const Stmt& s) const override;

protected:
    std::string bool_text(bool b) const override { return b ? "true" : "false"; }
    std::string var_text(Ctx& ctx, const Variable& v) const override;
    Code inline_if(Ctx& ctx, const InlineIf& n) const override;

    virtual std::string type_name(Ctx& ctx, const Type& t) const = 0;
    virtual std::string self_prefix() const = 0;
    virtual std::string static_sep() const { return "."; }
    /// "T x" or "T x = v", without the semicolon.
    virtual std::string decl(Ctx& ctx, const Variable& v, const Expr* init) const;
    virtual Doc print_scalar(Ctx& ctx, const Expr& value, bool newline) const = 0;
    virtual Doc read_stmt(Ctx& ctx, const Read& r) const = 0;
    virtual std::string throw_text(Ctx& ctx, const std::string& message) const = 0;
    virtual Doc free_stmt(Ctx& ctx, const Variable& v) const;
    virtual std::string catch_header(Ctx& ctx) const = 0;
    virtual std::string foreach_header(Ctx& ctx, const ForEach& f) const = 0;
    /// Scope adjustments for a for-each body (C++ tracks iterator names).
    virtual void enter_foreach(Ctx&, const ForEach&) const {}
    virtual Doc switch_stmt(Ctx& ctx, const Switch& s) const;
    virtual Doc list_set_stmt(Ctx& ctx, const ListSet& s) const = 0;
    virtual Doc in_out_call(Ctx& ctx, const InOutCall& c) const = 0;

    /// `header {` body `}`.
    Doc braced(const std::string& header, const Doc& inner) const;
    /// An if/else-if/else chain.
    Doc if_chain(Ctx& ctx, const std::vector<std::pair<std::string, const Body*>>& branches,
                 const Body* else_body) const;
    /// A one-line statement without its trailing ';' (for loop headers).
    std::string stmt_line(Ctx& ctx, const Stmt& s) const;
    /// A method body with optional leading and trailing blocks.
    Doc method_block(Ctx& ctx, const Method& m, const std::string& header, const Doc& prelude,
                     const Doc& postlude) const;
    /// A method context with a fresh name supply.
    Ctx method_ctx(const Ctx& outer, const Method& m, NameSupply& names) const;
};

} // namespace gool::detail
