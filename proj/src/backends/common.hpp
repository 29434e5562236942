#pragma once

// Machinery shared by the four target renderers.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gool/auxfiles.hpp"
#include "gool/backend.hpp"
#include "gool/patterns.hpp"

namespace gool::detail {

// Rendering precedence: the IR levels scaled by ten, leaving room for
// target-specific levels in between (Python's `not`, for one).
inline constexpr int kAtom = 100;
inline constexpr int kUnary = 90;
inline constexpr int kPow = 80;
inline constexpr int kMul = 70;
inline constexpr int kAdd = 60;
inline constexpr int kCmp = 50;
inline constexpr int kEq = 40;
inline constexpr int kAnd = 30;
inline constexpr int kOr = 20;
inline constexpr int kCond = 10;

inline int scaled(int ir_precedence) { return ir_precedence * 10; }

/// Rendered expression text with the precedence of its outermost operator.
struct Code {
    std::string text;
    int prec = kAtom;
};

std::string format_int(std::int64_t v);
/// Shortest round-trip spelling, always with a '.' or exponent.
std::string format_float(double v);
/// Double-quoted with \" \\ \n \t \r escapes.
std::string quote_string(std::string_view s);
std::string quote_char(char c);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string upper(std::string_view s);

std::optional<std::int64_t> int_literal(const Expr& e);
bool is_literal(const Expr& e);
bool is_comparison(BinaryOp op);

/// Per-module accumulators threaded through one module render.
struct ModuleState {
    std::set<std::string> imports;     // fully formatted import lines
    std::set<std::string> class_refs;  // classes named in rendered code
    std::set<std::string> module_refs; // package modules referenced by name
    std::set<std::string> flags;       // target-specific facts, e.g. "scanner:<class>"
};

struct Ctx {
    ModuleState* state = nullptr;
    NameSupply* names = nullptr;
    const Package* pkg = nullptr;
    const Module* module = nullptr;
    const ClassDecl* cls = nullptr;
    const Method* method = nullptr;
    std::vector<std::string> iterators;  // C++ for-each iterator names in scope

    bool is_iterator(const std::string& name) const;
    void import(std::string line) const { state->imports.insert(std::move(line)); }
    void refer_class(const std::string& name) const { state->class_refs.insert(name); }
};

/// Owns the accumulators behind a standalone fragment render.
struct FragmentCtx {
    ModuleState state;
    NameSupply names;
    Ctx ctx;
    FragmentCtx() {
        ctx.state = &state;
        ctx.names = &names;
    }
};

class BackendBase : public Backend {
public:
    std::string render_expr(const Expr& e) const override;
    Doc render_statement(const Stmt& s) const override;
    Doc render_method(const Method& m) const override;
    Doc render_doc_comment(const DocSpec& doc, DocKind kind, std::string_view file_name = {},
                           const std::vector<std::string>& param_order = {}) const override;

    Code expr(Ctx& ctx, const Expr& e) const;
    virtual Doc stmt(Ctx& ctx, const Stmt& s) const = 0;
    virtual Doc method_def(Ctx& ctx, const Method& m) const = 0;

protected:
    Doc body(Ctx& ctx, const Body& b) const;
    /// Renders `e` for storage into a slot of type `target` (int literals
    /// become float literals in float slots).
    virtual std::string coerce(Ctx& ctx, const Expr& e, const Type& target) const;
    std::string args_text(Ctx& ctx, const std::vector<Box<Expr>>& args) const;
    /// Child text wrapped when its precedence is below `min_prec`.
    std::string atom(Ctx& ctx, const Expr& e, int min_prec = kAtom) const;
    /// Operand of an infix operator; integral float literals compared
    /// against anything print in integer form.
    Code operand(Ctx& ctx, const Expr& e, bool comparison) const;
    Code infix(Ctx& ctx, const Expr& lhs, const Expr& rhs, std::string_view token, int prec, Assoc assoc,
               bool comparison) const;

    virtual CommentStyle comment_style() const = 0;
    /// Parameter names in the order the target's signature lists them.
    virtual std::vector<std::string> signature_params(const Method& m) const;

    // Spelling hooks.
    virtual std::string bool_text(bool b) const = 0;
    virtual std::string char_text(char c) const { return quote_char(c); }
    virtual std::string var_text(Ctx& ctx, const Variable& v) const = 0;
    virtual Code unary(Ctx& ctx, UnaryOp op, const Expr& operand) const;
    virtual Code binary(Ctx& ctx, const Binary& b, const Expr& whole) const;
    virtual Code inline_if(Ctx& ctx, const InlineIf& n) const = 0;
    virtual Code call(Ctx& ctx, const Call& c, const Type& type) const = 0;
    virtual Code math_call(Ctx& ctx, MathFn fn, const Expr& arg) const = 0;
    virtual Code pow(Ctx& ctx, const Expr& base, const Expr& exponent) const = 0;
    virtual Code list_literal(Ctx& ctx, const Type& element, const std::vector<Box<Expr>>& values) const = 0;
    virtual Code args_list(Ctx& ctx) const = 0;
    virtual Code arg_at(Ctx& ctx, const Expr& index) const = 0;
    virtual Code arg_exists(Ctx& ctx, const Expr& index) const = 0;
    virtual Code list_access(Ctx& ctx, const Expr& list, const Expr& index) const = 0;
    virtual Code list_size(Ctx& ctx, const Expr& list) const = 0;
    virtual Code list_append(Ctx& ctx, const Expr& list, const Expr& value) const = 0;
    virtual Code list_index_exists(Ctx& ctx, const Expr& list, const Expr& index) const = 0;
    virtual Code index_of(Ctx& ctx, const Expr& list, const Expr& value) const = 0;

    /// `index + 1` with literal folding.
    Code plus_one(Ctx& ctx, const Expr& index) const;
};

/// The right-hand side an assignment stores: compound modes expand to
/// `x = x op e` and increments to `x = x + 1`.
Expr assigned_value(const Assign& a);

/// Variables the target signature of an in/out procedure returns, in order.
std::vector<Variable> in_out_results(const InOutSpec& spec);

/// True when the list (or a nested list) holds strings or chars.
bool holds_text(const Type& list_type);

/// Import line sort key: keeps the output stable.
std::vector<std::string> sorted_lines(const std::set<std::string>& lines);

std::unique_ptr<Backend> make_python_backend();
std::unique_ptr<Backend> make_java_backend();
std::unique_ptr<Backend> make_csharp_backend();
std::unique_ptr<Backend> make_cpp_backend();

} // namespace gool::detail
