#include "gool/build.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "checks.hpp"
#include "gool/auxfiles.hpp"
#include "gool/error.hpp"

namespace gool {

namespace {

constexpr int kUnaryPrecedence = 9;

const OperatorSpec kUnarySpecs[] = {
    {"?!", kUnaryPrecedence, true, Assoc::Left},
    {"#~", kUnaryPrecedence, true, Assoc::Left},
    {"#/^", kUnaryPrecedence, true, Assoc::Left},
    {"#|", kUnaryPrecedence, true, Assoc::Left},
};

const OperatorSpec kBinarySpecs[] = {
    {"?&&", 3, false, Assoc::Left}, {"?||", 2, false, Assoc::Left}, {"?<", 5, false, Assoc::Left},
    {"?<=", 5, false, Assoc::Left}, {"?>", 5, false, Assoc::Left},  {"?>=", 5, false, Assoc::Left},
    {"?==", 4, false, Assoc::Left}, {"?!=", 4, false, Assoc::Left}, {"#+", 6, false, Assoc::Left},
    {"#-", 6, false, Assoc::Left},  {"#*", 7, false, Assoc::Left},  {"#/", 7, false, Assoc::Left},
    {"#^", 8, false, Assoc::Right},
};

Expr make(ExprNode node, Type type, int precedence = kAtomicPrecedence) {
    return Expr{std::move(node), std::move(type), precedence};
}

Stmt make_stmt(StmtNode node) { return Stmt{std::move(node)}; }

std::vector<Box<Expr>> boxed(std::vector<Expr> exprs) {
    std::vector<Box<Expr>> out;
    out.reserve(exprs.size());
    for (auto& e : exprs) out.emplace_back(std::move(e));
    return out;
}

std::string op_context(const OperatorSpec& spec) { return "operator " + std::string(spec.symbol); }

} // namespace

// Operators ------------------------------------------------------------------

const OperatorSpec& operator_spec(UnaryOp op) { return kUnarySpecs[static_cast<int>(op)]; }
const OperatorSpec& operator_spec(BinaryOp op) { return kBinarySpecs[static_cast<int>(op)]; }

std::optional<UnaryOp> parse_unary_op(std::string_view symbol) {
    for (int i = 0; i < 4; ++i) {
        if (kUnarySpecs[i].symbol == symbol) return static_cast<UnaryOp>(i);
    }
    return std::nullopt;
}

std::optional<BinaryOp> parse_binary_op(std::string_view symbol) {
    for (int i = 0; i < 13; ++i) {
        if (kBinarySpecs[i].symbol == symbol) return static_cast<BinaryOp>(i);
    }
    return std::nullopt;
}

std::string_view to_string(MathFn fn) {
    switch (fn) {
    case MathFn::Sin: return "sin";
    case MathFn::Cos: return "cos";
    case MathFn::Tan: return "tan";
    case MathFn::Floor: return "floor";
    case MathFn::Ceil: return "ceil";
    case MathFn::Exp: return "exp";
    case MathFn::Log: return "log";
    case MathFn::Sqrt: return "sqrt";
    case MathFn::Abs: return "abs";
    }
    return "?";
}

std::optional<MathFn> parse_math_fn(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(MathFn::Abs); ++i) {
        if (to_string(static_cast<MathFn>(i)) == name) return static_cast<MathFn>(i);
    }
    return std::nullopt;
}

// Package lookups ---------------------------------------------------------------

const Module* Package::main_module() const {
    for (const auto& m : modules) {
        if (m.is_main_module) return &m;
    }
    return nullptr;
}

const Module* Package::module_of_class(std::string_view name) const {
    for (const auto& m : modules) {
        for (const auto& c : m.classes) {
            if (c.name == name) return &m;
        }
    }
    return nullptr;
}

const Module* Package::find_module(std::string_view name) const {
    for (const auto& m : modules) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

// Variables ------------------------------------------------------------------

Variable var(std::string name, Type type) {
    require_identifier(name, "variable name");
    Variable v;
    v.name = std::move(name);
    v.type = std::move(type);
    return v;
}

Variable list_var(std::string name, Type element) { return var(std::move(name), Type::list(std::move(element))); }

Variable ext_var(std::string library, std::string name, Type type) {
    require_identifier(library, "library name");
    Variable v = var(std::move(name), std::move(type));
    v.form = VarForm::External;
    v.qualifier = std::move(library);
    return v;
}

Variable class_var(std::string class_name, std::string name, Type type) {
    require_identifier(class_name, "class name");
    Variable v = var(std::move(name), std::move(type));
    v.form = VarForm::ClassMember;
    v.binding = Binding::Static;
    v.qualifier = std::move(class_name);
    return v;
}

Variable obj_var(const Variable& owner, std::string name, Type type) {
    if (!owner.type.is(TypeKind::Object)) {
        throw Error(ErrorKind::TypeMismatch, "owner of " + name + " must be an object, got " +
                                                 owner.type.describe());
    }
    Variable v = var(std::move(name), std::move(type));
    v.form = VarForm::ObjectMember;
    v.owner = Box<Variable>(owner);
    return v;
}

Variable self_var(std::string name, Type type) {
    Variable v = var(std::move(name), std::move(type));
    v.form = VarForm::Self;
    return v;
}

Variable with_binding(Variable v, Binding binding) {
    v.binding = binding;
    return v;
}

// Literals and reads ---------------------------------------------------------

Expr lit_true() { return lit_bool(true); }
Expr lit_false() { return lit_bool(false); }
Expr lit_bool(bool value) { return make(Literal{value}, Type::boolean()); }
Expr lit_int(std::int64_t value) { return make(Literal{value}, Type::integer()); }

Expr lit_float(double value) {
    if (!std::isfinite(value)) throw Error(ErrorKind::InvalidLiteral, "float literal must be finite");
    return make(Literal{value}, Type::floating());
}

Expr lit_char(char value) { return make(Literal{value}, Type::character()); }
Expr lit_string(std::string value) { return make(Literal{std::move(value)}, Type::string()); }

Expr lit_list(Type element, std::vector<Expr> values) {
    for (const auto& v : values) {
        detail::require_assignable(element, v.type, "list literal element");
    }
    return make(ListLiteral{boxed(std::move(values))}, Type::list(std::move(element)));
}

Expr value_of(const Variable& v) { return make(ValueOf{v}, v.type); }

// Operators ------------------------------------------------------------------

Expr apply_unary(UnaryOp op, Expr operand) {
    const auto& spec = operator_spec(op);
    Type result = operand.type;
    switch (op) {
    case UnaryOp::Not:
        detail::require_bool(operand, op_context(spec));
        break;
    case UnaryOp::Negate:
    case UnaryOp::Abs:
        if (!operand.type.is_numeric()) {
            throw Error(ErrorKind::TypeMismatch,
                        op_context(spec) + " needs a numeric operand, got " + operand.type.describe());
        }
        break;
    case UnaryOp::Sqrt:
        if (!operand.type.is_numeric()) {
            throw Error(ErrorKind::TypeMismatch,
                        op_context(spec) + " needs a numeric operand, got " + operand.type.describe());
        }
        result = Type::floating();
        break;
    }
    return make(Unary{op, Box<Expr>(std::move(operand))}, std::move(result), spec.precedence);
}

Expr apply_binary(BinaryOp op, Expr lhs, Expr rhs) {
    const auto& spec = operator_spec(op);
    auto mismatch = [&](std::string_view want) {
        return Error(ErrorKind::TypeMismatch, op_context(spec) + " needs " + std::string(want) + " operands, got " +
                                                  lhs.type.describe() + " and " + rhs.type.describe());
    };
    Type result = Type::boolean();
    switch (op) {
    case BinaryOp::And:
    case BinaryOp::Or:
        if (!lhs.type.is(TypeKind::Bool) || !rhs.type.is(TypeKind::Bool)) throw mismatch("bool");
        break;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: {
        bool numeric = lhs.type.is_numeric() && rhs.type.is_numeric();
        bool chars = lhs.type.is(TypeKind::Char) && rhs.type.is(TypeKind::Char);
        if (!numeric && !chars) throw mismatch("numeric");
        break;
    }
    case BinaryOp::Eq:
    case BinaryOp::Ne: {
        bool numeric = lhs.type.is_numeric() && rhs.type.is_numeric();
        if (!numeric && !(lhs.type == rhs.type)) throw mismatch("matching");
        break;
    }
    case BinaryOp::Add:
        if (lhs.type.is(TypeKind::String) && rhs.type.is(TypeKind::String)) {
            result = Type::string();
            break;
        }
        [[fallthrough]];
    case BinaryOp::Sub:
    case BinaryOp::Mul:
    case BinaryOp::Div:
        if (!lhs.type.is_numeric() || !rhs.type.is_numeric()) throw mismatch("numeric");
        result = numeric_join(lhs.type, rhs.type);
        break;
    case BinaryOp::Pow:
        if (!lhs.type.is_numeric() || !rhs.type.is_numeric()) throw mismatch("numeric");
        result = Type::floating();
        break;
    }
    return make(Binary{op, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))}, std::move(result),
                spec.precedence);
}

Expr apply_unary(std::string_view symbol, Expr operand) {
    auto op = parse_unary_op(symbol);
    if (!op) throw Error(ErrorKind::TypeMismatch, "unknown unary operator " + std::string(symbol));
    return apply_unary(*op, std::move(operand));
}

Expr apply_binary(std::string_view symbol, Expr lhs, Expr rhs) {
    auto op = parse_binary_op(symbol);
    if (!op) throw Error(ErrorKind::TypeMismatch, "unknown binary operator " + std::string(symbol));
    return apply_binary(*op, std::move(lhs), std::move(rhs));
}

Expr inline_if(Expr cond, Expr then_value, Expr else_value) {
    detail::require_bool(cond, "inlineIf condition");
    if (!(then_value.type == else_value.type)) {
        throw Error(ErrorKind::TypeMismatch, "inlineIf branches differ: " + then_value.type.describe() + " and " +
                                                 else_value.type.describe());
    }
    Type t = then_value.type;
    return make(InlineIf{Box<Expr>(std::move(cond)), Box<Expr>(std::move(then_value)),
                         Box<Expr>(std::move(else_value))},
                std::move(t), kInlineIfPrecedence);
}

// Calls ----------------------------------------------------------------------

Expr func_app(std::string name, Type return_type, std::vector<Expr> args) {
    require_identifier(name, "function name");
    Call c;
    c.form = CallForm::Function;
    c.name = std::move(name);
    c.args = boxed(std::move(args));
    return make(std::move(c), std::move(return_type));
}

Expr ext_func_app(std::string library, std::string name, Type return_type, std::vector<Expr> args) {
    require_identifier(library, "library name");
    require_identifier(name, "function name");
    Call c;
    c.form = CallForm::ExternalFunction;
    c.library = std::move(library);
    c.name = std::move(name);
    c.args = boxed(std::move(args));
    return make(std::move(c), std::move(return_type));
}

Expr new_obj(Type class_type, std::vector<Expr> args) {
    if (!class_type.is(TypeKind::Object)) {
        throw Error(ErrorKind::TypeMismatch, "constructor needs an object type, got " + class_type.describe());
    }
    Call c;
    c.form = CallForm::Constructor;
    c.name = class_type.class_name();
    c.args = boxed(std::move(args));
    return make(std::move(c), std::move(class_type));
}

Expr obj_method_call(Expr receiver, std::string name, Type return_type, std::vector<Expr> args) {
    require_identifier(name, "method name");
    if (!receiver.type.is(TypeKind::Object)) {
        throw Error(ErrorKind::TypeMismatch, "method " + name + " called on non-object " + receiver.type.describe());
    }
    Call c;
    c.form = CallForm::Method;
    c.name = std::move(name);
    c.receiver = Box<Expr>(std::move(receiver));
    c.args = boxed(std::move(args));
    return make(std::move(c), std::move(return_type));
}

Expr self_func_app(std::string name, Type return_type, std::vector<Expr> args) {
    require_identifier(name, "method name");
    Call c;
    c.form = CallForm::SelfMethod;
    c.name = std::move(name);
    c.args = boxed(std::move(args));
    return make(std::move(c), std::move(return_type));
}

// Statements -----------------------------------------------------------------

Stmt var_dec(const Variable& v) { return make_stmt(VarDec{v}); }

Stmt var_dec_def(const Variable& v, Expr value) {
    detail::require_assignable(v.type, value.type, "declaration of " + v.name);
    return make_stmt(VarDecDef{v, std::move(value)});
}

Stmt assign(const Variable& target, Expr value) {
    detail::require_assignable(target.type, value.type, "assignment to " + target.name);
    return make_stmt(Assign{AssignMode::Set, target, std::move(value)});
}

Stmt add_assign(const Variable& target, Expr value) {
    bool strings = target.type.is(TypeKind::String) && value.type.is(TypeKind::String);
    if (!strings) {
        if (!target.type.is_numeric() || !value.type.is_numeric()) {
            throw Error(ErrorKind::TypeMismatch, "&+= on " + target.type.describe() + " and " + value.type.describe());
        }
        detail::require_assignable(target.type, numeric_join(target.type, value.type), "&+= on " + target.name);
    }
    return make_stmt(Assign{AssignMode::AddEq, target, std::move(value)});
}

Stmt sub_assign(const Variable& target, Expr value) {
    if (!target.type.is_numeric() || !value.type.is_numeric()) {
        throw Error(ErrorKind::TypeMismatch, "&-= on " + target.type.describe() + " and " + value.type.describe());
    }
    detail::require_assignable(target.type, numeric_join(target.type, value.type), "&-= on " + target.name);
    return make_stmt(Assign{AssignMode::SubEq, target, std::move(value)});
}

Stmt increment(const Variable& target) {
    if (!target.type.is_numeric()) {
        throw Error(ErrorKind::TypeMismatch, "&++ on non-numeric " + target.name + ": " + target.type.describe());
    }
    return make_stmt(Assign{AssignMode::Inc, target, std::nullopt});
}

Stmt decrement(const Variable& target) {
    if (!target.type.is_numeric()) {
        throw Error(ErrorKind::TypeMismatch, "&~- on non-numeric " + target.name + ": " + target.type.describe());
    }
    return make_stmt(Assign{AssignMode::Dec, target, std::nullopt});
}

Stmt return_stmt(Expr value) { return make_stmt(Return{std::move(value)}); }
Stmt throw_stmt(std::string message) { return make_stmt(Throw{std::move(message)}); }
Stmt free_stmt(const Variable& v) { return make_stmt(Free{v}); }
Stmt comment(std::string text) { return make_stmt(Comment{std::move(text)}); }
Stmt break_stmt() { return make_stmt(Break{}); }
Stmt continue_stmt() { return make_stmt(Continue{}); }
Stmt expr_stmt(Expr value) { return make_stmt(ExprStmt{std::move(value)}); }

Stmt if_cond(std::vector<std::pair<Expr, Body>> branches, std::optional<Body> else_body) {
    if (branches.empty()) throw Error(ErrorKind::EmptyConditional, "ifCond needs at least one branch");
    If node;
    for (auto& [cond, b] : branches) {
        detail::require_bool(cond, "if condition");
        node.branches.push_back(CondBranch{std::move(cond), std::move(b)});
    }
    node.else_body = std::move(else_body);
    return make_stmt(std::move(node));
}

Stmt if_no_else(std::vector<std::pair<Expr, Body>> branches) { return if_cond(std::move(branches), std::nullopt); }

Stmt switch_stmt(Expr scrutinee, std::vector<std::pair<Expr, Body>> cases, Body default_body) {
    if (cases.empty()) throw Error(ErrorKind::EmptyConditional, "switch needs at least one case");
    Switch node{std::move(scrutinee), {}, std::move(default_body)};
    for (auto& [label, b] : cases) {
        if (!std::holds_alternative<Literal>(label.node)) {
            throw Error(ErrorKind::TypeMismatch, "switch case labels must be literals");
        }
        if (!(label.type == node.scrutinee.type)) {
            throw Error(ErrorKind::TypeMismatch, "switch case of type " + label.type.describe() +
                                                     " on scrutinee of type " + node.scrutinee.type.describe());
        }
        node.cases.push_back(CaseBranch{std::move(label), std::move(b)});
    }
    return make_stmt(std::move(node));
}

Stmt for_loop(Stmt init, Expr cond, Stmt update, Body b) {
    detail::require_bool(cond, "for condition");
    return make_stmt(For{Box<Stmt>(std::move(init)), std::move(cond), Box<Stmt>(std::move(update)), std::move(b)});
}

Stmt for_range(const Variable& v, Expr start, Expr end, Expr step, Body b) {
    if (!v.type.is_numeric()) {
        throw Error(ErrorKind::TypeMismatch, "forRange variable " + v.name + " must be numeric");
    }
    for (const Expr* e : {&start, &end, &step}) {
        detail::require_assignable(v.type, e->type, "forRange bound for " + v.name);
    }
    return make_stmt(ForRange{v, std::move(start), std::move(end), std::move(step), std::move(b)});
}

Stmt for_each(const Variable& v, Expr list, Body b) {
    detail::require_list(list, "forEach");
    if (!(list.type.element() == v.type)) {
        throw Error(ErrorKind::TypeMismatch, "forEach variable " + v.name + " has type " + v.type.describe() +
                                                 " but the list holds " + list.type.element().describe());
    }
    return make_stmt(ForEach{v, std::move(list), std::move(b)});
}

Stmt while_loop(Expr cond, Body b) {
    detail::require_bool(cond, "while condition");
    return make_stmt(While{std::move(cond), std::move(b)});
}

Stmt try_catch(Body try_body, Body catch_body) {
    return make_stmt(TryCatch{std::move(try_body), std::move(catch_body)});
}

// Blocks and bodies ------------------------------------------------------------

Block block(std::vector<Stmt> stmts) { return Block{std::move(stmts)}; }
Body body(std::vector<Block> blocks) { return Body{std::move(blocks)}; }
Body body_statements(std::vector<Stmt> stmts) { return body({block(std::move(stmts))}); }

Body one_liner(Stmt stmt) {
    std::vector<Stmt> stmts;
    stmts.push_back(std::move(stmt));
    return body_statements(std::move(stmts));
}

// Methods ----------------------------------------------------------------------

Param param(const Variable& v) { return Param{v, false}; }
Param pointer_param(const Variable& v) { return Param{v, true}; }

Method function(std::string name, Scope scope, Binding binding, Type return_type, std::vector<Param> params,
                Body b) {
    return detail::make_method(std::move(name), scope, binding, std::move(return_type), std::move(params),
                               std::move(b));
}

Method method(std::string class_name, std::string name, Scope scope, Binding binding, Type return_type,
              std::vector<Param> params, Body b) {
    require_identifier(class_name, "class name");
    Method m = detail::make_method(std::move(name), scope, binding, std::move(return_type), std::move(params),
                                   std::move(b));
    m.containing_class = std::move(class_name);
    return m;
}

Method pub_method(std::string class_name, std::string name, Type return_type, std::vector<Param> params, Body b) {
    return method(std::move(class_name), std::move(name), Scope::Public, Binding::Dynamic, std::move(return_type),
                  std::move(params), std::move(b));
}

Method priv_method(std::string class_name, std::string name, Type return_type, std::vector<Param> params, Body b) {
    return method(std::move(class_name), std::move(name), Scope::Private, Binding::Dynamic, std::move(return_type),
                  std::move(params), std::move(b));
}

Method constructor(std::string class_name, std::vector<Param> params, Body b) {
    std::string name = class_name;
    Method m = method(std::move(class_name), std::move(name), Scope::Public, Binding::Dynamic, Type::void_type(),
                      std::move(params), std::move(b));
    m.is_constructor = true;
    return m;
}

Method main_function(Body b) {
    Method m = detail::make_method("main", Scope::Public, Binding::Static, Type::void_type(), {}, std::move(b));
    m.is_main = true;
    return m;
}

Method doc_func(std::string description, std::vector<std::pair<std::string, std::string>> param_descs,
                std::optional<std::string> return_desc, Method m) {
    std::vector<std::string> declared;
    for (const auto& p : m.params) declared.push_back(p.var.name);
    DocSpec doc{std::move(description), std::move(param_descs), std::move(return_desc)};
    validate_doc(doc, declared);
    m.doc = std::move(doc);
    return m;
}

// State variables and classes ----------------------------------------------------

StateVar state_var(Scope scope, Binding binding, const Variable& v, std::optional<Expr> initial) {
    if (initial) detail::require_assignable(v.type, initial->type, "initial value of " + v.name);
    return StateVar{scope, binding, false, with_binding(v, binding), std::move(initial)};
}

StateVar const_var(Scope scope, Binding binding, const Variable& v, Expr value) {
    StateVar sv = state_var(scope, binding, v, std::move(value));
    sv.is_const = true;
    return sv;
}

StateVar priv_mvar(const Variable& v, std::optional<Expr> initial) {
    return state_var(Scope::Private, Binding::Dynamic, v, std::move(initial));
}

StateVar pub_mvar(const Variable& v, std::optional<Expr> initial) {
    return state_var(Scope::Public, Binding::Dynamic, v, std::move(initial));
}

StateVar pub_gvar(const Variable& v, std::optional<Expr> initial) {
    return state_var(Scope::Public, Binding::Static, v, std::move(initial));
}

namespace {

bool targets_member(const Variable& v, const std::string& class_name, const std::set<std::string>& names) {
    if (!names.count(v.name)) return false;
    return v.form == VarForm::Self || (v.form == VarForm::ClassMember && v.qualifier == class_name);
}

void check_const_body(const Body& b, const std::string& cls, const std::set<std::string>& consts);

void check_const_stmt(const Stmt& s, const std::string& cls, const std::set<std::string>& consts) {
    auto fail = [&](const Variable& v) {
        throw Error(ErrorKind::ConstAssignment, "constant " + cls + "." + v.name + " is assigned");
    };
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Assign>) {
                if (targets_member(n.target, cls, consts)) fail(n.target);
            } else if constexpr (std::is_same_v<T, Read>) {
                if (targets_member(n.target, cls, consts)) fail(n.target);
            } else if constexpr (std::is_same_v<T, ListSlice>) {
                if (targets_member(n.target, cls, consts)) fail(n.target);
            } else if constexpr (std::is_same_v<T, InOutCall>) {
                for (const auto& v : n.outs) if (targets_member(v, cls, consts)) fail(v);
                for (const auto& v : n.inouts) if (targets_member(v, cls, consts)) fail(v);
            } else if constexpr (std::is_same_v<T, If>) {
                for (const auto& br : n.branches) check_const_body(br.body, cls, consts);
                if (n.else_body) check_const_body(*n.else_body, cls, consts);
            } else if constexpr (std::is_same_v<T, Switch>) {
                for (const auto& c : n.cases) check_const_body(c.body, cls, consts);
                check_const_body(n.default_body, cls, consts);
            } else if constexpr (std::is_same_v<T, For>) {
                check_const_stmt(*n.init, cls, consts);
                check_const_stmt(*n.update, cls, consts);
                check_const_body(n.body, cls, consts);
            } else if constexpr (std::is_same_v<T, ForRange> || std::is_same_v<T, ForEach> ||
                                 std::is_same_v<T, While> || std::is_same_v<T, Inline>) {
                check_const_body(n.body, cls, consts);
            } else if constexpr (std::is_same_v<T, TryCatch>) {
                check_const_body(n.try_body, cls, consts);
                check_const_body(n.catch_body, cls, consts);
            } else if constexpr (std::is_same_v<T, CheckState>) {
                for (const auto& c : n.cases) check_const_body(c.body, cls, consts);
                check_const_body(n.fallback, cls, consts);
            }
        },
        s.node);
}

void check_const_body(const Body& b, const std::string& cls, const std::set<std::string>& consts) {
    for (const auto& blk : b.blocks) {
        for (const auto& s : blk.stmts) check_const_stmt(s, cls, consts);
    }
}

} // namespace

ClassDecl build_class(std::string name, std::optional<std::string> parent, Scope scope,
                      std::vector<StateVar> state_vars, std::vector<Method> methods) {
    require_identifier(name, "class name");
    if (parent) require_identifier(*parent, "parent class name");
    std::set<std::string> seen;
    for (auto& m : methods) {
        if (m.is_main) throw Error(ErrorKind::TypeMismatch, "main function cannot be a method of " + name);
        if (!m.containing_class) {
            m.containing_class = name;
        } else if (*m.containing_class != name) {
            throw Error(ErrorKind::TypeMismatch,
                        "method " + m.name + " belongs to " + *m.containing_class + ", not " + name);
        }
        if (!seen.insert(m.name).second) {
            throw Error(ErrorKind::DuplicateMethod, "class " + name + " defines " + m.name + " twice");
        }
    }
    std::set<std::string> consts;
    std::set<std::string> members;
    for (const auto& sv : state_vars) {
        if (!members.insert(sv.var.name).second) {
            throw Error(ErrorKind::DuplicateParam, "class " + name + " declares " + sv.var.name + " twice");
        }
        if (sv.is_const) consts.insert(sv.var.name);
    }
    if (!consts.empty()) {
        for (const auto& m : methods) check_const_body(m.body, name, consts);
    }
    return ClassDecl{std::move(name), std::move(parent), scope, std::move(state_vars), std::move(methods), {}};
}

ClassDecl pub_class(std::string name, std::optional<std::string> parent, std::vector<StateVar> state_vars,
                    std::vector<Method> methods) {
    return build_class(std::move(name), std::move(parent), Scope::Public, std::move(state_vars), std::move(methods));
}

ClassDecl priv_class(std::string name, std::optional<std::string> parent, std::vector<StateVar> state_vars,
                     std::vector<Method> methods) {
    return build_class(std::move(name), std::move(parent), Scope::Private, std::move(state_vars),
                       std::move(methods));
}

ClassDecl doc_class(std::string description, ClassDecl c) {
    c.doc = DocSpec{std::move(description), {}, std::nullopt};
    return c;
}

// Modules and packages --------------------------------------------------------------

Module build_module(std::string name, std::vector<std::string> imports, std::vector<Method> functions,
                    std::vector<ClassDecl> classes) {
    require_identifier(name, "module name");
    int mains = 0;
    std::set<std::string> seen;
    for (const auto& f : functions) {
        if (f.containing_class) {
            throw Error(ErrorKind::TypeMismatch, "method " + f.name + " of " + *f.containing_class +
                                                     " listed as a free function of " + name);
        }
        if (f.is_main) ++mains;
        if (!seen.insert(f.name).second) {
            throw Error(ErrorKind::DuplicateMethod, "module " + name + " defines " + f.name + " twice");
        }
    }
    if (mains > 1) throw Error(ErrorKind::MultipleMain, "module " + name + " has more than one main function");
    std::set<std::string> classes_seen;
    for (const auto& c : classes) {
        if (!classes_seen.insert(c.name).second) {
            throw Error(ErrorKind::DuplicateMethod, "module " + name + " defines class " + c.name + " twice");
        }
    }
    Module m;
    m.name = std::move(name);
    m.imports = std::move(imports);
    m.functions = std::move(functions);
    m.classes = std::move(classes);
    m.is_main_module = mains == 1;
    return m;
}

Module doc_mod(std::string description, Module m) {
    m.doc = DocSpec{std::move(description), {}, std::nullopt};
    return m;
}

Program prog(std::string name, std::vector<Module> modules) {
    require_identifier(name, "program name");
    std::set<std::string> seen;
    int mains = 0;
    for (const auto& m : modules) {
        if (!seen.insert(m.name).second) {
            throw Error(ErrorKind::DuplicateModule, "program " + name + " has two modules named " + m.name);
        }
        if (m.is_main_module) ++mains;
    }
    if (mains > 1) throw Error(ErrorKind::MultipleMain, "program " + name + " has more than one main function");
    return Program{std::move(name), std::move(modules)};
}

Package package(Program program, std::vector<AuxFileSpec> aux_files) {
    bool makefile_seen = false;
    bool dox_seen = false;
    for (const auto& a : aux_files) {
        bool& seen = a.kind == AuxKind::Makefile ? makefile_seen : dox_seen;
        if (seen) throw Error(ErrorKind::DuplicateAuxFile, "auxiliary file requested twice");
        seen = true;
    }
    return Package{std::move(program.name), std::move(program.modules), std::move(aux_files)};
}

AuxFileSpec makefile(bool with_doc_rule) { return AuxFileSpec{AuxKind::Makefile, with_doc_rule}; }
AuxFileSpec dox_config() { return AuxFileSpec{AuxKind::DoxygenConfig, false}; }

// Arity walk ------------------------------------------------------------------------

namespace {

std::optional<std::string> arity_body(const Body& b);

std::optional<std::string> arity_stmt(const Stmt& s) {
    return std::visit(
        [](const auto& n) -> std::optional<std::string> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Assign>) {
                bool wants_value = n.mode != AssignMode::Inc && n.mode != AssignMode::Dec;
                if (wants_value != n.value.has_value()) return "assignment to " + n.target.name + " has wrong arity";
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, If>) {
                if (n.branches.empty()) return std::string("if without branches");
                for (const auto& br : n.branches) {
                    if (auto e = arity_body(br.body)) return e;
                }
                if (n.else_body) return arity_body(*n.else_body);
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, Switch>) {
                if (n.cases.empty()) return std::string("switch without cases");
                for (const auto& c : n.cases) {
                    if (auto e = arity_body(c.body)) return e;
                }
                return arity_body(n.default_body);
            } else if constexpr (std::is_same_v<T, For>) {
                if (auto e = arity_stmt(*n.init)) return e;
                if (auto e = arity_stmt(*n.update)) return e;
                return arity_body(n.body);
            } else if constexpr (std::is_same_v<T, ForRange> || std::is_same_v<T, ForEach> ||
                                 std::is_same_v<T, While> || std::is_same_v<T, Inline>) {
                return arity_body(n.body);
            } else if constexpr (std::is_same_v<T, TryCatch>) {
                if (auto e = arity_body(n.try_body)) return e;
                return arity_body(n.catch_body);
            } else if constexpr (std::is_same_v<T, CheckState>) {
                for (const auto& c : n.cases) {
                    if (auto e = arity_body(c.body)) return e;
                }
                return arity_body(n.fallback);
            } else if constexpr (std::is_same_v<T, InOutCall>) {
                if (n.outs.empty() && n.inouts.empty()) return "inOutCall " + n.name + " has no outputs";
                return std::nullopt;
            } else {
                return std::nullopt;
            }
        },
        s.node);
}

std::optional<std::string> arity_body(const Body& b) {
    for (const auto& blk : b.blocks) {
        for (const auto& s : blk.stmts) {
            if (auto e = arity_stmt(s)) return e;
        }
    }
    return std::nullopt;
}

std::optional<std::string> arity_method(const Method& m) { return arity_body(m.body); }

} // namespace

std::optional<std::string> check_arity(const Stmt& s) { return arity_stmt(s); }

std::optional<std::string> check_arity(const Package& pkg) {
    for (const auto& mod : pkg.modules) {
        for (const auto& f : mod.functions) {
            if (auto e = arity_method(f)) return e;
        }
        for (const auto& c : mod.classes) {
            for (const auto& m : c.methods) {
                if (auto e = arity_method(m)) return e;
            }
        }
    }
    return std::nullopt;
}

} // namespace gool
