#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gool/box.hpp"
#include "gool/types.hpp"

namespace gool {

// ---------------------------------------------------------------------------
// Variables
// ---------------------------------------------------------------------------

enum class VarForm { Plain, External, ClassMember, ObjectMember, Self };

/// A named storage location. Reading one requires an explicit ValueOf node.
struct Variable {
    std::string name;
    Type type = Type::integer();
    Binding binding = Binding::Dynamic;
    VarForm form = VarForm::Plain;
    std::string qualifier;               // library (External) or class (ClassMember)
    std::optional<Box<Variable>> owner;  // ObjectMember only

    bool operator==(const Variable&) const = default;
};

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

enum class UnaryOp { Not, Negate, Sqrt, Abs };
enum class BinaryOp { And, Or, Lt, Le, Gt, Ge, Eq, Ne, Add, Sub, Mul, Div, Pow };
enum class Assoc { Left, Right };

/// Precedence levels, higher binds tighter. Literals, reads and calls sit at
/// kAtomicPrecedence.
inline constexpr int kAtomicPrecedence = 10;
inline constexpr int kInlineIfPrecedence = 1;

struct OperatorSpec {
    std::string_view symbol;  // the builder-level token, e.g. "#+"
    int precedence;
    bool unary;
    Assoc assoc;
};

const OperatorSpec& operator_spec(UnaryOp op);
const OperatorSpec& operator_spec(BinaryOp op);
std::optional<UnaryOp> parse_unary_op(std::string_view symbol);
std::optional<BinaryOp> parse_binary_op(std::string_view symbol);

enum class MathFn { Sin, Cos, Tan, Floor, Ceil, Exp, Log, Sqrt, Abs };
std::string_view to_string(MathFn fn);
std::optional<MathFn> parse_math_fn(std::string_view name);

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

struct Expr;

using LiteralValue = std::variant<bool, std::int64_t, double, char, std::string>;

struct Literal {
    LiteralValue value;
    bool operator==(const Literal&) const = default;
};

struct ValueOf {
    Variable var;
    bool operator==(const ValueOf&) const = default;
};

struct Unary {
    UnaryOp op;
    Box<Expr> operand;
    bool operator==(const Unary&) const = default;
};

struct Binary {
    BinaryOp op;
    Box<Expr> lhs;
    Box<Expr> rhs;
    bool operator==(const Binary&) const = default;
};

struct InlineIf {
    Box<Expr> cond;
    Box<Expr> then_value;
    Box<Expr> else_value;
    bool operator==(const InlineIf&) const = default;
};

enum class CallForm { Function, ExternalFunction, Constructor, Method, SelfMethod };

struct Call {
    CallForm form = CallForm::Function;
    std::string name;
    std::string library;                // ExternalFunction only
    std::optional<Box<Expr>> receiver;  // Method only
    std::vector<Box<Expr>> args;
    bool operator==(const Call&) const = default;
};

struct MathCall {
    MathFn fn;
    Box<Expr> arg;
    bool operator==(const MathCall&) const = default;
};

/// A list built from element values; the element type lives on Expr::type.
struct ListLiteral {
    std::vector<Box<Expr>> elements;
    bool operator==(const ListLiteral&) const = default;
};

struct ArgsList {
    bool operator==(const ArgsList&) const = default;
};
struct ArgAt {
    Box<Expr> index;
    bool operator==(const ArgAt&) const = default;
};
struct ArgExists {
    Box<Expr> index;
    bool operator==(const ArgExists&) const = default;
};

struct ListAccess {
    Box<Expr> list;
    Box<Expr> index;
    bool operator==(const ListAccess&) const = default;
};
struct ListSize {
    Box<Expr> list;
    bool operator==(const ListSize&) const = default;
};
struct ListAppend {
    Box<Expr> list;
    Box<Expr> value;
    bool operator==(const ListAppend&) const = default;
};
struct ListIndexExists {
    Box<Expr> list;
    Box<Expr> index;
    bool operator==(const ListIndexExists&) const = default;
};
struct IndexOf {
    Box<Expr> list;
    Box<Expr> value;
    bool operator==(const IndexOf&) const = default;
};

using ExprNode = std::variant<Literal, ValueOf, Unary, Binary, InlineIf, Call, MathCall, ListLiteral,
                              ArgsList, ArgAt, ArgExists, ListAccess, ListSize, ListAppend,
                              ListIndexExists, IndexOf>;

struct Expr {
    ExprNode node;
    Type type;
    int precedence = kAtomicPrecedence;

    bool operator==(const Expr&) const = default;
};

// ---------------------------------------------------------------------------
// Statements, blocks, bodies
// ---------------------------------------------------------------------------

struct Stmt;

/// One meaningful task: an ordered run of statements.
struct Block {
    std::vector<Stmt> stmts;
    bool operator==(const Block&) const;
};

/// A body is a list of blocks; rendering separates blocks with a blank line.
struct Body {
    std::vector<Block> blocks;
    bool empty() const noexcept;
    bool operator==(const Body&) const = default;
};

enum class AssignMode { Set, AddEq, SubEq, Inc, Dec };

struct VarDec {
    Variable var;
    bool operator==(const VarDec&) const = default;
};
struct VarDecDef {
    Variable var;
    Expr value;
    bool operator==(const VarDecDef&) const = default;
};
struct Assign {
    AssignMode mode = AssignMode::Set;
    Variable target;
    std::optional<Expr> value;
    bool operator==(const Assign&) const = default;
};
struct Return {
    Expr value;
    bool operator==(const Return&) const = default;
};
struct Throw {
    std::string message;
    bool operator==(const Throw&) const = default;
};
struct Free {
    Variable var;
    bool operator==(const Free&) const = default;
};
struct Comment {
    std::string text;
    bool operator==(const Comment&) const = default;
};
struct Break {
    bool operator==(const Break&) const = default;
};
struct Continue {
    bool operator==(const Continue&) const = default;
};
struct ExprStmt {
    Expr value;
    bool operator==(const ExprStmt&) const = default;
};

struct CondBranch {
    Expr cond;
    Body body;
    bool operator==(const CondBranch&) const = default;
};
struct If {
    std::vector<CondBranch> branches;
    std::optional<Body> else_body;
    bool operator==(const If&) const = default;
};

struct CaseBranch {
    Expr label;  // always a literal
    Body body;
    bool operator==(const CaseBranch&) const = default;
};
struct Switch {
    Expr scrutinee;
    std::vector<CaseBranch> cases;
    Body default_body;
    bool operator==(const Switch&) const = default;
};

struct For {
    Box<Stmt> init;
    Expr cond;
    Box<Stmt> update;
    Body body;
    bool operator==(const For&) const = default;
};
/// Runs `var` from start to end inclusive.
struct ForRange {
    Variable var;
    Expr start;
    Expr end;
    Expr step;
    Body body;
    bool operator==(const ForRange&) const = default;
};
struct ForEach {
    Variable var;
    Expr list;
    Body body;
    bool operator==(const ForEach&) const = default;
};
struct While {
    Expr cond;
    Body body;
    bool operator==(const While&) const = default;
};
struct TryCatch {
    Body try_body;
    Body catch_body;
    bool operator==(const TryCatch&) const = default;
};

/// target = source[start:end:step], end exclusive; missing parts default to
/// the start of the list, its end and 1.
struct ListSlice {
    Variable target;
    Expr source;
    std::optional<Expr> start;
    std::optional<Expr> end;
    std::optional<Expr> step;
    bool operator==(const ListSlice&) const = default;
};
struct ListSet {
    Expr list;
    Expr index;
    Expr value;
    bool operator==(const ListSet&) const = default;
};

struct Print {
    bool newline = true;
    Expr value;
    bool operator==(const Print&) const = default;
};

enum class ReadKind { Line, Int };
struct Read {
    ReadKind kind = ReadKind::Line;
    Variable target;
    bool operator==(const Read&) const = default;
};

/// A body spliced into the enclosing one without opening a new scope.
struct Inline {
    Body body;
    bool operator==(const Inline&) const = default;
};

// Pattern statements; see gool/patterns.hpp for the builders.

struct InitObserverList {
    Type element;
    std::vector<Expr> initial;
    bool operator==(const InitObserverList&) const = default;
};
struct AddObserver {
    Expr value;
    bool operator==(const AddObserver&) const = default;
};
struct NotifyObservers {
    std::string method;
    Type element;
    bool operator==(const NotifyObservers&) const = default;
};
struct InitState {
    std::string name;
    std::string label;
    bool operator==(const InitState&) const = default;
};
struct ChangeState {
    std::string name;
    std::string label;
    bool operator==(const ChangeState&) const = default;
};
struct StateCase {
    std::string label;
    Body body;
    bool operator==(const StateCase&) const = default;
};
struct CheckState {
    std::string name;
    std::vector<StateCase> cases;
    Body fallback;
    bool operator==(const CheckState&) const = default;
};
struct InOutCall {
    std::string name;
    std::string library;  // empty for a function of the same module
    std::vector<Expr> ins;
    std::vector<Variable> outs;
    std::vector<Variable> inouts;
    bool operator==(const InOutCall&) const = default;
};

using StmtNode =
    std::variant<VarDec, VarDecDef, Assign, Return, Throw, Free, Comment, Break, Continue, ExprStmt, If,
                 Switch, For, ForRange, ForEach, While, TryCatch, ListSlice, ListSet, Print, Read, Inline,
                 InitObserverList, AddObserver, NotifyObservers, InitState, ChangeState, CheckState,
                 InOutCall>;

struct Stmt {
    StmtNode node;
    bool operator==(const Stmt&) const = default;
};

inline bool Block::operator==(const Block& other) const { return stmts == other.stmts; }
inline bool Body::empty() const noexcept {
    for (const auto& b : blocks) {
        if (!b.stmts.empty()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Methods, classes, modules, packages
// ---------------------------------------------------------------------------

struct DocSpec {
    std::string description;
    std::vector<std::pair<std::string, std::string>> params;  // (name, text)
    std::optional<std::string> returns;
    bool operator==(const DocSpec&) const = default;
};

struct Param {
    Variable var;
    bool by_reference = false;
    bool operator==(const Param&) const = default;
};

/// Parameter roles of a procedure built with in_out_func.
struct InOutSpec {
    std::vector<Variable> ins;
    std::vector<Variable> outs;
    std::vector<Variable> inouts;
    bool operator==(const InOutSpec&) const = default;
};

struct Method {
    std::string name;
    Scope scope = Scope::Public;
    Binding binding = Binding::Dynamic;
    Type return_type = Type::void_type();
    std::vector<Param> params;
    Body body;
    std::optional<std::string> containing_class;
    bool is_main = false;
    bool is_constructor = false;
    std::optional<DocSpec> doc;
    std::optional<InOutSpec> in_out;

    bool operator==(const Method&) const = default;
};

struct StateVar {
    Scope scope = Scope::Private;
    Binding binding = Binding::Dynamic;
    bool is_const = false;
    Variable var;
    std::optional<Expr> initial;
    bool operator==(const StateVar&) const = default;
};

struct ClassDecl {
    std::string name;
    std::optional<std::string> parent;
    Scope scope = Scope::Public;
    std::vector<StateVar> state_vars;
    std::vector<Method> methods;
    std::optional<DocSpec> doc;
    bool operator==(const ClassDecl&) const = default;
};

struct Module {
    std::string name;
    std::vector<std::string> imports;
    std::vector<Method> functions;
    std::vector<ClassDecl> classes;
    bool is_main_module = false;
    std::optional<DocSpec> doc;

    bool empty() const noexcept { return functions.empty() && classes.empty(); }
    bool operator==(const Module&) const = default;
};

struct Program {
    std::string name;
    std::vector<Module> modules;
    bool operator==(const Program&) const = default;
};

enum class AuxKind { Makefile, DoxygenConfig };

struct AuxFileSpec {
    AuxKind kind = AuxKind::Makefile;
    bool with_doc_rule = false;  // Makefile only
    bool operator==(const AuxFileSpec&) const = default;
};

/// The unit handed to renderers: a program plus requested auxiliary files.
struct Package {
    std::string name;
    std::vector<Module> modules;
    std::vector<AuxFileSpec> aux_files;

    const Module* main_module() const;
    /// Module that declares class `name`, if any.
    const Module* module_of_class(std::string_view name) const;
    const Module* find_module(std::string_view name) const;

    bool operator==(const Package&) const = default;
};

} // namespace gool
