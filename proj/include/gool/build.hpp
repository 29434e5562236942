#pragma once

// Builders for the program tree. Every builder is pure and validates its
// inputs; violations throw gool::Error.

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gool/ir.hpp"

namespace gool {

// Variables -----------------------------------------------------------------

Variable var(std::string name, Type type);
Variable list_var(std::string name, Type element);
Variable ext_var(std::string library, std::string name, Type type);
Variable class_var(std::string class_name, std::string name, Type type);
Variable obj_var(const Variable& owner, std::string name, Type type);
Variable self_var(std::string name, Type type);
Variable with_binding(Variable v, Binding binding);

// Values --------------------------------------------------------------------

Expr lit_true();
Expr lit_false();
Expr lit_bool(bool value);
Expr lit_int(std::int64_t value);
Expr lit_float(double value);
Expr lit_char(char value);
Expr lit_string(std::string value);
Expr lit_list(Type element, std::vector<Expr> values);

Expr value_of(const Variable& v);

Expr apply_unary(UnaryOp op, Expr operand);
Expr apply_binary(BinaryOp op, Expr lhs, Expr rhs);
/// Operator lookup by builder symbol ("?!", "#+", ...).
Expr apply_unary(std::string_view symbol, Expr operand);
Expr apply_binary(std::string_view symbol, Expr lhs, Expr rhs);

Expr inline_if(Expr cond, Expr then_value, Expr else_value);

Expr func_app(std::string name, Type return_type, std::vector<Expr> args);
Expr ext_func_app(std::string library, std::string name, Type return_type, std::vector<Expr> args);
Expr new_obj(Type class_type, std::vector<Expr> args);
Expr obj_method_call(Expr receiver, std::string name, Type return_type, std::vector<Expr> args);
Expr self_func_app(std::string name, Type return_type, std::vector<Expr> args);

namespace ops {
// Short infix spellings for tests and the gallery.
inline Expr operator+(Expr a, Expr b) { return apply_binary(BinaryOp::Add, std::move(a), std::move(b)); }
inline Expr operator-(Expr a, Expr b) { return apply_binary(BinaryOp::Sub, std::move(a), std::move(b)); }
inline Expr operator*(Expr a, Expr b) { return apply_binary(BinaryOp::Mul, std::move(a), std::move(b)); }
inline Expr operator/(Expr a, Expr b) { return apply_binary(BinaryOp::Div, std::move(a), std::move(b)); }
inline Expr operator<(Expr a, Expr b) { return apply_binary(BinaryOp::Lt, std::move(a), std::move(b)); }
inline Expr operator>(Expr a, Expr b) { return apply_binary(BinaryOp::Gt, std::move(a), std::move(b)); }
inline Expr operator<=(Expr a, Expr b) { return apply_binary(BinaryOp::Le, std::move(a), std::move(b)); }
inline Expr operator>=(Expr a, Expr b) { return apply_binary(BinaryOp::Ge, std::move(a), std::move(b)); }
inline Expr operator&&(Expr a, Expr b) { return apply_binary(BinaryOp::And, std::move(a), std::move(b)); }
inline Expr operator||(Expr a, Expr b) { return apply_binary(BinaryOp::Or, std::move(a), std::move(b)); }
inline Expr operator!(Expr a) { return apply_unary(UnaryOp::Not, std::move(a)); }
inline Expr operator-(Expr a) { return apply_unary(UnaryOp::Negate, std::move(a)); }
inline Expr eq(Expr a, Expr b) { return apply_binary(BinaryOp::Eq, std::move(a), std::move(b)); }
inline Expr ne(Expr a, Expr b) { return apply_binary(BinaryOp::Ne, std::move(a), std::move(b)); }
} // namespace ops

// Statements ----------------------------------------------------------------

Stmt var_dec(const Variable& v);
Stmt var_dec_def(const Variable& v, Expr value);
Stmt assign(const Variable& target, Expr value);
Stmt add_assign(const Variable& target, Expr value);
Stmt sub_assign(const Variable& target, Expr value);
Stmt increment(const Variable& target);
Stmt decrement(const Variable& target);
Stmt return_stmt(Expr value);
Stmt throw_stmt(std::string message);
Stmt free_stmt(const Variable& v);
Stmt comment(std::string text);
Stmt break_stmt();
Stmt continue_stmt();
/// Evaluate for effect, e.g. a void method call.
Stmt expr_stmt(Expr value);

Stmt if_cond(std::vector<std::pair<Expr, Body>> branches, std::optional<Body> else_body);
Stmt if_no_else(std::vector<std::pair<Expr, Body>> branches);
Stmt switch_stmt(Expr scrutinee, std::vector<std::pair<Expr, Body>> cases, Body default_body);

Stmt for_loop(Stmt init, Expr cond, Stmt update, Body body);
Stmt for_range(const Variable& v, Expr start, Expr end, Expr step, Body body);
Stmt for_each(const Variable& v, Expr list, Body body);
Stmt while_loop(Expr cond, Body body);
Stmt try_catch(Body try_body, Body catch_body);

// Blocks and bodies ---------------------------------------------------------

Block block(std::vector<Stmt> stmts);
Body body(std::vector<Block> blocks);
Body body_statements(std::vector<Stmt> stmts);
Body one_liner(Stmt stmt);

// Methods and classes ---------------------------------------------------------

Param param(const Variable& v);
Param pointer_param(const Variable& v);

Method function(std::string name, Scope scope, Binding binding, Type return_type, std::vector<Param> params,
                Body body);
Method method(std::string class_name, std::string name, Scope scope, Binding binding, Type return_type,
              std::vector<Param> params, Body body);
Method pub_method(std::string class_name, std::string name, Type return_type, std::vector<Param> params,
                  Body body);
Method priv_method(std::string class_name, std::string name, Type return_type, std::vector<Param> params,
                   Body body);
Method constructor(std::string class_name, std::vector<Param> params, Body body);
Method main_function(Body body);

/// Attaches Doxygen-style documentation; every described parameter must be
/// declared by the method.
Method doc_func(std::string description, std::vector<std::pair<std::string, std::string>> param_descs,
                std::optional<std::string> return_desc, Method m);

StateVar state_var(Scope scope, Binding binding, const Variable& v, std::optional<Expr> initial = {});
StateVar const_var(Scope scope, Binding binding, const Variable& v, Expr value);
StateVar priv_mvar(const Variable& v, std::optional<Expr> initial = {});
StateVar pub_mvar(const Variable& v, std::optional<Expr> initial = {});
StateVar pub_gvar(const Variable& v, std::optional<Expr> initial = {});

ClassDecl build_class(std::string name, std::optional<std::string> parent, Scope scope,
                      std::vector<StateVar> state_vars, std::vector<Method> methods);
ClassDecl pub_class(std::string name, std::optional<std::string> parent, std::vector<StateVar> state_vars,
                    std::vector<Method> methods);
ClassDecl priv_class(std::string name, std::optional<std::string> parent, std::vector<StateVar> state_vars,
                     std::vector<Method> methods);
ClassDecl doc_class(std::string description, ClassDecl c);

// Modules and packages --------------------------------------------------------

Module build_module(std::string name, std::vector<std::string> imports, std::vector<Method> functions,
                    std::vector<ClassDecl> classes);
Module doc_mod(std::string description, Module m);
Program prog(std::string name, std::vector<Module> modules);
Package package(Program program, std::vector<AuxFileSpec> aux_files);

AuxFileSpec makefile(bool with_doc_rule);
AuxFileSpec dox_config();

/// Arity invariants of a statement tree (Assign value presence per mode,
/// nonempty conditionals). Returns a description of the first violation.
std::optional<std::string> check_arity(const Stmt& s);
std::optional<std::string> check_arity(const Package& pkg);

} // namespace gool
