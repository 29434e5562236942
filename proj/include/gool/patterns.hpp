#pragma once

// High-level constructs that lower to different idioms per target.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gool/ir.hpp"

namespace gool {

// Library functions ---------------------------------------------------------

Expr math_fn(MathFn fn, Expr arg);
inline Expr sin(Expr e) { return math_fn(MathFn::Sin, std::move(e)); }
inline Expr cos(Expr e) { return math_fn(MathFn::Cos, std::move(e)); }
inline Expr sqrt(Expr e) { return math_fn(MathFn::Sqrt, std::move(e)); }

// Command-line arguments ------------------------------------------------------

/// The user arguments, excluding the program/interpreter name.
Expr args_list();
/// Index 0 is the first user argument in every target.
Expr arg_at(Expr index);
Expr arg_exists(Expr index);

// Lists ---------------------------------------------------------------------

Expr list_access(Expr list, Expr index);
inline Expr at(Expr list, Expr index) { return list_access(std::move(list), std::move(index)); }
Stmt list_set(Expr list, Expr index, Expr value);
Expr list_size(Expr list);
Expr list_append(Expr list, Expr value);
Expr list_index_exists(Expr list, Expr index);
Expr index_of(Expr list, Expr value);

Stmt list_slice(const Variable& target, Expr source, std::optional<Expr> start, std::optional<Expr> end,
                std::optional<Expr> step);

// Printing and reading --------------------------------------------------------

Stmt print(Expr value);
Stmt print_ln(Expr value);
Stmt print_str(std::string text);
Stmt print_str_ln(std::string text);
Stmt read_line(const Variable& target);
Stmt read_int(const Variable& target);

// In/out/in-out procedures ----------------------------------------------------

/// Parameters are laid out in-outs first, then ins, then outs.
Method in_out_func(std::string name, Scope scope, Binding binding, std::vector<Variable> ins,
                   std::vector<Variable> outs, std::vector<Variable> inouts, Body body);
/// Calls `callee`, which must have been built by in_out_func; argument lists
/// are checked against its signature.
Stmt in_out_call(const Method& callee, std::vector<Expr> ins, std::vector<Variable> outs,
                 std::vector<Variable> inouts, std::string library = {});

// Getters and setters -----------------------------------------------------------

std::string getter_name(std::string_view var_name);
std::string setter_name(std::string_view var_name);
Method get_method(std::string class_name, const Variable& v);
Method set_method(std::string class_name, const Variable& v);
Expr get(Expr object, const Variable& v);
Stmt set(Expr object, const Variable& v, Expr value);

// Design patterns -------------------------------------------------------------

/// Selects the chosen strategy at generation time; unchosen bodies are
/// dropped. The optional result assignment runs after the body.
Stmt run_strategy(const std::string& chosen, std::vector<std::pair<std::string, Body>> strategies,
                  std::optional<Variable> result_var = {}, std::optional<Expr> result_value = {});

inline constexpr std::string_view kObserverListName = "observerList";

Stmt init_observer_list(Type element, std::vector<Expr> initial);
Stmt add_observer(Expr value);
Stmt notify_observers(std::string method, Type element);

Stmt init_state(std::string name, std::string label);
Stmt change_state(std::string name, std::string label);
Stmt check_state(std::string name, std::vector<std::pair<std::string, Body>> cases, Body fallback);

// Lowerings shared by the backends ----------------------------------------------

/// Fresh-name source for temporaries inside one method render.
class NameSupply {
public:
    /// "temp", then "temp2", "temp3", ... for repeated requests of one base.
    std::string fresh(const std::string& base);

private:
    std::vector<std::pair<std::string, int>> used_;
};

/// The bracketed element loop used where a list cannot be printed directly.
/// `depth` picks the loop counter suffix (list_i1, list_i2, ...).
Body lower_list_print(const Expr& list, bool newline, int depth = 1);

/// Temp-list copy loop for targets without native slicing.
Body lower_list_slice(const ListSlice& slice, const std::string& temp, const std::string& index);

/// Core-statement forms of the observer and state patterns.
Stmt lower_pattern(const Stmt& s);

} // namespace gool
