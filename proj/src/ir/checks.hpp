#pragma once

// Build-time checks shared by the core and pattern builders.

#include <string>
#include <vector>

#include "gool/ir.hpp"

namespace gool::detail {

/// Throws ObserverNotInitialized when addObserver/notifyObservers appear
/// before initObserverList in the same or an enclosing scope.
void check_observer_scopes(const Body& body);

/// Throws DuplicateParam on repeated parameter names.
void check_unique_params(const std::vector<Param>& params);

/// Value assignable to a variable of type `target` (identical, or int into float).
bool assignable(const Type& target, const Type& value);
void require_assignable(const Type& target, const Type& value, const std::string& context);
void require_bool(const Expr& e, const std::string& context);
void require_int(const Expr& e, const std::string& context);
void require_list(const Expr& e, const std::string& context);

/// Fills the fields every method builder shares and runs the method checks.
Method make_method(std::string name, Scope scope, Binding binding, Type return_type, std::vector<Param> params,
                   Body body);

} // namespace gool::detail
