#include "checks.hpp"

#include <set>

#include "gool/error.hpp"

namespace gool::detail {

namespace {

// Returns whether the observer list is initialised after running `b`.
bool walk_observers(const Body& b, bool initialised);

bool walk_observer_stmt(const Stmt& s, bool initialised) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, InitObserverList>) {
                initialised = true;
            } else if constexpr (std::is_same_v<T, AddObserver> || std::is_same_v<T, NotifyObservers>) {
                if (!initialised) {
                    throw Error(ErrorKind::ObserverNotInitialized,
                                std::is_same_v<T, AddObserver> ? "addObserver before initObserverList"
                                                               : "notifyObservers before initObserverList");
                }
            } else if constexpr (std::is_same_v<T, Inline>) {
                initialised = walk_observers(n.body, initialised);
            } else if constexpr (std::is_same_v<T, If>) {
                for (const auto& br : n.branches) walk_observers(br.body, initialised);
                if (n.else_body) walk_observers(*n.else_body, initialised);
            } else if constexpr (std::is_same_v<T, Switch>) {
                for (const auto& c : n.cases) walk_observers(c.body, initialised);
                walk_observers(n.default_body, initialised);
            } else if constexpr (std::is_same_v<T, For>) {
                walk_observer_stmt(*n.init, initialised);
                walk_observers(n.body, initialised);
            } else if constexpr (std::is_same_v<T, ForRange> || std::is_same_v<T, ForEach> ||
                                 std::is_same_v<T, While>) {
                walk_observers(n.body, initialised);
            } else if constexpr (std::is_same_v<T, TryCatch>) {
                walk_observers(n.try_body, initialised);
                walk_observers(n.catch_body, initialised);
            } else if constexpr (std::is_same_v<T, CheckState>) {
                for (const auto& c : n.cases) walk_observers(c.body, initialised);
                walk_observers(n.fallback, initialised);
            }
        },
        s.node);
    return initialised;
}

bool walk_observers(const Body& b, bool initialised) {
    for (const auto& blk : b.blocks) {
        for (const auto& s : blk.stmts) initialised = walk_observer_stmt(s, initialised);
    }
    return initialised;
}

} // namespace

void check_observer_scopes(const Body& body) { walk_observers(body, false); }

void check_unique_params(const std::vector<Param>& params) {
    std::set<std::string> seen;
    for (const auto& p : params) {
        if (!seen.insert(p.var.name).second) {
            throw Error(ErrorKind::DuplicateParam, "parameter " + p.var.name + " declared twice");
        }
    }
}

bool assignable(const Type& target, const Type& value) {
    if (target == value) return true;
    return target.is(TypeKind::Float) && value.is(TypeKind::Int);
}

void require_assignable(const Type& target, const Type& value, const std::string& context) {
    if (!assignable(target, value)) {
        throw Error(ErrorKind::TypeMismatch,
                    context + ": cannot store " + value.describe() + " in " + target.describe());
    }
}

void require_bool(const Expr& e, const std::string& context) {
    if (!e.type.is(TypeKind::Bool)) {
        throw Error(ErrorKind::TypeMismatch, context + " must be bool, got " + e.type.describe());
    }
}

void require_int(const Expr& e, const std::string& context) {
    if (!e.type.is(TypeKind::Int)) {
        throw Error(ErrorKind::TypeMismatch, context + " must be int, got " + e.type.describe());
    }
}

void require_list(const Expr& e, const std::string& context) {
    if (!e.type.is_list()) {
        throw Error(ErrorKind::TypeMismatch, context + " needs a list, got " + e.type.describe());
    }
}

Method make_method(std::string name, Scope scope, Binding binding, Type return_type, std::vector<Param> params,
                   Body body) {
    require_identifier(name, "method name");
    check_unique_params(params);
    check_observer_scopes(body);
    Method m;
    m.name = std::move(name);
    m.scope = scope;
    m.binding = binding;
    m.return_type = std::move(return_type);
    m.params = std::move(params);
    m.body = std::move(body);
    return m;
}

} // namespace gool::detail
