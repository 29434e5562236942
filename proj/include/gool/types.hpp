#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gool/box.hpp"

namespace gool {

enum class TypeKind { Void, Bool, Int, Float, Char, String, InFile, OutFile, List, Object };

/// A language-agnostic value type. Lists carry exactly one element type,
/// objects carry a nonempty class name, everything else carries nothing.
class Type {
public:
    static Type void_type() { return Type(TypeKind::Void); }
    static Type boolean() { return Type(TypeKind::Bool); }
    static Type integer() { return Type(TypeKind::Int); }
    static Type floating() { return Type(TypeKind::Float); }
    static Type character() { return Type(TypeKind::Char); }
    static Type string() { return Type(TypeKind::String); }
    static Type infile() { return Type(TypeKind::InFile); }
    static Type outfile() { return Type(TypeKind::OutFile); }
    static Type list(Type element);
    static Type object(std::string class_name);

    TypeKind kind() const noexcept { return kind_; }
    bool is(TypeKind k) const noexcept { return kind_ == k; }
    bool is_numeric() const noexcept { return kind_ == TypeKind::Int || kind_ == TypeKind::Float; }
    bool is_list() const noexcept { return kind_ == TypeKind::List; }

    /// Element type of a list; throws TypeMismatch for any other kind.
    const Type& element() const;
    /// Class name of an object type; throws TypeMismatch for any other kind.
    const std::string& class_name() const;

    /// Debug spelling, e.g. "list(int)" or "object(Observer)".
    std::string describe() const;

    bool operator==(const Type&) const = default;

private:
    explicit Type(TypeKind kind) : kind_(kind) {}

    TypeKind kind_;
    std::optional<Box<Type>> element_;
    std::string class_name_;
};

std::string_view to_string(TypeKind kind);

/// Builds a payload-free type. List and Object kinds need the overloads below.
Type type_of(TypeKind kind);
Type type_of(TypeKind kind, Type element);
Type type_of(TypeKind kind, std::string class_name);

/// float wins over int; both operands must be numeric.
Type numeric_join(const Type& a, const Type& b);

enum class Binding { Static, Dynamic };
enum class Scope { Public, Private };

bool is_identifier(std::string_view name);
/// Throws InvalidIdentifier unless `name` matches [A-Za-z_][A-Za-z0-9_]*.
void require_identifier(std::string_view name, std::string_view what);

} // namespace gool
