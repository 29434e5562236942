#include "gool/types.hpp"

#include <cctype>

#include "gool/error.hpp"

namespace gool {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorKind::InvalidLiteral: return "InvalidLiteral";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ConstAssignment: return "ConstAssignment";
    case ErrorKind::EmptyConditional: return "EmptyConditional";
    case ErrorKind::DuplicateParam: return "DuplicateParam";
    case ErrorKind::DuplicateMethod: return "DuplicateMethod";
    case ErrorKind::DuplicateModule: return "DuplicateModule";
    case ErrorKind::MultipleMain: return "MultipleMain";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::UnknownStrategy: return "UnknownStrategy";
    case ErrorKind::ObserverNotInitialized: return "ObserverNotInitialized";
    case ErrorKind::DuplicateStateLabel: return "DuplicateStateLabel";
    case ErrorKind::UnknownParamDoc: return "UnknownParamDoc";
    case ErrorKind::DuplicateAuxFile: return "DuplicateAuxFile";
    case ErrorKind::NoMainModule: return "NoMainModule";
    case ErrorKind::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorKind::DecodeError: return "DecodeError";
    }
    return "Error";
}

std::string_view to_string(TypeKind kind) {
    switch (kind) {
    case TypeKind::Void: return "void";
    case TypeKind::Bool: return "bool";
    case TypeKind::Int: return "int";
    case TypeKind::Float: return "float";
    case TypeKind::Char: return "char";
    case TypeKind::String: return "string";
    case TypeKind::InFile: return "infile";
    case TypeKind::OutFile: return "outfile";
    case TypeKind::List: return "list";
    case TypeKind::Object: return "object";
    }
    return "?";
}

Type Type::list(Type element) {
    if (element.is(TypeKind::Void)) {
        throw Error(ErrorKind::TypeMismatch, "list element type cannot be void");
    }
    Type t(TypeKind::List);
    t.element_ = Box<Type>(std::move(element));
    return t;
}

Type Type::object(std::string class_name) {
    require_identifier(class_name, "class name");
    Type t(TypeKind::Object);
    t.class_name_ = std::move(class_name);
    return t;
}

const Type& Type::element() const {
    if (!element_) throw Error(ErrorKind::TypeMismatch, "expected a list type, got " + describe());
    return element_->get();
}

const std::string& Type::class_name() const {
    if (kind_ != TypeKind::Object) {
        throw Error(ErrorKind::TypeMismatch, "expected an object type, got " + describe());
    }
    return class_name_;
}

std::string Type::describe() const {
    switch (kind_) {
    case TypeKind::List: return "list(" + element_->get().describe() + ")";
    case TypeKind::Object: return "object(" + class_name_ + ")";
    default: return std::string(to_string(kind_));
    }
}

Type type_of(TypeKind kind) {
    switch (kind) {
    case TypeKind::List:
        throw Error(ErrorKind::TypeMismatch, "list type needs an element type");
    case TypeKind::Object:
        throw Error(ErrorKind::InvalidIdentifier, "object type needs a class name");
    case TypeKind::Void: return Type::void_type();
    case TypeKind::Bool: return Type::boolean();
    case TypeKind::Int: return Type::integer();
    case TypeKind::Float: return Type::floating();
    case TypeKind::Char: return Type::character();
    case TypeKind::String: return Type::string();
    case TypeKind::InFile: return Type::infile();
    case TypeKind::OutFile: return Type::outfile();
    }
    throw Error(ErrorKind::TypeMismatch, "unknown type kind");
}

Type type_of(TypeKind kind, Type element) {
    if (kind != TypeKind::List) {
        throw Error(ErrorKind::TypeMismatch,
                    std::string(to_string(kind)) + " type takes no element type");
    }
    return Type::list(std::move(element));
}

Type type_of(TypeKind kind, std::string class_name) {
    if (kind != TypeKind::Object) {
        throw Error(ErrorKind::TypeMismatch, std::string(to_string(kind)) + " type takes no class name");
    }
    return Type::object(std::move(class_name));
}

Type numeric_join(const Type& a, const Type& b) {
    if (!a.is_numeric() || !b.is_numeric()) {
        throw Error(ErrorKind::TypeMismatch, "expected numeric operands, got " + a.describe() + " and " +
                                                 b.describe());
    }
    return (a.is(TypeKind::Float) || b.is(TypeKind::Float)) ? Type::floating() : Type::integer();
}

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    auto head = static_cast<unsigned char>(name.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    for (char c : name) {
        auto u = static_cast<unsigned char>(c);
        if (!(std::isalnum(u) || u == '_')) return false;
    }
    return true;
}

void require_identifier(std::string_view name, std::string_view what) {
    if (!is_identifier(name)) {
        throw Error(ErrorKind::InvalidIdentifier,
                    std::string(what) + " \"" + std::string(name) + "\" is not a valid identifier");
    }
}

} // namespace gool
