#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gool {

enum class ErrorKind {
    InvalidIdentifier,
    InvalidLiteral,
    TypeMismatch,
    ConstAssignment,
    EmptyConditional,
    DuplicateParam,
    DuplicateMethod,
    DuplicateModule,
    MultipleMain,
    SignatureMismatch,
    UnknownStrategy,
    ObserverNotInitialized,
    DuplicateStateLabel,
    UnknownParamDoc,
    DuplicateAuxFile,
    NoMainModule,
    UnsupportedConstruct,
    DecodeError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace gool
