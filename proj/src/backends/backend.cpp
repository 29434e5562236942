#include "gool/backend.hpp"

#include "common.hpp"
#include "gool/error.hpp"

namespace gool {

std::string_view to_string(Target t) {
    switch (t) {
    case Target::Python: return "python";
    case Target::Java: return "java";
    case Target::CSharp: return "csharp";
    case Target::Cpp: return "cpp";
    }
    return "?";
}

std::optional<Target> parse_target(std::string_view name) {
    for (Target t : kAllTargets) {
        if (to_string(t) == name) return t;
    }
    return std::nullopt;
}

std::unique_ptr<Backend> make_backend(Target t) {
    switch (t) {
    case Target::Python: return detail::make_python_backend();
    case Target::Java: return detail::make_java_backend();
    case Target::CSharp: return detail::make_csharp_backend();
    case Target::Cpp: return detail::make_cpp_backend();
    }
    throw Error(ErrorKind::UnsupportedConstruct, "unknown target");
}

FileSet render_target(const Package& pkg, Target t) { return assemble_package(pkg, *make_backend(t)); }

} // namespace gool
