#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gool/ir.hpp"
#include "gool/layout.hpp"
#include "gool/render.hpp"

namespace gool {

enum class Target { Python, Java, CSharp, Cpp };

inline constexpr Target kAllTargets[] = {Target::Python, Target::Java, Target::CSharp, Target::Cpp};

std::string_view to_string(Target t);
std::optional<Target> parse_target(std::string_view name);

enum class DocKind { Function, Class, Module };

/// A renderer from the program tree to one target language.
class Backend {
public:
    virtual ~Backend() = default;

    virtual Target target() const = 0;
    virtual std::string source_extension() const = 0;

    /// Files for one module; empty modules yield none and C++ drops an
    /// empty header.
    virtual std::vector<RenderedFile> render_module(const Module& m, const Package& pkg) const = 0;

    // Fragment renderers, each with a fresh context.
    virtual std::string render_expr(const Expr& e) const = 0;
    virtual Doc render_statement(const Stmt& s) const = 0;
    /// A method as it appears in its defining file, unindented. For C++ this
    /// is the source-file definition.
    virtual Doc render_method(const Method& m) const = 0;
    virtual Doc render_doc_comment(const DocSpec& doc, DocKind kind, std::string_view file_name = {},
                                   const std::vector<std::string>& param_order = {}) const = 0;
};

std::unique_ptr<Backend> make_backend(Target t);

/// The full FileSet for one target.
FileSet render_target(const Package& pkg, Target t);

} // namespace gool
