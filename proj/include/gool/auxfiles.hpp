#pragma once

// Non-code package artifacts: Makefile, Doxygen configuration and
// Doxygen-style doc comments.

#include <string>
#include <string_view>
#include <vector>

#include "gool/backend.hpp"
#include "gool/ir.hpp"
#include "gool/layout.hpp"
#include "gool/render.hpp"

namespace gool {

inline constexpr std::string_view kDoxConfigName = "doxConfig";

/// `code` is the already rendered code FileSet; its file types decide which
/// files are compiled. Throws NoMainModule for compiled targets without a
/// main module.
RenderedFile render_makefile(const Package& pkg, Target target, const FileSet& code, bool with_doc_rule);

RenderedFile render_dox_config(const Package& pkg);

enum class CommentStyle { Block, Hash };

/// Doxygen comment with \brief, one \param per described parameter (in
/// `param_order` when given) and an optional \return.
Doc render_doc_comment(const DocSpec& doc, DocKind kind, CommentStyle style, std::string_view file_name = {},
                       const std::vector<std::string>& param_order = {});

/// Throws UnknownParamDoc if a description names a parameter not in `declared`.
void validate_doc(const DocSpec& doc, const std::vector<std::string>& declared);

} // namespace gool
