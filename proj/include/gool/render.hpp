#pragma once

// Target-independent rendering machinery: parenthesisation, body layout and
// package assembly.

#include <functional>
#include <string>
#include <vector>

#include "gool/ir.hpp"
#include "gool/layout.hpp"

namespace gool {

enum class FileType { Source, Header, Combined };
std::string_view to_string(FileType t);

struct RenderedFile {
    std::string path;
    FileType type = FileType::Combined;
    std::string text;  // always ends in exactly one '\n'
    bool operator==(const RenderedFile&) const = default;
};

struct FileSet {
    std::vector<RenderedFile> files;

    const RenderedFile* find(std::string_view path) const;
    std::vector<std::string> paths() const;
    bool operator==(const FileSet&) const = default;
};

/// Normalises trailing newlines so the text ends in exactly one.
std::string finish_file_text(std::string text);

enum class Side { Left, Right, Operand };

/// True when a child of precedence `child` must be wrapped to keep its parse
/// under a parent of precedence `parent` (equal precedence: wrap on the side
/// opposite to the parent's associativity).
bool needs_parens(int parent, Side side, int child, Assoc parent_assoc = Assoc::Left);
std::string parenthesize_child(int parent, Side side, int child, std::string child_text,
                               Assoc parent_assoc = Assoc::Left);

/// Blocks in order, one blank line between consecutive nonempty blocks.
Doc render_body(const Body& b, const std::function<Doc(const Stmt&)>& render_stmt);

class Backend;

/// One or two files per nonempty module, followed by the auxiliary files.
FileSet assemble_package(const Package& pkg, const Backend& backend);

} // namespace gool
