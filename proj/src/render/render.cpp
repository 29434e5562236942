#include "gool/render.hpp"

#include "gool/auxfiles.hpp"
#include "gool/backend.hpp"
#include "gool/error.hpp"

namespace gool {

std::string_view to_string(FileType t) {
    switch (t) {
    case FileType::Source: return "Source";
    case FileType::Header: return "Header";
    case FileType::Combined: return "Combined";
    }
    return "?";
}

const RenderedFile* FileSet::find(std::string_view path) const {
    for (const auto& f : files) {
        if (f.path == path) return &f;
    }
    return nullptr;
}

std::vector<std::string> FileSet::paths() const {
    std::vector<std::string> out;
    for (const auto& f : files) out.push_back(f.path);
    return out;
}

std::string finish_file_text(std::string text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
    text += '\n';
    return text;
}

bool needs_parens(int parent, Side side, int child, Assoc parent_assoc) {
    if (child < parent) return true;
    if (child > parent) return false;
    switch (side) {
    case Side::Left: return parent_assoc == Assoc::Right;
    case Side::Right: return parent_assoc == Assoc::Left;
    case Side::Operand: return false;
    }
    return false;
}

std::string parenthesize_child(int parent, Side side, int child, std::string child_text, Assoc parent_assoc) {
    if (needs_parens(parent, side, child, parent_assoc)) return "(" + child_text + ")";
    return child_text;
}

Doc render_body(const Body& b, const std::function<Doc(const Stmt&)>& render_stmt) {
    std::vector<Doc> blocks;
    for (const auto& blk : b.blocks) {
        Doc d;
        for (const auto& s : blk.stmts) d += render_stmt(s);
        blocks.push_back(std::move(d));
    }
    return separated(blocks);
}

FileSet assemble_package(const Package& pkg, const Backend& backend) {
    FileSet out;
    for (const auto& m : pkg.modules) {
        if (m.empty()) continue;
        std::vector<RenderedFile> files;
        try {
            files = backend.render_module(m, pkg);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::UnsupportedConstruct) throw;
            std::string detail = e.what();
            detail.erase(0, to_string(e.kind()).size() + 2);  // drop the "Kind: " prefix
            throw Error(ErrorKind::UnsupportedConstruct, "module " + m.name + ": " + detail);
        }
        for (auto& f : files) {
            if (f.text.find_first_not_of(" \n") == std::string::npos) continue;
            f.text = finish_file_text(std::move(f.text));
            out.files.push_back(std::move(f));
        }
    }
    bool doc_rule = false;
    bool want_dox = false;
    const AuxFileSpec* make_spec = nullptr;
    for (const auto& a : pkg.aux_files) {
        if (a.kind == AuxKind::Makefile) {
            make_spec = &a;
            doc_rule = a.with_doc_rule;
        } else {
            want_dox = true;
        }
    }
    FileSet code = out;
    if (make_spec) out.files.push_back(render_makefile(pkg, backend.target(), code, doc_rule));
    if (want_dox || doc_rule) out.files.push_back(render_dox_config(pkg));
    return out;
}

} // namespace gool
