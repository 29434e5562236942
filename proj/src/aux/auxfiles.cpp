#include "gool/auxfiles.hpp"

#include <algorithm>
#include <set>

#include "gool/error.hpp"

namespace gool {

void validate_doc(const DocSpec& doc, const std::vector<std::string>& declared) {
    std::set<std::string> seen;
    for (const auto& [name, text] : doc.params) {
        if (std::find(declared.begin(), declared.end(), name) == declared.end()) {
            throw Error(ErrorKind::UnknownParamDoc, "no parameter named \"" + name + "\"");
        }
        if (!seen.insert(name).second) {
            throw Error(ErrorKind::UnknownParamDoc, "parameter \"" + name + "\" described twice");
        }
    }
}

Doc render_doc_comment(const DocSpec& doc, DocKind kind, CommentStyle style, std::string_view file_name,
                       const std::vector<std::string>& param_order) {
    std::vector<std::string> fields;
    if (kind == DocKind::Module && !file_name.empty()) fields.push_back("\\file " + std::string(file_name));
    fields.push_back(doc.description.empty() ? "\\brief" : "\\brief " + doc.description);

    auto param_line = [](const std::string& name, const std::string& text) {
        return text.empty() ? "\\param " + name : "\\param " + name + " " + text;
    };
    if (param_order.empty()) {
        for (const auto& [name, text] : doc.params) fields.push_back(param_line(name, text));
    } else {
        for (const auto& name : param_order) {
            for (const auto& [described, text] : doc.params) {
                if (described == name) fields.push_back(param_line(name, text));
            }
        }
    }
    if (doc.returns) fields.push_back(doc.returns->empty() ? "\\return" : "\\return " + *doc.returns);

    Doc out;
    if (style == CommentStyle::Block) {
        out += Doc::text("/**");
        for (const auto& f : fields) out += Doc::text(" * " + f);
        out += Doc::text(" */");
    } else {
        bool first = true;
        for (const auto& f : fields) {
            out += Doc::text((first ? "## " : "# ") + f);
            first = false;
        }
    }
    return out;
}

namespace {

std::string join_files(const std::vector<std::string>& files) {
    std::string out;
    for (const auto& f : files) {
        if (!out.empty()) out += ' ';
        out += f;
    }
    return out;
}

} // namespace

RenderedFile render_makefile(const Package& pkg, Target target, const FileSet& code, bool with_doc_rule) {
    const Module* main = pkg.main_module();
    if (!main && target != Target::Python) {
        throw Error(ErrorKind::NoMainModule,
                    "package " + pkg.name + " has no main module to build for " + std::string(to_string(target)));
    }

    std::vector<std::string> sources;
    for (const auto& f : code.files) {
        if (f.type != FileType::Header) sources.push_back(f.path);
    }

    std::string vars;
    std::string rules;
    std::vector<std::string> phony;
    switch (target) {
    case Target::Python:
        vars = "PYTHON ?= python3\n";
        if (main) {
            phony.push_back("run");
            rules += "run:\n\t$(PYTHON) " + main->name + ".py $(RUNARGS)\n";
        }
        break;
    case Target::Java:
        vars = "JAVAC ?= javac\nJAVA ?= java\n";
        phony.insert(phony.end(), {"build", "run"});
        rules += "build:\n\t$(JAVAC) " + join_files(sources) + "\n\n";
        rules += "run: build\n\t$(JAVA) " + main->name + " $(RUNARGS)\n";
        break;
    case Target::CSharp:
        vars = "CSC ?= mcs\nMONO ?= mono\n";
        phony.insert(phony.end(), {"build", "run"});
        rules += "build:\n\t$(CSC) -out:" + main->name + ".exe " + join_files(sources) + "\n\n";
        rules += "run: build\n\t$(MONO) " + main->name + ".exe $(RUNARGS)\n";
        break;
    case Target::Cpp:
        vars = "CXX ?= g++\nCXXFLAGS ?= -std=c++11\n";
        phony.insert(phony.end(), {"build", "run"});
        rules += "build:\n\t$(CXX) $(CXXFLAGS) -o " + main->name + " " + join_files(sources) + "\n\n";
        rules += "run: build\n\t./" + main->name + " $(RUNARGS)\n";
        break;
    }
    if (with_doc_rule) {
        phony.push_back("doc");
        if (!rules.empty()) rules += "\n";
        rules += "doc: " + std::string(kDoxConfigName) + "\n\tdoxygen " + std::string(kDoxConfigName) + "\n";
    }

    std::string text = vars;
    if (!phony.empty()) text += "\n.PHONY: " + join_files(phony) + "\n";
    if (!rules.empty()) text += "\n" + rules;
    return RenderedFile{"Makefile", FileType::Combined, finish_file_text(std::move(text))};
}

RenderedFile render_dox_config(const Package& pkg) {
    std::string text;
    text += "PROJECT_NAME = \"" + pkg.name + "\"\n";
    text += "INPUT = .\n";
    text += "EXTRACT_ALL = YES\n";
    text += "OUTPUT_DIRECTORY = doc\n";
    text += "GENERATE_LATEX = NO\n";
    text += "QUIET = YES\n";
    return RenderedFile{std::string(kDoxConfigName), FileType::Combined, std::move(text)};
}

} // namespace gool
