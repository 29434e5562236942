#include "gool/layout.hpp"

namespace gool {

Doc Doc::text(std::string_view s) {
    Doc d;
    std::size_t pos = 0;
    while (true) {
        auto nl = s.find('\n', pos);
        d.lines_.push_back(Line{0, std::string(s.substr(pos, nl == std::string_view::npos ? nl : nl - pos))});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return d;
}

Doc Doc::blank() {
    Doc d;
    d.lines_.push_back(Line{0, {}});
    return d;
}

Doc& Doc::operator+=(const Doc& below) {
    lines_.insert(lines_.end(), below.lines_.begin(), below.lines_.end());
    return *this;
}

Doc Doc::indented(int levels) const {
    Doc d = *this;
    for (auto& line : d.lines_) {
        if (!line.text.empty()) line.depth += levels;
    }
    return d;
}

Doc& Doc::append_to_last(std::string_view suffix) {
    if (lines_.empty()) lines_.push_back(Line{0, {}});
    lines_.back().text += suffix;
    return *this;
}

std::string Doc::str() const {
    std::string out;
    bool first = true;
    for (const auto& line : lines_) {
        if (!first) out += '\n';
        first = false;
        if (line.text.empty()) continue;
        out.append(static_cast<std::size_t>(line.depth * kIndentWidth), ' ');
        out += line.text;
    }
    return out;
}

Doc separated(const std::vector<Doc>& parts) {
    Doc out;
    bool first = true;
    for (const auto& part : parts) {
        if (part.empty()) continue;
        if (!first) out += Doc::blank();
        first = false;
        out += part;
    }
    return out;
}

} // namespace gool
