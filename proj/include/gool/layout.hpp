#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gool {

inline constexpr int kIndentWidth = 4;

/// Formatted text: a sequence of lines, each with an indentation depth.
/// Blank lines never carry indentation.
class Doc {
public:
    Doc() = default;

    /// One line per '\n'-separated piece of `s`.
    static Doc text(std::string_view s);
    static Doc blank();

    Doc& operator+=(const Doc& below);
    friend Doc operator+(Doc above, const Doc& below) { return above += below; }

    /// Every nonempty line pushed right by one level.
    Doc indented(int levels = 1) const;

    /// Appends `suffix` to the last line (or starts one).
    Doc& append_to_last(std::string_view suffix);

    bool empty() const noexcept { return lines_.empty(); }
    std::size_t line_count() const noexcept { return lines_.size(); }

    /// Lines joined with '\n', no trailing newline.
    std::string str() const;

    bool operator==(const Doc&) const = default;

private:
    struct Line {
        int depth = 0;
        std::string text;
        bool operator==(const Line&) const = default;
    };
    std::vector<Line> lines_;
};

/// Stacks the nonempty docs with exactly one blank line between neighbours.
Doc separated(const std::vector<Doc>& parts);

} // namespace gool
