#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gool/ir.hpp"

namespace gool {

/// A built-in example program with the inputs it is run with.
struct GalleryEntry {
    std::string name;
    Package package;
    std::vector<std::string> args;
    std::string stdin_text;
};

const std::vector<GalleryEntry>& gallery();
const GalleryEntry* find_example(std::string_view name);

} // namespace gool
