#pragma once

// Versioned JSON encoding of a Package. Decoding rebuilds the tree through
// the builders, so every build-time check applies to decoded input too.

#include <string>
#include <string_view>

#include <json.hpp>

#include "gool/ir.hpp"

namespace gool::json {

inline constexpr int kFormatVersion = 1;

nlohmann::json encode(const Package& pkg);
std::string encode_text(const Package& pkg);

/// Throws Error{DecodeError} with a JSON-pointer (or byte offset, for syntax
/// errors) locating the problem.
Package decode(const nlohmann::json& doc);
Package decode_text(std::string_view text);

} // namespace gool::json
