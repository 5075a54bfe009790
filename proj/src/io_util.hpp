#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace betti::detail {

// Whitespace-separated tokens of a line with any `#` comment removed.
std::vector<std::string> tokenize(const std::string& line);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
bool looks_like_json(const std::string& text);
// Throws InputError on a syntax error.
nlohmann::json parse_json(const std::string& text);

}  // namespace betti::detail
