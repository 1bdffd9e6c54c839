// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fedlink::csv {

// Comma-separated, double-quote escaped, UTF-8. Records may contain quoted
// commas and newlines. Parsing is strict: a stray quote raises IoError with
// the offending line number.

std::vector<std::vector<std::string>> parse(std::string_view text, std::string_view source_name);
std::vector<std::vector<std::string>> read_file(const std::string& path);

std::string escape(std::string_view field);
void write_row(std::ostream& os, const std::vector<std::string>& fields);

}  // namespace fedlink::csv
