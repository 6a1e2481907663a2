#pragma once

#include <string>
#include <string_view>

#include "sttt/decomposer.hpp"
#include "sttt/esd.hpp"

namespace sttt {

/// JSON decomposition format; empty sets are omitted on write.
std::string render_esd(const Esd& d);
/// Throws Syntax on malformed JSON, unknown keys or bad key shapes.
Esd parse_esd(std::string_view text);

/// {"branch", "S", "esd_file", "checks"}; esd_file is omitted when empty.
std::string render_outcome_report(const Outcome& out, const std::string& esd_file);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace sttt
