#pragma once

#include <filesystem>
#include <string>

#include "hardy/distribution.hpp"
#include "hardy/functionals.hpp"
#include "hardy/step_function.hpp"

namespace hardy::io {

// Strict parsers. Errors are ValidationError with a message naming the
// offending field or the JSON line/column.

Distribution parse_distribution(const std::string& text);
StepFunction parse_step_function(const std::string& text);
SequenceInput parse_sequence(const std::string& text);

Distribution load_distribution(const std::filesystem::path& path);
StepFunction load_step_function(const std::filesystem::path& path);
SequenceInput load_sequence(const std::filesystem::path& path);

std::string to_json(const Distribution& d);
std::string to_json(const StepFunction& psi);

/// Shortest-free fixed rendering: 17 significant digits, "inf"/"-inf"/"nan"
/// as JSON strings.
std::string format_number(double v);

std::string read_file(const std::filesystem::path& path);

}  // namespace hardy::io
