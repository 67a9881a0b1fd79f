#pragma once

#include <filesystem>
#include <string>

namespace ialign::harness {

// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_double(double value);

// Writes `content` to `path`, creating parent directories as needed.
// Throws IoError when the file cannot be created or written.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace ialign::harness
