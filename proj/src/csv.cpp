#include "ialign/harness/csv.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include "ialign/errors.hpp"

namespace ialign::harness {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory " + path.parent_path().string() + ": " +
                    ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("write to " + path.string() + " failed");
  }
}

}  // namespace ialign::harness
