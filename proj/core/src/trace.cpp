// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include "sixdma/trace.hpp"

#include <stdexcept>

namespace sixdma {

TraceWriter::TraceWriter(const std::filesystem::path& path)
    : out_(path, std::ios::binary) {
  if (!out_) {
    throw std::runtime_error("TraceWriter: cannot open " + path.string());
  }
}

void TraceWriter::write(const std::string& json_line) {
  std::lock_guard<std::mutex> lock(mutex_);
  out_ << json_line << '\n';
  out_.flush();
}

}  // namespace sixdma
