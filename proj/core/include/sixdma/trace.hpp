// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>

namespace sixdma {

/// Thread-safe JSON-lines sink for per-iteration optimizer traces.
class TraceWriter {
 public:
  explicit TraceWriter(const std::filesystem::path& path);

  /// Append one line; `json_line` must be a complete JSON object.
  void write(const std::string& json_line);

 private:
  std::ofstream out_;
  std::mutex mutex_;
};

}  // namespace sixdma
