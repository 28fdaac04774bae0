// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include "sixdma/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

namespace sixdma {

namespace {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

template <typename T>
T parse_number(std::string_view field, const std::filesystem::path& path) {
  T out{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), out);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw std::runtime_error("parse_results: bad numeric field '" +
                             std::string(field) + "' in " + path.string());
  }
  return out;
}

double parse_double(std::string_view field, const std::filesystem::path& path) {
  return parse_number<double>(field, path);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

void export_results(const ResultTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("export_results: cannot open " + path.string());
  }
  out << kResultCsvHeader << '\n';
  for (const ResultRow& r : table.rows) {
    if (r.scheme.find(',') != std::string::npos) {
      throw std::runtime_error("export_results: scheme name contains a comma");
    }
    out << r.scheme << ',' << r.n_x << ',' << r.n_y << ','
        << format_double(r.gamma0_db) << ',' << r.seed << ','
        << format_double(r.snr_s_db) << ',' << format_double(r.snr_c_db) << ','
        << format_double(r.rho) << ',' << format_double(r.pose.position.x())
        << ',' << format_double(r.pose.position.y()) << ','
        << format_double(r.pose.position.z()) << ','
        << format_double(r.pose.euler.x()) << ','
        << format_double(r.pose.euler.y()) << ','
        << format_double(r.pose.euler.z()) << ',' << r.ao_iters << '\n';
  }
  if (!out) {
    throw std::runtime_error("export_results: write failed for " + path.string());
  }
}

ResultTable parse_results(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("parse_results: cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(in, line) || line != kResultCsvHeader) {
    throw std::runtime_error("parse_results: unexpected header in " +
                             path.string());
  }
  ResultTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 15) {
      throw std::runtime_error("parse_results: expected 15 fields in " +
                               path.string());
    }
    ResultRow r;
    r.scheme = std::string(fields[0]);
    r.n_x = parse_number<int>(fields[1], path);
    r.n_y = parse_number<int>(fields[2], path);
    r.gamma0_db = parse_double(fields[3], path);
    r.seed = parse_number<std::uint64_t>(fields[4], path);
    r.snr_s_db = parse_double(fields[5], path);
    r.snr_c_db = parse_double(fields[6], path);
    r.rho = parse_double(fields[7], path);
    const Vec3 p(parse_double(fields[8], path), parse_double(fields[9], path),
                 parse_double(fields[10], path));
    const Vec3 g(parse_double(fields[11], path), parse_double(fields[12], path),
                 parse_double(fields[13], path));
    r.pose = Pose6D(p, g);
    r.ao_iters = parse_number<int>(fields[14], path);
    table.rows.push_back(std::move(r));
  }
  return table;
}

}  // namespace sixdma
