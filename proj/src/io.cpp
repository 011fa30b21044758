#include "hyc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace hyc {

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

bool parse_number(const std::string& cell, double& out) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end && !cell.empty();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // Trim surrounding whitespace.
    std::size_t b = cell.find_first_not_of(" \t\r");
    std::size_t e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

LoadedData load_csv(std::istream& in, const std::string& label_spec, const std::string& path) {
  std::vector<std::vector<std::string>> records;
  std::vector<int> record_lines;
  std::vector<std::string> header;
  std::string line;
  int line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (first_content) {
      first_content = false;
      // Header row iff no cell parses as a number.
      bool any_numeric = false;
      for (const std::string& c : cells) {
        double v;
        if (parse_number(c, v)) {
          any_numeric = true;
          break;
        }
      }
      if (!any_numeric) {
        header = cells;
        continue;
      }
    }
    records.push_back(std::move(cells));
    record_lines.push_back(line_no);
  }
  if (records.empty()) throw DataError(path + ": no data rows");
  std::size_t width = records.front().size();
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (records[r].size() != width) {
      throw DataError(path + " line " + std::to_string(record_lines[r]) + ": has " +
                      std::to_string(records[r].size()) + " cells, expected " +
                      std::to_string(width));
    }
  }
  if (!header.empty() && header.size() != width) {
    throw DataError(path + ": header has " + std::to_string(header.size()) +
                    " cells but data rows have " + std::to_string(width));
  }

  // Resolve the label column.
  int label_col = -1;
  if (label_spec == "none" || label_spec.empty()) {
    label_col = -1;
  } else if (label_spec == "last") {
    label_col = static_cast<int>(width) - 1;
  } else {
    bool is_index = !label_spec.empty() &&
                    label_spec.find_first_not_of("0123456789") == std::string::npos;
    if (is_index) {
      label_col = std::stoi(label_spec);
      if (label_col < 0 || label_col >= static_cast<int>(width)) {
        throw ConfigError(path + ": label column index " + label_spec + " outside [0, " +
                          std::to_string(width) + ")");
      }
    } else {
      if (header.empty()) {
        throw ConfigError(path + ": label column named '" + label_spec +
                          "' requires a header row, and the file has none");
      }
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == label_spec) {
          label_col = static_cast<int>(c);
          break;
        }
      }
      if (label_col < 0) {
        throw ConfigError(path + ": no header column named '" + label_spec + "'");
      }
    }
  }
  int d = static_cast<int>(width) - (label_col >= 0 ? 1 : 0);
  if (d < 1) throw DataError(path + ": no feature columns left");

  LoadedData out;
  out.X.resize(static_cast<int>(records.size()), d);
  std::unordered_map<std::string, int> label_ids;
  for (std::size_t r = 0; r < records.size(); ++r) {
    int c_out = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (static_cast<int>(c) == label_col) continue;
      double v;
      if (!parse_number(records[r][c], v)) {
        throw DataError(path + " line " + std::to_string(record_lines[r]) + " column " +
                        std::to_string(c + 1) + ": cannot parse '" + records[r][c] +
                        "' as a number");
      }
      out.X(static_cast<int>(r), c_out++) = v;
    }
    if (label_col >= 0) {
      const std::string& name = records[r][static_cast<std::size_t>(label_col)];
      auto [it, inserted] = label_ids.emplace(name, static_cast<int>(label_ids.size()));
      if (inserted) out.label_names.push_back(name);
      out.labels.push_back(it->second);
    }
  }
  if (!header.empty()) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (static_cast<int>(c) != label_col) out.columns.push_back(header[c]);
    }
  }
  return out;
}

LoadedData load_csv(const std::string& path, const std::string& label_spec) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return load_csv(in, label_spec, path);
}

}  // namespace hyc
