// CSV ingestion for feature matrices with an optional label column, plus
// small formatting helpers shared by the report writers.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyc/common.hpp"

namespace hyc {

struct LoadedData {
  Matrix X;                              // n x d features
  std::vector<int> labels;               // empty when no label column
  std::vector<std::string> label_names;  // class name per label id
  std::vector<std::string> columns;      // feature column names (may be empty)
};

// label_spec: "none" (all columns are features), "last" (last column holds
// labels), a 0-based column index, or a header column name (requires a
// header row). A first line whose cells are all non-numeric is treated as a
// header. Label values may be arbitrary strings; ids are assigned by first
// appearance. Parse failures carry 1-based row/column positions.
LoadedData load_csv(const std::string& path, const std::string& label_spec);

// Same, reading from a stream (path used only in error messages).
LoadedData load_csv(std::istream& in, const std::string& label_spec,
                    const std::string& path = "<stream>");

}  // namespace hyc
