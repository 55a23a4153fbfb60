#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcv/report/csv.hpp"

namespace qcv::report {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
};

using Point = std::pair<double, double>;

// Rows of `table` where both columns parse as finite numbers. Throws
// UsageError when a column is missing.
std::vector<Point> column_points(const Table& table, const std::string& x, const std::string& y);

// Static scatter plot, viewBox 960x540, axes padded to 1-2-5 ticks, a dashed
// line at y = 0 when the range crosses it. Byte-identical for equal input.
std::string scatter_svg(const std::vector<Point>& points, const PlotOptions& options);

}  // namespace qcv::report
