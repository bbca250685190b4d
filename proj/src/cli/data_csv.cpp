#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "sges/cli.hpp"

namespace sges::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

CsvData read_csv_data(std::istream& in) {
  CsvData out;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  if (trim(line).empty()) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing header row");
  for (const std::string& raw : split(line)) {
    const std::string name = trim(raw);
    if (name.empty())
      throw ParseError(line_no, out.names.size() + 1, "empty variable name");
    if (std::find(out.names.begin(), out.names.end(), name) != out.names.end())
      throw ParseError(line_no, out.names.size() + 1, "duplicate variable name '" + name + "'");
    out.names.push_back(name);
  }
  if (static_cast<int>(out.names.size()) > NodeSet::kMaxNodes)
    throw ParseError(line_no, NodeSet::kMaxNodes + 1, "more than 64 variables");
  out.data.columns = static_cast<int>(out.names.size());

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split(line);
    if (fields.size() != out.names.size())
      throw ParseError(line_no, std::min(fields.size(), out.names.size()) + 1,
                       "expected " + std::to_string(out.names.size()) + " fields, found " +
                           std::to_string(fields.size()));
    for (std::size_t col = 0; col < fields.size(); ++col) {
      const std::string cell = trim(fields[col]);
      int value = 0;
      const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc{} || end != cell.data() + cell.size() || value < 0)
        throw ParseError(line_no, col + 1,
                         "'" + cell + "' is not a non-negative integer category");
      out.data.cells.push_back(value);
    }
  }
  return out;
}

std::vector<int> infer_cardinalities(const DataMatrix& data,
                                     const std::optional<std::vector<int>>& overrides) {
  std::vector<int> observed(data.columns, 1);
  for (std::size_t row = 0; row < data.rows(); ++row)
    for (int c = 0; c < data.columns; ++c) observed[c] = std::max(observed[c], data.at(row, c) + 1);
  if (!overrides) return observed;
  if (static_cast<int>(overrides->size()) != data.columns)
    throw std::invalid_argument("--cards lists " + std::to_string(overrides->size()) +
                                " cardinalities for " + std::to_string(data.columns) +
                                " columns");
  for (int c = 0; c < data.columns; ++c) {
    if ((*overrides)[c] < observed[c])
      throw std::invalid_argument("column " + std::to_string(c + 1) + " has value " +
                                  std::to_string(observed[c] - 1) + " but cardinality " +
                                  std::to_string((*overrides)[c]));
  }
  return *overrides;
}

}  // namespace sges::cli
