// report.cpp
#include "ig2/report.hpp"

#include <algorithm>
#include <sstream>

namespace ig2 {

namespace {
// display width = code-point count (the empty-partition symbol is multibyte)
std::size_t cp_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++w;
  return w;
}
}  // namespace

std::string render_table_text(const TableData& t) {
  std::vector<std::size_t> widths(t.headers.size(), 0);
  for (std::size_t c = 0; c < t.headers.size(); ++c) widths[c] = cp_width(t.headers[c]);
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
      widths[c] = std::max(widths[c], cp_width(row[c]));
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < widths.size(); ++c) {
      const std::string& cell = c < row.size() ? row[c] : "";
      os << cell;
      if (c + 1 < widths.size()) os << std::string(widths[c] - cp_width(cell) + 2, ' ');
    }
    os << '\n';
  };
  emit(t.headers);
  std::size_t total = 0;
  for (std::size_t c = 0; c < widths.size(); ++c) total += widths[c] + (c + 1 < widths.size() ? 2 : 0);
  os << std::string(total, '-') << '\n';
  for (const auto& row : t.rows) emit(row);
  return os.str();
}

std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

std::string render_table_csv(const TableData& t) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << csv_quote(row[c]);
    }
    os << "\r\n";
  };
  emit(t.headers);
  for (const auto& row : t.rows) emit(row);
  return os.str();
}

}  // namespace ig2
