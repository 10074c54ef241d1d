// report.hpp -- check items, certificate report structure, and the three
// output renderings (aligned text, RFC-quoted csv, versioned json)
#pragma once

#include <string>
#include <vector>

namespace ig2 {

constexpr int kSchemaVersion = 1;

struct CheckItem {
  std::string name;     // stable identifier, e.g. "special-structure-constants"
  std::string display;  // the identity it verifies, e.g. "(mult)"
  bool pass = false;
  std::string details;
};

struct Assumption {
  std::string name;
  std::string statement;
};

struct CertificateReport {
  int n = 0;
  std::vector<CheckItem> items;
  std::vector<Assumption> assumptions;
  std::vector<std::string> notes;
  bool verdict = false;
};

// Plain column table used by the text and csv renderers.
struct TableData {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table_text(const TableData& t);
std::string render_table_csv(const TableData& t);
std::string csv_quote(const std::string& s);

}  // namespace ig2
