// table_io.cpp
#include "ig2/table_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ig2 {

const char* const kOracleVersion = "ig2-oracle-1";

namespace {

std::string version_hash() {
  // FNV-1a over the version tag; stable across runs of one build
  std::uint64_t h = 1469598103934665603ull;
  for (const char* p = kOracleVersion; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << (h & 0xffffffffull);
  return os.str();
}

}  // namespace

// One record per constant: "pieri <i> <lambda> <mu> <c>" for the special
// columns (lambda * pi_i), "product <lambda> <mu> <nu> <c>" for full
// products.  Indices refer to the canonical shape list written above them.
void save_table(std::ostream& os, const StructureTable& tab, const MatchResult& match) {
  os << "ig2-table 1\n";
  os << "oracle-version " << kOracleVersion << '\n';
  os << "family " << family_letter(tab.family) << '\n';
  os << "n " << tab.n << '\n';
  os << "match-count " << match.solutions_found << '\n';
  os << "shapes " << tab.shape_count() << '\n';
  for (int i = 0; i < tab.shape_count(); ++i)
    os << i << ' ' << tab.shapes[i].to_string() << ' ' << tab.reps[i].to_string() << '\n';
  for (int which = 1; which <= 2; ++which) {
    const auto& cols = which == 1 ? tab.pieri1 : tab.pieri2;
    for (int lam = 0; lam < tab.shape_count(); ++lam)
      for (const auto& e : cols[lam])
        os << "pieri " << which << ' ' << lam << ' ' << e.mu << ' ' << e.coeff << '\n';
  }
  os << "products " << (tab.products_complete ? "complete" : "none") << '\n';
  if (tab.products_complete) {
    for (const auto& [key, entries] : tab.products)
      for (const auto& e : entries)
        os << "product " << key.first << ' ' << key.second << ' ' << e.mu << ' ' << e.coeff
           << '\n';
  }
  os << "end\n";
}

namespace {

SignedPerm parse_perm(const std::string& text) {
  // "(1,-3,2)"
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::runtime_error("table file: bad permutation " + text);
  std::vector<int> images;
  std::istringstream is(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(is, item, ',')) images.push_back(std::stoi(item));
  return SignedPerm(std::move(images));
}

}  // namespace

StructureTable load_table(std::istream& is, MatchResult& match_out) {
  StructureTable tab;
  std::string line, tok;
  auto expect_line = [&](const std::string& what) {
    if (!std::getline(is, line)) throw std::runtime_error("table file: truncated before " + what);
    return std::istringstream(line);
  };
  {
    auto ls = expect_line("header");
    std::string magic;
    int ver;
    ls >> magic >> ver;
    if (magic != "ig2-table" || ver != 1) throw std::runtime_error("table file: bad magic/version");
  }
  {
    auto ls = expect_line("oracle-version");
    std::string key, val;
    ls >> key >> val;
    if (key != "oracle-version" || val != kOracleVersion)
      throw std::runtime_error("table file: oracle version mismatch");
  }
  {
    auto ls = expect_line("family");
    std::string key, val;
    ls >> key >> val;
    if (key != "family") throw std::runtime_error("table file: missing family");
    tab.family = val == "B" ? Family::B : Family::C;
  }
  {
    auto ls = expect_line("n");
    std::string key;
    ls >> key >> tab.n;
    if (key != "n") throw std::runtime_error("table file: missing n");
  }
  {
    auto ls = expect_line("match-count");
    std::string key, val;
    ls >> key >> val;
    if (key != "match-count") throw std::runtime_error("table file: missing match-count");
    match_out.solutions_found = Int(val);
  }
  int count = 0;
  {
    auto ls = expect_line("shapes");
    std::string key;
    ls >> key >> count;
    if (key != "shapes" || count <= 0) throw std::runtime_error("table file: missing shape count");
  }
  tab.shapes.reserve(count);
  for (int i = 0; i < count; ++i) {
    auto ls = expect_line("shape row");
    int idx;
    std::string shape_text, perm_text;
    ls >> idx >> shape_text >> perm_text;
    if (idx != i) throw std::runtime_error("table file: shape rows out of order");
    tab.shapes.push_back(Shape::parse(tab.n, shape_text));
    tab.reps.push_back(parse_perm(perm_text));
  }
  tab.pieri1.resize(count);
  tab.pieri2.resize(count);
  bool seen_flag = false;
  while (std::getline(is, line)) {
    if (line == "end") {
      if (!seen_flag) throw std::runtime_error("table file: missing products flag");
      match_out.rep_of_shape.clear();
      return tab;
    }
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "pieri") {
      int which, lam, mu;
      std::string coeff;
      if (!(ls >> which >> lam >> mu >> coeff) || lam < 0 || lam >= count || mu < 0 || mu >= count)
        throw std::runtime_error("table file: bad pieri record");
      (which == 1 ? tab.pieri1 : tab.pieri2)[lam].push_back(PieriEntry{mu, Int(coeff)});
    } else if (key == "products") {
      std::string val;
      ls >> val;
      tab.products_complete = val == "complete";
      seen_flag = true;
    } else if (key == "product") {
      int i, j, mu;
      std::string coeff;
      if (!(ls >> i >> j >> mu >> coeff)) throw std::runtime_error("table file: bad product record");
      tab.products[{i, j}].push_back(PieriEntry{mu, Int(coeff)});
    } else {
      throw std::runtime_error("table file: unexpected line '" + line + "'");
    }
  }
  throw std::runtime_error("table file: missing end marker");
}

std::string cache_file_path(const std::string& dir, Family f, int n) {
  std::ostringstream os;
  os << dir << '/' << family_letter(f) << n << '.' << version_hash() << ".tbl";
  return os.str();
}

namespace {

std::optional<StructureTable> try_load(const std::string& path, MatchResult& match_out) {
  std::ifstream is(path);
  if (!is) return std::nullopt;
  try {
    return load_table(is, match_out);
  } catch (const std::exception&) {
    return std::nullopt;  // stale or foreign file: rebuild
  }
}

}  // namespace

namespace {

void save_set(const std::string& dir, const TableSet& ts) {
  std::filesystem::create_directories(dir);
  for (Family f : {Family::B, Family::C}) {
    std::ofstream os(cache_file_path(dir, f, ts.n));
    if (os) save_table(os, table_of(ts, f), ts.match);
  }
}

}  // namespace

TableSet load_or_build_tables(int n, const std::optional<std::string>& cache_dir,
                              bool need_full_products) {
  if (cache_dir) {
    MatchResult mb, mc;
    auto b = try_load(cache_file_path(*cache_dir, Family::B, n), mb);
    auto c = try_load(cache_file_path(*cache_dir, Family::C, n), mc);
    if (b && c && b->n == n && c->n == n) {
      TableSet ts;
      ts.n = n;
      ts.B = std::move(*b);
      ts.C = std::move(*c);
      ts.match = mb;
      if (need_full_products && !(ts.B.products_complete && ts.C.products_complete)) {
        ensure_full_products(ts);
        save_set(*cache_dir, ts);
      }
      return ts;
    }
  }
  TableSet ts = build_table_set(n);
  if (need_full_products) ensure_full_products(ts);
  if (cache_dir) save_set(*cache_dir, ts);
  return ts;
}

}  // namespace ig2
