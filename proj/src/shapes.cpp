// shapes.cpp
#include "ig2/shapes.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ig2 {

namespace {
constexpr const char* kEmptySymbol = "\xE2\x88\x85";  // U+2205
}

int Partition::weight() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool Partition::is_strict() const {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) return false;
    if (k + 1 < parts.size() && parts[k] <= parts[k + 1]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (parts.empty()) return kEmptySymbol;
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) os << ',';
    os << parts[k];
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string t = text;
  // accepted spellings of empty: "", the empty symbol, "0"
  if (t.empty() || t == kEmptySymbol || t == "0") return Partition{};
  Partition p;
  std::istringstream is(t);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) throw std::invalid_argument("Partition::parse: empty part in '" + text + "'");
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
    p.parts.push_back(v);
  }
  if (!p.is_strict())
    throw std::invalid_argument("Partition::parse: parts must be strictly decreasing positives: '" + text + "'");
  return p;
}

namespace {

std::set<std::pair<int, int>> diagram_boxes(const Partition& p) {
  std::set<std::pair<int, int>> out;
  for (int r = 0; r < p.len(); ++r)
    for (int c = 0; c < p.parts[r]; ++c) out.insert({r, c});
  return out;
}

}  // namespace

int SkewDiagram::component_count() const {
  std::map<std::pair<int, int>, int> comp;
  int count = 0;
  for (const auto& b : boxes) {
    if (comp.contains(b)) continue;
    ++count;
    std::vector<std::pair<int, int>> stack{b};
    comp[b] = count;
    while (!stack.empty()) {
      auto [r, c] = stack.back();
      stack.pop_back();
      const std::pair<int, int> nb[4] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
      for (const auto& x : nb) {
        if (boxes.contains(x) && !comp.contains(x)) {
          comp[x] = count;
          stack.push_back(x);
        }
      }
    }
  }
  return count;
}

SkewDiagram skew(const Partition& mu, const Partition& la) {
  auto big = diagram_boxes(mu);
  auto small = diagram_boxes(la);
  SkewDiagram d;
  for (const auto& b : big) {
    if (!small.contains(b)) d.boxes.insert(b);
  }
  return d;
}

std::vector<std::string> Shape::violations() const {
  std::vector<std::string> out;
  if (n < 3) out.push_back("rank must be at least 3");
  if (!top.is_strict()) out.push_back("top partition not strictly decreasing");
  if (!bottom.is_strict()) out.push_back("bottom partition not strictly decreasing");
  if (!top.parts.empty() && top.parts.front() > n) out.push_back("top part exceeds n");
  if (!bottom.parts.empty() && bottom.parts.front() > n) out.push_back("bottom part exceeds n");
  if (top.len() > n - 2) out.push_back("top longer than n-2");
  if (bottom.len() > 2) out.push_back("bottom longer than 2");
  // top_{n-2} > l(bottom), a missing part reading as 0: forces l(top) = n-2
  // exactly and the staircase containment.
  int last = top.len() == n - 2 && n >= 3 ? top.parts.back() : 0;
  if (top.len() < n - 2 || last <= bottom.len())
    out.push_back("top_{n-2} must exceed bottom length");
  return out;
}

int Shape::weight() const {
  return top.weight() + bottom.weight() - (n - 1) * (n - 2) / 2;
}

std::string Shape::to_string() const { return top.to_string() + "//" + bottom.to_string(); }

Shape Shape::parse(int n, const std::string& text) {
  auto pos = text.find("//");
  if (pos == std::string::npos) throw std::invalid_argument("Shape::parse: missing '//' in '" + text + "'");
  return Shape(n, Partition::parse(text.substr(0, pos)), Partition::parse(text.substr(pos + 2)));
}

int shape_weight(const Shape& s) {
  auto bad = s.violations();
  if (!bad.empty()) throw std::invalid_argument("invalid shape " + s.to_string() + ": " + bad.front());
  return s.weight();
}

bool shape_canonical_less(const Shape& a, const Shape& b) {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  if (a.top != b.top) return a.top < b.top;
  return a.bottom < b.bottom;
}

std::vector<Shape> enumerate_shapes(int n, std::optional<int> weight) {
  if (n < 3) throw std::invalid_argument("enumerate_shapes: rank must be at least 3");
  std::vector<Shape> out;
  auto consider = [&](const std::vector<int>& topv, const std::vector<int>& botv) {
    Shape s(n, Partition(topv), Partition(botv));
    if (!s.is_valid()) return;
    if (weight && s.weight() != *weight) return;
    out.push_back(std::move(s));
  };
  // a valid top has exactly n-2 strictly decreasing parts in 1..n, i.e. the
  // complement of a 2-subset of {1..n}; bottoms have at most two parts
  for (int skip1 = n; skip1 >= 2; --skip1) {
    for (int skip2 = skip1 - 1; skip2 >= 1; --skip2) {
      std::vector<int> topv;
      for (int p = n; p >= 1; --p)
        if (p != skip1 && p != skip2) topv.push_back(p);
      consider(topv, {});
      for (int b1 = 1; b1 <= n; ++b1) {
        consider(topv, {b1});
        for (int b2 = 1; b2 < b1; ++b2) consider(topv, {b1, b2});
      }
    }
  }
  std::sort(out.begin(), out.end(), shape_canonical_less);
  return out;
}

Shape special_shape(int n, int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("special_shape: i must be 0, 1 or 2");
  if (n < 3) throw std::invalid_argument("special_shape: rank must be at least 3");
  std::vector<int> parts{n - 2 + i};
  for (int p = n - 3; p >= 1; --p) parts.push_back(p);
  return Shape(n, Partition(std::move(parts)), Partition{});
}

int shape_max_weight(int n) { return 4 * n - 5; }

}  // namespace ig2
