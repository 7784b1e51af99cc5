#include "springer/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace springer {

namespace {

constexpr int kSpacing = 4;

// Height of an arc: one more than the tallest arc nested directly inside.
std::map<int, int> arc_heights(const Matching& m) {
  std::map<int, int> h;
  auto arcs = m.arcs();
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.right - a.left < b.right - b.left; });
  for (const auto& a : arcs) {
    int best = 0;
    for (const auto& [left, height] : h)
      if (left > a.left && m.partner(left) < a.right) best = std::max(best, height);
    h[a.left] = best + 1;
  }
  return h;
}

std::vector<std::string> ascii_block(const DottedMatching& d) {
  const auto& m = d.base();
  const int n = d.n();
  auto heights = arc_heights(m);
  int top = 1;
  for (const auto& [l, h] : heights) top = std::max(top, h);
  const int width = kSpacing * (n - 1) + 2;
  std::vector<std::string> rows(top, std::string(width, ' '));
  auto col = [](int v) { return kSpacing * (v - 1); };
  for (const auto& [left, h] : heights) {
    int right = m.partner(left);
    int row = top - h;
    for (int c = col(left); c <= col(right); ++c) rows[row][c] = '-';
    rows[row][col(left)] = rows[row][col(right)] = '.';
    for (int r = row + 1; r < top; ++r) rows[r][col(left)] = rows[r][col(right)] = '|';
    if (d.is_dotted(Arc{left, right})) rows[row][(col(left) + col(right)) / 2] = '*';
  }
  for (int r : m.rays())
    for (int row = 0; row < top; ++row) rows[row][col(r)] = '|';
  std::string labels(width, ' ');
  for (int v = 1; v <= n; ++v) {
    auto s = std::to_string(v);
    labels.replace(col(v), s.size(), s);
  }
  rows.push_back(labels);
  for (auto& r : rows) r.erase(r.find_last_not_of(' ') + 1);
  return rows;
}

std::string join_blocks(const std::vector<std::pair<std::string, std::vector<std::string>>>& parts) {
  std::size_t height = 0;
  for (const auto& [prefix, block] : parts) height = std::max(height, block.size());
  std::vector<std::string> out(height);
  for (const auto& [prefix, block] : parts) {
    std::size_t w = 0;
    for (const auto& r : block) w = std::max(w, r.size());
    for (std::size_t i = 0; i < height; ++i) {
      // Blocks share their bottom (label) row.
      std::size_t offset = height - block.size();
      std::string cell = i >= offset ? block[i - offset] : "";
      bool label_row = i + 1 == height;
      out[i] += (label_row ? prefix : std::string(prefix.size(), ' ')) + cell + std::string(w - cell.size(), ' ');
    }
  }
  std::string s;
  for (auto& r : out) {
    r.erase(r.find_last_not_of(' ') + 1);
    s += r + "\n";
  }
  return s;
}

std::string svg_group(const DottedMatching& d, int x0) {
  const auto& m = d.base();
  auto heights = arc_heights(m);
  std::ostringstream o;
  auto x = [x0](int v) { return x0 + 30 * v; };
  const int base = 120;
  for (const auto& [left, h] : heights) {
    int right = m.partner(left);
    int rx = 15 * (right - left), ry = 20 * h;
    o << "<path d=\"M " << x(left) << ' ' << base << " A " << rx << ' ' << ry << " 0 0 1 " << x(right) << ' ' << base
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    if (d.is_dotted(Arc{left, right}))
      o << "<circle cx=\"" << (x(left) + x(right)) / 2 << "\" cy=\"" << base - ry << "\" r=\"4\" fill=\"black\"/>\n";
  }
  for (int r : m.rays())
    o << "<line x1=\"" << x(r) << "\" y1=\"" << base << "\" x2=\"" << x(r) << "\" y2=\"" << 10
      << "\" stroke=\"black\"/>\n";
  for (int v = 1; v <= d.n(); ++v)
    o << "<text x=\"" << x(v) << "\" y=\"" << base + 16 << "\" font-size=\"11\" text-anchor=\"middle\">" << v << "</text>\n";
  return o.str();
}

std::string svg_document(int width, const std::string& body) {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"140\" viewBox=\"0 0 " << width
    << " 140\">\n"
    << body << "</svg>\n";
  return o.str();
}

}  // namespace

std::string render_ascii(const DottedMatching& m) { return join_blocks({{"", ascii_block(m)}}); }

std::string render_ascii(const HomClass& x) {
  if (x.is_zero()) return "0\n";
  std::vector<std::pair<std::string, std::vector<std::string>>> parts;
  bool first = true;
  for (const auto& [d, c] : x.terms()) {
    Rational a = abs(c);
    std::string prefix = first ? (c < 0 ? "-" : "") : (c < 0 ? "  -  " : "  +  ");
    if (a != 1) prefix += a.get_str() + "  ";
    parts.emplace_back(prefix, ascii_block(d));
    first = false;
  }
  return join_blocks(parts);
}

std::string render_svg(const DottedMatching& m) { return svg_document(30 * (m.n() + 1), svg_group(m, 0)); }

std::string render_svg(const HomClass& x) {
  std::string body;
  int x0 = 0;
  bool first = true;
  for (const auto& [d, c] : x.terms()) {
    Rational a = abs(c);
    std::string sign = first ? (c < 0 ? "-" : "") : (c < 0 ? "-" : "+");
    std::string label = sign + (a != 1 ? a.get_str() : "");
    if (!label.empty()) {
      body += "<text x=\"" + std::to_string(x0 + 15) + "\" y=\"110\" font-size=\"16\" text-anchor=\"middle\">" + label + "</text>\n";
      x0 += 20;
    }
    body += svg_group(d, x0);
    x0 += 30 * (d.n() + 1);
    first = false;
  }
  return svg_document(std::max(x0, 30), body);
}

}  // namespace springer
