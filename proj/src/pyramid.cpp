#include "kwmod/pyramid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kwmod {

std::string box_str(BoxId b) {
  return (b.parity == Parity::even ? "b" : "") + std::to_string(b.index);
}

std::optional<BoxId> parse_box(const std::string& s) {
  if (s.empty()) return std::nullopt;
  Parity parity = Parity::odd;
  size_t start = 0;
  if (s[0] == 'b') {
    parity = Parity::even;
    start = 1;
  }
  if (start >= s.size()) return std::nullopt;
  int idx = 0;
  for (size_t i = start; i < s.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    idx = idx * 10 + (s[i] - '0');
  }
  if (idx < 1) return std::nullopt;
  return BoxId{parity, idx};
}

Pyramid::Pyramid(int m, int n, std::vector<PyramidRow> rows)
    : m_(m), n_(n), rows_(std::move(rows)) {
  for (size_t j = 0; j < rows_.size(); ++j) {
    if (rows_[j].length < 1)
      throw error(errc::shape_violation, "row " + std::to_string(j + 1) + " is empty");
    if (j + 1 < rows_.size()) {
      const auto& lo = rows_[j];
      const auto& hi = rows_[j + 1];
      if (!(lo.start_col <= hi.start_col && hi.start_col <= hi.last_col() &&
            hi.last_col() <= lo.last_col()))
        throw error(errc::shape_violation,
                    "rows " + std::to_string(j + 1) + "," + std::to_string(j + 2) +
                        " violate f_j <= f_{j+1} <= l_{j+1} <= l_j");
    }
  }
  for (const auto& row : rows_) {
    auto& pos = row.parity == Parity::even ? pos_even_ : pos_odd_;
    int rindex = static_cast<int>(&row - rows_.data()) + 1;
    for (int t = 0; t < row.length; ++t) pos.emplace_back(rindex, row.start_col + 2 * t);
  }
  if (static_cast<int>(pos_even_.size()) != m_ || static_cast<int>(pos_odd_.size()) != n_)
    throw error(errc::shape_violation, "box counts disagree with (m|n)");
}

void Pyramid::check_box(BoxId b) const {
  int limit = b.parity == Parity::even ? m_ : n_;
  if (b.index < 1 || b.index > limit)
    throw error(errc::unknown_box, "no box " + box_str(b));
}

int Pyramid::row_of(BoxId b) const {
  check_box(b);
  return (b.parity == Parity::even ? pos_even_ : pos_odd_)[b.index - 1].first;
}

int Pyramid::col_of(BoxId b) const {
  check_box(b);
  return (b.parity == Parity::even ? pos_even_ : pos_odd_)[b.index - 1].second;
}

std::vector<BoxId> Pyramid::boxes_in_row(int j) const {
  if (j < 1 || j > num_rows()) throw error(errc::unknown_box, "no row " + std::to_string(j));
  const auto& row = rows_[j - 1];
  const auto& pos = row.parity == Parity::even ? pos_even_ : pos_odd_;
  std::vector<BoxId> out;
  for (size_t i = 0; i < pos.size(); ++i)
    if (pos[i].first == j) out.push_back({row.parity, static_cast<int>(i) + 1});
  std::sort(out.begin(), out.end(), [&](BoxId a, BoxId b) { return col_of(a) < col_of(b); });
  return out;
}

std::vector<BoxId> Pyramid::boxes() const {
  std::vector<BoxId> out;
  for (int i = 1; i <= m_; ++i) out.push_back(even_box(i));
  for (int i = 1; i <= n_; ++i) out.push_back(odd_box(i));
  return out;
}

Pyramid dynkin_pyramid(const PartitionPair& pp) {
  MergedShape z = merge_shapes(pp.r, pp.q);
  std::vector<PyramidRow> rows;
  for (const auto& zr : z.rows) rows.push_back({1 - zr.length, zr.length, zr.parity});
  return Pyramid(pp.m(), pp.n(), std::move(rows));
}

Pyramid shift_pyramid(const Pyramid& p) {
  if (p.num_rows() == 0) return p;
  int head_parity = p.rows().front().length & 1;
  std::vector<PyramidRow> rows = p.rows();
  for (auto& row : rows)
    if ((row.length & 1) != head_parity) row.start_col -= 1;
  return Pyramid(p.m(), p.n(), std::move(rows));
}

Pyramid young_pyramid(const PartitionPair& pp) {
  MergedShape z = merge_shapes(pp.r, pp.q);
  std::vector<PyramidRow> rows;
  for (const auto& zr : z.rows) rows.push_back({0, zr.length, zr.parity});
  return Pyramid(pp.m(), pp.n(), std::move(rows));
}

int degree(const Pyramid& p, BoxId i, BoxId j) { return p.col_of(j) - p.col_of(i); }

bool is_even_pyramid(const Pyramid& p) {
  auto all = p.boxes();
  for (BoxId i : all)
    for (BoxId j : all)
      if (degree(p, i, j) % 2 != 0) return false;
  return true;
}

std::string render_ascii(const Pyramid& p, const RenderOptions& opts) {
  if (p.num_rows() == 0) return ".\n";
  int umin = 0, umax = 0;
  for (const auto& row : p.rows()) {
    umin = std::min(umin, row.start_col - 1);
    umax = std::max(umax, row.last_col() + 1);
  }
  const int width = 2 * (umax - umin) + 1;
  const int rows = p.num_rows();
  std::vector<std::string> canvas(2 * rows + 2, std::string(width, ' '));
  auto put = [&](int x, int y, char ch) {
    char& cur = canvas[y][x];
    if (ch == '+' || cur == ' ') cur = ch;
  };
  for (int j = 1; j <= rows; ++j) {
    int top = 2 * (rows - j);
    for (BoxId b : p.boxes_in_row(j)) {
      int c = p.col_of(b);
      int x0 = 2 * (c - 1 - umin);
      for (int y : {top, top + 2}) {
        put(x0, y, '+');
        put(x0 + 4, y, '+');
        for (int x = x0 + 1; x <= x0 + 3; ++x) put(x, y, '-');
      }
      put(x0, top + 1, '|');
      put(x0 + 4, top + 1, '|');
      if (opts.numbered) {
        std::string label = box_str(b);
        int off = static_cast<int>(3 - label.size()) / 2;
        for (size_t k = 0; k < label.size() && k < 3; ++k)
          canvas[top + 1][x0 + 1 + off + static_cast<int>(k)] = label[k];
      } else {
        canvas[top + 1][x0 + 2] = b.parity == Parity::even ? '+' : '-';
      }
    }
  }
  canvas[2 * rows + 1][2 * (0 - umin)] = '.';
  std::string out;
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Pyramid& p, const RenderOptions& opts) {
  const int unit = 20; // half a box edge in px
  int umin = 0, umax = 0;
  for (const auto& row : p.rows()) {
    umin = std::min(umin, row.start_col - 1);
    umax = std::max(umax, row.last_col() + 1);
  }
  int rows = std::max(p.num_rows(), 1);
  int w = (umax - umin) * unit;
  int h = rows * 2 * unit + unit;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 2 << "\" height=\""
      << h + 2 << "\" viewBox=\"-1 -1 " << w + 2 << " " << h + 2 << "\">\n";
  for (int j = 1; j <= p.num_rows(); ++j) {
    int y = (rows - j) * 2 * unit;
    for (BoxId b : p.boxes_in_row(j)) {
      int x = (p.col_of(b) - 1 - umin) * unit;
      svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << 2 * unit
          << "\" height=\"" << 2 * unit << "\" fill=\"none\" stroke=\"black\"/>\n";
      std::string label = opts.numbered ? box_str(b) : (b.parity == Parity::even ? "+" : "-");
      svg << "  <text x=\"" << x + unit << "\" y=\"" << y + unit
          << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-size=\"" << unit
          << "\">" << label << "</text>\n";
    }
  }
  svg << "  <circle cx=\"" << (0 - umin) * unit << "\" cy=\"" << rows * 2 * unit + unit / 2
      << "\" r=\"3\" fill=\"black\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

} // namespace kwmod
