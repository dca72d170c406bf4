#include "supergrading/pyramids.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "supergrading/errors.hpp"

namespace supergrading {

int Pyramid::even_boxes() const {
  int total = 0;
  for (const auto& row : rows) {
    if (row.parity == Parity::even) total += row.length;
  }
  return total;
}

int Pyramid::odd_boxes() const {
  int total = 0;
  for (const auto& row : rows) {
    if (row.parity == Parity::odd) total += row.length;
  }
  return total;
}

bool Pyramid::is_valid() const {
  if (rows.empty()) return true;
  if (rows[0].first != -rows[0].last()) return false;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].length <= 0) return false;
    if (j == 0) continue;
    const auto& below = rows[j - 1];
    const auto& row = rows[j];
    if (row.length > below.length) return false;
    if (row.first < below.first || row.last() > below.last()) return false;
  }
  return true;
}

std::vector<Pyramid> enumerate_pyr(const SuperPartition& sp) {
  const auto parts = psi_merge(sp);
  std::vector<Pyramid> out;
  if (parts.empty()) {
    out.emplace_back();
    return out;
  }
  Pyramid current;
  current.rows.push_back({parts[0].length, parts[0].parity, -(parts[0].length - 1)});
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == parts.size()) {
      out.push_back(current);
      return;
    }
    const auto& below = current.rows.back();
    const int hi = below.last() - 2 * (parts[j].length - 1);
    for (int f = below.first; f <= hi; ++f) {
      current.rows.push_back({parts[j].length, parts[j].parity, f});
      rec(j + 1);
      current.rows.pop_back();
    }
  };
  rec(1);
  return out;
}

Pyramid dynkin_pyramid(const SuperPartition& sp) {
  Pyramid pyr;
  for (const auto& part : psi_merge(sp)) pyr.rows.push_back({part.length, part.parity, -(part.length - 1)});
  return pyr;
}

Pyramid single_parity_pyramid(const Partition& lengths, std::span<const int> firsts, Parity parity) {
  if (lengths.size() != firsts.size()) throw LengthMismatch("one first coordinate per row is required");
  Pyramid pyr;
  for (std::size_t j = 0; j < lengths.size(); ++j) pyr.rows.push_back({lengths[j], parity, firsts[j]});
  return pyr;
}

std::vector<std::vector<int>> pyramid_labels(const Pyramid& pyr) {
  int next_even = 1;
  int next_odd = pyr.even_boxes() + 1;
  std::vector<std::vector<int>> labels;
  for (const auto& row : pyr.rows) {
    auto& out = labels.emplace_back();
    for (int b = 0; b < row.length; ++b) out.push_back(row.parity == Parity::even ? next_even++ : next_odd++);
  }
  return labels;
}

ElementPair realize_pyramid(const Pyramid& pyr, RealizationPtr r) {
  if (r->kind() != AlgebraKind::gl || r->m() != pyr.even_boxes() || r->n() != pyr.odd_boxes()) {
    throw SizeMismatch("pyramid size does not match " + r->name());
  }
  const auto labels = pyramid_labels(pyr);
  Matrix e(r->size(), r->size());
  Vector h(r->size());
  for (std::size_t j = 0; j < pyr.rows.size(); ++j) {
    const auto& row = pyr.rows[j];
    for (int b = 0; b < row.length; ++b) {
      const int label = labels[j][static_cast<std::size_t>(b)];
      h[r->index_of(label)] = row.first + 2 * b;
      if (b + 1 < row.length) e(r->index_of(labels[j][static_cast<std::size_t>(b) + 1]), r->index_of(label)) = 1;
    }
  }
  return {AlgebraElement{r, std::move(e)}, AlgebraElement{r, Matrix::diagonal(h)}};
}

const OspBox* OspPyramid::box_at(int x, int y) const {
  for (const auto& b : boxes) {
    if (b.x == x && b.y == y) return &b;
  }
  return nullptr;
}

OspPyramid dynkin_pyramid_osp(const SuperPartition& sp) {
  require_orthosymplectic(sp);
  OspPyramid pyr;
  pyr.partition = sp;
  pyr.m = sp.m();
  pyr.n = sp.n() / 2;

  std::map<int, int, std::greater<>> rem_p;
  std::map<int, int, std::greater<>> rem_q;
  for (int x : sp.p) ++rem_p[x];
  for (int x : sp.q) ++rem_q[x];

  auto span_columns = [](int lo, int hi) {
    std::vector<int> cols;
    for (int x = lo; x <= hi; x += 2) cols.push_back(x);
    return cols;
  };

  const bool m_odd = pyr.m % 2 == 1;
  if (m_odd) {
    int r0 = 0;
    for (auto [part, count] : rem_p) {
      if (count % 2 == 1) {
        r0 = part;
        break;
      }
    }
    --rem_p[r0];
    pyr.rows.push_back({OspRowKind::zeroth, Parity::even, 0, r0, 0, span_columns(1 - r0, r0 - 1)});
  }

  // Remaining odd-multiplicity parts of p pair up as c_1 > d_1 > c_2 > d_2 > ...
  std::vector<int> odd_mult;
  for (auto [part, count] : rem_p) {
    if (count % 2 == 1) odd_mult.push_back(part);
  }
  std::map<int, int> partner;
  for (std::size_t i = 0; i + 1 < odd_mult.size(); i += 2) partner[odd_mult[i]] = odd_mult[i + 1];

  std::map<int, bool, std::greater<>> distinct;
  for (auto [part, count] : rem_p) distinct[part] = true;
  for (auto [part, count] : rem_q) distinct[part] = true;

  int y = m_odd ? 2 : 1;
  for (auto [r, unused] : distinct) {
    int mj = rem_p.count(r) ? rem_p[r] : 0;
    const int nj = rem_q.count(r) ? rem_q[r] : 0;
    if (mj % 2 == 1) {
      const int d = partner.at(r);
      pyr.rows.push_back({OspRowKind::even_skew, Parity::even, y, r, d, span_columns(1 - d, r - 1)});
      y += 2;
      --rem_p[d];
      --mj;
    }
    for (int c = 0; c < mj / 2; ++c) {
      pyr.rows.push_back({OspRowKind::even, Parity::even, y, r, 0, span_columns(1 - r, r - 1)});
      y += 2;
    }
    if (nj % 2 == 1) {
      pyr.rows.push_back({OspRowKind::odd_skew, Parity::odd, y, r, 0, span_columns(1, r - 1)});
      y += 2;
    }
    for (int c = 0; c < nj / 2; ++c) {
      pyr.rows.push_back({OspRowKind::odd, Parity::odd, y, r, 0, span_columns(1 - r, r - 1)});
      y += 2;
    }
  }

  // Labels: upper half (and the right half of the zeroth row), rows bottom-up,
  // left to right; mirrors get the negative label.
  const int k = pyr.m / 2;
  int next_even = 1;
  int next_odd = k + 1;
  std::vector<OspBox> upper;
  for (const auto& row : pyr.rows) {
    for (int x : row.columns) {
      if (row.kind == OspRowKind::zeroth && x <= 0) continue;
      const int label = row.parity == Parity::even ? next_even++ : next_odd++;
      upper.push_back({x, row.y, row.parity, label});
    }
  }
  if (m_odd) pyr.boxes.push_back({0, 0, Parity::even, 0});
  for (const auto& b : upper) {
    pyr.boxes.push_back(b);
    pyr.boxes.push_back({-b.x, -b.y, b.parity, -b.label});
  }
  return pyr;
}

namespace {

// Coefficient of E_{i,j} in the even basis element that contains it.
Rational chevalley_coefficient(const Realization& r, int i, int j) {
  const std::size_t a = r.index_of(i);
  const std::size_t b = r.index_of(j);
  for (const auto& basis : r.basis()) {
    if (basis.parity == Parity::even && basis.matrix(a, b) != 0) return basis.matrix(a, b);
  }
  throw MembershipFailure("no basis element carries E_{" + std::to_string(i) + "," + std::to_string(j) + "}");
}

}  // namespace

ElementPair realize_osp_pyramid(const OspPyramid& pyr, RealizationPtr r) {
  if (r->kind() != AlgebraKind::osp || r->m() != pyr.m || r->n() != pyr.n) {
    throw SizeMismatch("pyramid size does not match " + r->name());
  }
  // (from, to): e v_from = sigma v_to
  std::vector<std::pair<int, int>> edges;
  auto label = [&](int x, int y) {
    const OspBox* b = pyr.box_at(x, y);
    if (!b) throw std::logic_error("missing pyramid box");
    return b->label;
  };
  auto chain = [&](const std::vector<int>& cols, int y, bool mirror) {
    for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
      if (mirror) {
        edges.emplace_back(label(-cols[c + 1], -y), label(-cols[c], -y));
      } else {
        edges.emplace_back(label(cols[c], y), label(cols[c + 1], y));
      }
    }
  };
  for (const auto& row : pyr.rows) {
    chain(row.columns, row.y, false);
    if (row.kind == OspRowKind::zeroth) continue;
    chain(row.columns, row.y, true);
    if (row.kind == OspRowKind::even_skew) {
      edges.emplace_back(label(0, -row.y), label(2, row.y));
      edges.emplace_back(label(-2, -row.y), label(0, row.y));
    } else if (row.kind == OspRowKind::odd_skew) {
      edges.emplace_back(label(-1, -row.y), label(1, row.y));
    }
  }

  Matrix e(r->size(), r->size());
  for (auto [from, to] : edges) e(r->index_of(to), r->index_of(from)) = chevalley_coefficient(*r, to, from);
  if (!is_member_osp(*r, e, Parity::even)) throw MembershipFailure("pyramid nilpotent is not in " + r->name());

  Vector h(r->size());
  for (const auto& b : pyr.boxes) h[r->index_of(b.label)] = b.x;
  return {AlgebraElement{r, std::move(e)}, AlgebraElement{r, Matrix::diagonal(h)}};
}

AlgebraElement shift_matrix(RealizationPtr r, const OspPyramid& pyr, std::span<const Rational> s,
                            std::span<const Rational> t) {
  const ShiftParts shifts = cp_dq(pyr.partition);
  if (s.size() != shifts.c.size() || t.size() != shifts.d.size()) {
    throw LengthMismatch("shift vectors must have lengths c(p) and d(q)");
  }
  Vector diag(r->size());
  auto fill = [&](OspRowKind kind, int part, const Rational& value) {
    for (const auto& row : pyr.rows) {
      if (row.kind != kind || row.part != part) continue;
      for (int x : row.columns) {
        diag[r->index_of(pyr.box_at(x, row.y)->label)] = value;
        diag[r->index_of(pyr.box_at(-x, -row.y)->label)] = -value;
      }
    }
  };
  for (std::size_t i = 0; i < s.size(); ++i) fill(OspRowKind::even, shifts.c[i], s[i]);
  for (std::size_t j = 0; j < t.size(); ++j) fill(OspRowKind::odd, shifts.d[j], t[j]);
  return {std::move(r), Matrix::diagonal(diag)};
}

namespace {

struct Cell {
  int x;
  int y;
  Parity parity;
};

std::string render_cells(const std::vector<Cell>& cells) {
  if (cells.empty()) return "(empty)\n";
  int min_x = cells[0].x;
  int max_x = cells[0].x;
  int min_y = cells[0].y;
  int max_y = cells[0].y;
  for (const auto& c : cells) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  min_x = std::min(min_x, 0);
  max_x = std::max(max_x, 0);
  const auto col_of = [&](int x) { return static_cast<std::size_t>(2 * (x - min_x)); };
  const std::size_t width = col_of(max_x) + 3;

  std::ostringstream out;
  for (int y = max_y; y >= min_y; --y) {
    std::string line(width, ' ');
    bool any = false;
    for (const auto& c : cells) {
      if (c.y != y) continue;
      const std::size_t at = col_of(c.x);
      line[at] = '[';
      line[at + 1] = parity_sign(c.parity);
      line[at + 2] = ']';
      any = true;
    }
    if (!any) continue;
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
  std::string axis(col_of(0) + 2, ' ');
  axis[col_of(0) + 1] = '^';
  out << axis << '\n';
  return out.str();
}

constexpr int svg_unit = 20;

std::string svg_cells(const std::vector<Cell>& cells) {
  int min_x = 0;
  int max_x = 0;
  int min_y = 0;
  int max_y = 0;
  for (const auto& c : cells) {
    min_x = std::min(min_x, c.x - 1);
    max_x = std::max(max_x, c.x + 1);
    min_y = std::min(min_y, c.y - 1);
    max_y = std::max(max_y, c.y + 1);
  }
  std::ostringstream out;
  const int w = (max_x - min_x) * svg_unit;
  const int h = (max_y - min_y) * svg_unit;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  for (const auto& c : cells) {
    const int px = (c.x - 1 - min_x) * svg_unit;
    const int py = (max_y - (c.y + 1)) * svg_unit;
    out << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << 2 * svg_unit << "\" height=\""
        << 2 * svg_unit << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << px + svg_unit << "\" y=\"" << py + svg_unit + 5
        << "\" text-anchor=\"middle\" font-family=\"monospace\">" << parity_sign(c.parity) << "</text>\n";
  }
  const int ox = (0 - min_x) * svg_unit;
  const int oy = (max_y - 0) * svg_unit;
  out << "  <circle cx=\"" << ox << "\" cy=\"" << oy << "\" r=\"2\" fill=\"red\"/>\n";
  out << "</svg>\n";
  return out.str();
}

// gl rows sit between heights 2j and 2j+2; the box centre is at 2j+1.
std::vector<Cell> cells_of(const Pyramid& pyr) {
  std::vector<Cell> cells;
  for (std::size_t j = 0; j < pyr.rows.size(); ++j) {
    const auto& row = pyr.rows[j];
    for (int b = 0; b < row.length; ++b) {
      cells.push_back({row.first + 2 * b, 2 * static_cast<int>(j) + 1, row.parity});
    }
  }
  return cells;
}

std::vector<Cell> cells_of(const OspPyramid& pyr) {
  std::vector<Cell> cells;
  for (const auto& b : pyr.boxes) cells.push_back({b.x, b.y, b.parity});
  return cells;
}

}  // namespace

std::string render(const Pyramid& pyr) { return render_cells(cells_of(pyr)); }

std::string render(const OspPyramid& pyr, bool show_labels) {
  std::string text = render_cells(cells_of(pyr));
  if (!show_labels) return text;
  std::ostringstream out;
  out << text;
  auto sorted = pyr.boxes;
  std::sort(sorted.begin(), sorted.end(), [](const OspBox& a, const OspBox& b) {
    return a.y != b.y ? a.y > b.y : a.x < b.x;
  });
  for (const auto& b : sorted) {
    out << "v_" << b.label << " at (" << b.x << ',' << b.y << ") " << parity_sign(b.parity) << '\n';
  }
  return out.str();
}

std::string render_svg(const Pyramid& pyr) { return svg_cells(cells_of(pyr)); }
std::string render_svg(const OspPyramid& pyr) { return svg_cells(cells_of(pyr)); }

}  // namespace supergrading
