#pragma once

#include <span>
#include <string>
#include <vector>

#include "supergrading/partitions.hpp"
#include "supergrading/superalgebra.hpp"

namespace supergrading {

struct PyramidRow {
  int length;
  Parity parity;
  int first;  // x-coordinate of the leftmost box
  int last() const { return first + 2 * (length - 1); }
  friend bool operator==(const PyramidRow&, const PyramidRow&) = default;
  friend auto operator<=>(const PyramidRow&, const PyramidRow&) = default;
};

// Rows bottom-up; boxes of a row sit at first, first+2, ..., last.
struct Pyramid {
  std::vector<PyramidRow> rows;

  int even_boxes() const;
  int odd_boxes() const;
  bool is_valid() const;
  friend bool operator==(const Pyramid&, const Pyramid&) = default;
};

std::vector<Pyramid> enumerate_pyr(const SuperPartition& sp);
// Every row centred.
Pyramid dynkin_pyramid(const SuperPartition& sp);
// Rows of the given lengths and first coordinates, all of one parity.
Pyramid single_parity_pyramid(const Partition& lengths, std::span<const int> firsts, Parity parity);

struct ElementPair {
  AlgebraElement e;
  AlgebraElement h;
};

// Labels: even boxes get 1..m and odd boxes m+1..m+n, rows bottom-up and
// left to right within a row. e moves each box to its right neighbour.
ElementPair realize_pyramid(const Pyramid& pyr, RealizationPtr r);
// Box labels of a gl pyramid, row by row.
std::vector<std::vector<int>> pyramid_labels(const Pyramid& pyr);

struct OspBox {
  int x;
  int y;
  Parity parity;
  int label;
  friend bool operator==(const OspBox&, const OspBox&) = default;
};

enum class OspRowKind { zeroth, even_skew, even, odd_skew, odd };

struct OspRow {
  OspRowKind kind;
  Parity parity;
  int y;
  int part;        // r_j; for an even skew-row the larger part c
  int other_part;  // d for an even skew-row, 0 otherwise
  std::vector<int> columns;
};

struct OspPyramid {
  SuperPartition partition;
  int m = 0;  // dim V0
  int n = 0;  // half of dim V1
  std::vector<OspBox> boxes;
  std::vector<OspRow> rows;  // zeroth row and upper half, bottom-up

  const OspBox* box_at(int x, int y) const;
};

OspPyramid dynkin_pyramid_osp(const SuperPartition& sp);
ElementPair realize_osp_pyramid(const OspPyramid& pyr, RealizationPtr r);

// Diagonal element with s_i on the upper row of the i-th part of C(p), t_j on
// the upper row of the j-th part of D(q), and the negatives on the mirrors.
AlgebraElement shift_matrix(RealizationPtr r, const OspPyramid& pyr, std::span<const Rational> s,
                            std::span<const Rational> t);

std::string render(const Pyramid& pyr);
std::string render(const OspPyramid& pyr, bool show_labels = false);
std::string render_svg(const Pyramid& pyr);
std::string render_svg(const OspPyramid& pyr);

}  // namespace supergrading
