#include <doctest.h>

#include <algorithm>

#include "supergrading/linalg.hpp"

using namespace supergrading;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == ratio(-3, 2));
  CHECK(parse_rational("0.25") == ratio(1, 4));
  CHECK(parse_rational("-.5") == ratio(-1, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(to_string(ratio(4, 2)) == "2");
  CHECK(to_string(ratio(-1, 2)) == "-1/2");
  CHECK(is_half_integer(ratio(3, 2)));
  CHECK_FALSE(is_half_integer(ratio(1, 3)));
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix(3, 4)) == 0);
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  Matrix q(2, 2);
  q(0, 0) = ratio(1, 3);
  q(0, 1) = ratio(1, 2);
  q(1, 0) = ratio(2, 3);
  q(1, 1) = 1;
  CHECK(rank(q) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix::identity(2)).empty());
  auto z = kernel_basis(Matrix(2, 2));
  REQUIRE(z.size() == 2);
  CHECK(z[0] == Vector{1, 0});
  CHECK(z[1] == Vector{0, 1});
  auto k = kernel_basis(Matrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{-1, 1});
  Matrix m{{1, 2, 3}, {2, 4, 7}};
  for (const auto& v : kernel_basis(m)) {
    auto img = m.apply(v);
    CHECK(std::all_of(img.begin(), img.end(), [](const Rational& x) { return x == 0; }));
  }
}

TEST_CASE("solve") {
  auto x = solve(Matrix::identity(2), Vector{3, 5});
  REQUIRE(x);
  CHECK(*x == Vector{3, 5});
  auto y = solve(Matrix{{1, 1}}, Vector{2});
  REQUIRE(y);
  CHECK((*y)[0] + (*y)[1] == 2);
  CHECK_FALSE(solve(Matrix{{1}, {1}}, Vector{0, 1}));
}

TEST_CASE("matrix arithmetic") {
  Matrix a{{1, 2}, {3, 4}};
  Matrix b{{0, 1}, {1, 0}};
  CHECK(a * b == Matrix{{2, 1}, {4, 3}});
  CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
  CHECK(Matrix::diagonal(Vector{1, 2}).is_diagonal());
  const std::vector<std::size_t> rows{1};
  const std::vector<std::size_t> cols{0, 1};
  CHECK(submatrix(a, rows, cols) == Matrix{{3, 4}});
}
