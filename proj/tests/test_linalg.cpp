#include <doctest.h>

#include "pgma/error.hpp"
#include "pgma/linalg.hpp"
#include "support.hpp"

using namespace pgma;
using testing::Q;
using testing::vec;

TEST_SUITE("linalg") {

TEST_CASE("scalars are exact over Q and F_p") {
  Scalar a = Q.from_fraction(2, 3);
  CHECK((a + (-a)).is_zero());
  CHECK((a * a.inverse()).is_one());
  Field f7 = Field::prime(7);
  Scalar b = f7.from_fraction(1, 3);  // 3^-1 = 5 mod 7
  CHECK(b == f7.from_int(5));
  CHECK(f7.from_int(-1) == f7.from_int(6));
  CHECK_THROWS_AS(Field::prime(0), DomainError);
  CHECK_THROWS_AS(Field::prime(9), DomainError);
  CHECK_THROWS_AS(Q.zero().inverse(), DomainError);
  CHECK_THROWS_AS((void)(Q.one() == f7.one()), FieldMismatch);
}

TEST_CASE("row_space_basis") {
  std::vector<Vec> full{vec({1, 0}), vec({0, 1}), vec({1, 1})};
  CHECK(row_space_basis(full) == std::vector<Vec>{vec({1, 0}), vec({0, 1})});
  CHECK(row_space_basis(std::vector<Vec>{}).empty());
  // hand reduction: (2,4) ~ (1,2), and (1,2) is already reduced
  CHECK(row_space_basis(std::vector<Vec>{vec({2, 4}), vec({1, 2})}) == std::vector<Vec>{vec({1, 2})});
  Field f5 = Field::prime(5);
  std::vector<Vec> mixed{vec({1, 0}), vec({0, 1}, f5)};
  CHECK_THROWS_AS(row_space_basis(mixed), FieldMismatch);
}

TEST_CASE("solve_linear") {
  CHECK(*solve_linear(Matrix::identity(Q, 2), vec({3, 5})) == vec({3, 5}));
  CHECK(*solve_linear(testing::mat(1, 2, {1, 1}), vec({2})) == vec({2, 0}));
  CHECK_FALSE(solve_linear(testing::mat(2, 1, {1, 1}), vec({0, 1})).has_value());
  CHECK_THROWS_AS(solve_linear(Matrix::identity(Q, 2), vec({1})), ShapeError);
}

TEST_CASE("span properties on random sets") {
  auto g = testing::rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> cnt(0, 6);
    std::vector<Vec> vs;
    int k = cnt(g);
    for (int i = 0; i < k; ++i) vs.push_back(testing::random_vec(g, 4, -2, 2));
    auto basis = row_space_basis(vs);
    CHECK(row_space_basis(basis) == basis);  // idempotent
    if (basis.empty()) continue;
    Matrix bt = Matrix::from_columns(Q, 4, basis);
    for (const auto& v : vs) {
      auto x = solve_linear(bt, v);
      REQUIRE(x.has_value());
      CHECK(bt.apply(*x) == v);
    }
    CHECK(rank(Matrix::from_rows(Q, 4, vs)) == basis.size());
  }
}

TEST_CASE("subspace intersection and sum respect dimension formula") {
  auto g = testing::rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vec> a{testing::random_vec(g, 5, -1, 1), testing::random_vec(g, 5, -1, 1)};
    std::vector<Vec> b{testing::random_vec(g, 5, -1, 1), testing::random_vec(g, 5, -1, 1), testing::random_vec(g, 5, -1, 1)};
    Subspace U = Subspace::span(Q, 5, a), V = Subspace::span(Q, 5, b);
    Subspace I = U.intersect(V), S = U.sum(V);
    CHECK(I.dim() + S.dim() == U.dim() + V.dim());
    CHECK(U.contains(I));
    CHECK(V.contains(I));
    CHECK(S.contains(U));
    for (const auto& v : U.basis()) CHECK(U.from_coordinates(*U.coordinates(v)) == v);
  }
}

TEST_CASE("inverse and null space") {
  Matrix m = testing::mat(2, 2, {1, 2, 3, 4});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((m * *inv).is_identity());
  CHECK_FALSE(inverse(testing::mat(2, 2, {1, 2, 2, 4})).has_value());
  auto ns = null_space(testing::mat(1, 3, {1, 1, 1}));
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(is_zero(testing::mat(1, 3, {1, 1, 1}).apply(v)));
}

}
