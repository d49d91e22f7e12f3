#include "doctest.h"

#include "ldlab/matrix.hpp"

using ldlab::Matrix;

TEST_CASE("modular arithmetic") {
  CHECK(ldlab::is_prime(2));
  CHECK(ldlab::is_prime(7));
  CHECK_FALSE(ldlab::is_prime(1));
  CHECK_FALSE(ldlab::is_prime(9));
  for (std::uint32_t a = 1; a < 7; ++a) CHECK((a * ldlab::inverse_mod(a, 7)) % 7 == 1);
}

TEST_CASE("entries are reduced into [0, p)") {
  const Matrix m = Matrix::from_rows(3, {{-1, 4}, {3, 5}});
  CHECK(m(0, 0) == 2);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 0);
  CHECK(m(1, 1) == 2);
}

TEST_CASE("product, transpose and inverse over F_3") {
  const Matrix a = Matrix::from_rows(3, {{1, 2}, {0, 1}});
  const Matrix b = Matrix::from_rows(3, {{2, 0}, {1, 1}});
  // Hand-computed: [[1*2+2*1, 2], [1, 1]] mod 3.
  CHECK(a * b == Matrix::from_rows(3, {{1, 2}, {1, 1}}));
  CHECK(a.transpose() == Matrix::from_rows(3, {{1, 0}, {2, 1}}));
  const auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK((a * *inv).is_identity());
  CHECK(*inv == Matrix::from_rows(3, {{1, 1}, {0, 1}}));
  CHECK_FALSE(Matrix::from_rows(3, {{1, 2}, {2, 1}}).inverse().has_value());
  CHECK(Matrix::from_rows(3, {{1, 2}, {2, 1}}).rank() == 1);
}

TEST_CASE("kronecker product uses row-major index pairs") {
  const Matrix a = Matrix::from_rows(5, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows(5, {{0, 1}, {1, 2}});
  const Matrix k = ldlab::kron(a, b);
  REQUIRE(k.rows() == 4);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          CHECK(k(i1 * 2 + i2, j1 * 2 + j2) == (a(i1, j1) * b(i2, j2)) % 5);
}

TEST_CASE("swap matrix exchanges tensor factors") {
  const Matrix s = ldlab::swap_matrix(2, 2, 3);
  CHECK(s.rows() == 6);
  CHECK((ldlab::swap_matrix(2, 3, 2) * s).is_identity());
  const Matrix a = Matrix::from_rows(2, {{1, 1}, {0, 1}});
  const Matrix b = Matrix::from_rows(2, {{1, 0, 1}, {0, 1, 1}, {1, 0, 0}});
  CHECK(s * ldlab::kron(a, b) == ldlab::kron(b, a) * s);
}

TEST_CASE("identity pairing") {
  const Matrix v = ldlab::identity_pairing(3, 3);
  CHECK(v.rows() == 9);
  CHECK(v.cols() == 1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) CHECK(v(i * 3 + k, 0) == (i == k ? 1U : 0U));
}
