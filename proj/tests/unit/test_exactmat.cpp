#include "doctest.h"
#include "fixtures.hpp"

using namespace taucrest;

TEST_CASE("field construction") {
  CHECK(Field::prime(7).characteristic() == 7);
  CHECK(Field::rationals().is_rational());
  CHECK_THROWS(Field::prime(4));
  CHECK_THROWS(Field::prime(1));
  CHECK_THROWS(Field::prime(1ULL << 31));
  CHECK(Field::prime(2147483647).is_prime());
}

TEST_CASE("scalar arithmetic mod p and over Q") {
  const Field f5 = Field::prime(5);
  CHECK((Scalar(f5, 3L) * Scalar(f5, 4L)).residue() == 2);
  CHECK((Scalar(f5, 3L).inverse()).residue() == 2);
  CHECK(Scalar(f5, -1L).residue() == 4);
  const Field q = Field::rationals();
  CHECK((Scalar(q, mpq_class(1, 3)) + Scalar(q, mpq_class(1, 6))).rational() == mpq_class(1, 2));
  CHECK_THROWS_AS(Scalar(f5, 1L) + Scalar(q, 1L), FieldMismatchError);
  CHECK_THROWS(Scalar(q, 0L).inverse());
}

TEST_CASE("rank depends on the field") {
  const std::vector<std::vector<long>> rows{{1, 2}, {3, 4}};
  CHECK(rank(Mat::from_rows(Field::rationals(), rows)) == 2);
  CHECK(rank(Mat::from_rows(Field::prime(2), rows)) == 1);
  CHECK(rank(Mat::from_rows(Field::prime(3), rows)) == 2);
}

TEST_CASE("inverse, solve, kernel") {
  const Field f3 = Field::prime(3);
  const Mat a = Mat::from_rows(f3, {{1, 1}, {0, 1}});
  CHECK(*inverse(a) == Mat::from_rows(f3, {{1, 2}, {0, 1}}));
  CHECK_FALSE(inverse(Mat::from_rows(f3, {{1, 2}, {2, 1}})).has_value());

  const Field q = Field::rationals();
  const Mat m = Mat::from_rows(q, {{1, 2, 3}, {2, 4, 6}});
  const Mat k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  CHECK(solve(m, Mat::from_rows(q, {{1}, {2}})).has_value());
  CHECK_FALSE(solve(m, Mat::from_rows(q, {{1}, {1}})).has_value());
  CHECK_THROWS_AS(m * m, DimensionError);
}

TEST_CASE("kron and flatten") {
  const Field q = Field::rationals();
  const Mat a = Mat::from_rows(q, {{1, 2}, {3, 4}});
  const Mat i = Mat::identity(q, 2);
  const Mat k = kron(a, i);
  CHECK(k.rows() == 4);
  CHECK(k.at(2, 0) == Scalar(q, 3L));
  CHECK(k.at(3, 1) == Scalar(q, 3L));
  CHECK(k.at(2, 1).is_zero());
  CHECK(unflatten(flatten(a), 2, 2) == a);
  CHECK(flatten(a).at(1, 0) == Scalar(q, 2L));  // row-major
}

TEST_CASE("quotient maps and inverses (property)") {
  std::mt19937_64 rng(7);
  for (auto p : {2u, 5u, 101u}) {
    const Field f = Field::prime(p);
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 1 + rng() % 6, k = rng() % 5;
      Mat s(f, n, k);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) s.set(i, j, static_cast<long>(rng() % p));
      const Mat qm = quotient_map(s, n);
      CHECK(qm.rows() == n - rank(s));
      CHECK((qm * s).is_zero());
      CHECK((qm * right_inverse(qm)).is_identity());
      const Mat g = fx::random_invertible(f, n, rng);
      CHECK((g * *inverse(g)).is_identity());
      CHECK(rank(s) + kernel_basis(s).cols() == k);
    }
  }
}
