#include <doctest.h>

#include <random>

#include "sigmatau/linalg.hpp"

using namespace sigmatau;

namespace {

Mat random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      // small rationals, including zeros and negative entries
      std::int64_t num = static_cast<std::int64_t>(rng() % 11) - 5;
      std::int64_t den = static_cast<std::int64_t>(rng() % 4) + 1;
      m(i, j) = Rational(num, den);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rref produces a canonical reduced form") {
  Mat m(3, 3);
  m << Rational(0), Rational(2), Rational(4),
       Rational(1), Rational(1), Rational(1),
       Rational(1), Rational(3), Rational(5);
  std::vector<Index> pivots;
  Mat r = rref(m, &pivots);
  REQUIRE(r.rows() == 2);
  CHECK(pivots == std::vector<Index>{0, 1});
  // pivot entries are 1 and pivot columns are otherwise clear
  CHECK(r(0, 0) == 1);
  CHECK(r(1, 1) == 1);
  CHECK(r(0, 1) == 0);
  // reduction is idempotent
  CHECK(rref(r) == r);
}

TEST_CASE("rank-nullity on random rational matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Index rows = 1 + static_cast<Index>(rng() % 5);
    Index cols = 1 + static_cast<Index>(rng() % 5);
    Mat m = random_matrix(rng, rows, cols);
    Mat k = kernel_basis(m);
    CHECK(rank_of(m) + k.rows() == cols);
    for (Index r = 0; r < k.rows(); ++r) {
      CHECK(Vec(m * k.row(r).transpose()) == Vec(Vec::Zero(rows)));
    }
    // kernel basis is canonical
    CHECK(rref(k) == k);
  }
}

TEST_CASE("exact inverse round-trips and rejects singular input") {
  Mat m(2, 2);
  m << Rational(1, 2), Rational(3), Rational(-1), Rational(5, 7);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(Mat(m * *inv) == Mat(Mat::Identity(2, 2)));
  CHECK(Mat(*inv * m) == Mat(Mat::Identity(2, 2)));

  Mat s(2, 2);
  s << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK(!inverse(s).has_value());
  CHECK(!is_invertible(s));
}
