#pragma once

// Dense exact-rational linear algebra on Eigen containers. Everything here
// is tolerance-free: pivots are chosen by first nonzero entry, and the
// reduced row echelon form is a canonical representative of the row space
// (pivots normalized to 1, rows ordered by pivot column, zero rows dropped).

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "sigmatau/rational.hpp"

namespace sigmatau {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Canonical reduced row echelon form of the row space of m. Zero rows are
/// removed; if `pivots` is given it receives the pivot column of each row.
Mat rref(Mat m, std::vector<Index>* pivots = nullptr);

Index rank_of(const Mat& m);

/// Canonical basis (as rows) of the null space {v : m v = 0}.
Mat kernel_basis(const Mat& m);

bool is_invertible(const Mat& m);

/// Exact inverse of a square matrix, or nullopt if singular.
std::optional<Mat> inverse(const Mat& m);

/// Stacks rows of a and b.
Mat vstack(const Mat& a, const Mat& b);

}  // namespace sigmatau
