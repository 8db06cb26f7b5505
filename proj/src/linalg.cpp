#include "sigmatau/linalg.hpp"

namespace sigmatau {

Mat rref(Mat m, std::vector<Index>* pivots) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> piv;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    m.row(sel).swap(m.row(r));
    const Rational inv_pivot = Rational(1) / m(r, c);
    m.row(r) *= inv_pivot;
    for (Index i = 0; i < rows; ++i) {
      if (i != r && m(i, c) != 0) {
        m.row(i) -= m(i, c) * m.row(r);
      }
    }
    piv.push_back(c);
    ++r;
  }
  Mat out = m.topRows(r);
  if (pivots) *pivots = std::move(piv);
  return out;
}

Index rank_of(const Mat& m) { return rref(m).rows(); }

Mat kernel_basis(const Mat& m) {
  const Index cols = m.cols();
  std::vector<Index> piv;
  Mat r = rref(m, &piv);

  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Index p : piv) is_pivot[static_cast<size_t>(p)] = true;

  Mat basis(cols - r.rows(), cols);
  basis.setZero();
  Index row = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    for (Index i = 0; i < r.rows(); ++i) {
      basis(row, piv[static_cast<size_t>(i)]) = -r(i, f);
    }
    basis(row, f) = 1;
    ++row;
  }
  return rref(std::move(basis));
}

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank_of(m) == m.rows();
}

std::optional<Mat> inverse(const Mat& m) {
  const Index n = m.rows();
  if (n != m.cols()) return std::nullopt;
  Mat work(n, 2 * n);
  work << m, Mat::Identity(n, n);
  work = rref(std::move(work));
  if (work.rows() < n) return std::nullopt;
  // Invertible iff the left block reduced to the identity.
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (work(i, j) != (i == j ? 1 : 0)) return std::nullopt;
    }
  }
  return Mat(work.rightCols(n));
}

Mat vstack(const Mat& a, const Mat& b) {
  Mat out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

}  // namespace sigmatau
