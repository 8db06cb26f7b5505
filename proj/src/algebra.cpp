#include "sigmatau/algebra.hpp"

#include <sstream>

namespace sigmatau {

Submodule Submodule::span_of(const Mat& vectors_as_rows) {
  return Submodule(rref(vectors_as_rows));
}

Submodule Submodule::zero(Index ambient_dim) {
  return Submodule(Mat(0, ambient_dim));
}

bool Submodule::contains(const Vec& v) const {
  return coords_of(v).has_value();
}

bool Submodule::contains(const Submodule& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (Index i = 0; i < other.rank(); ++i) {
    if (!contains(other.basis_.row(i).transpose())) return false;
  }
  return true;
}

std::optional<Vec> Submodule::coords_of(const Vec& v) const {
  if (v.size() != ambient_dim()) return std::nullopt;
  // RREF structure: the coefficient of row i is v at the pivot column of
  // row i, because every other basis row vanishes there.
  Vec coeffs(rank());
  Vec residual = v;
  for (Index i = 0; i < rank(); ++i) {
    Index p = 0;
    while (basis_(i, p) == 0) ++p;
    coeffs(i) = residual(p);
    if (coeffs(i) != 0) {
      residual -= coeffs(i) * basis_.row(i).transpose();
    }
  }
  for (Index k = 0; k < residual.size(); ++k) {
    if (residual(k) != 0) return std::nullopt;
  }
  return coeffs;
}

namespace {

std::string triple(Index i, Index j, Index k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

}  // namespace

StructAlgebra::StructAlgebra() : unit_(Vec::Ones(1)), left_mult_{Mat::Identity(1, 1)} {}

StructAlgebra::StructAlgebra(Vec unit, std::vector<Mat> left_mult)
    : unit_(std::move(unit)), left_mult_(std::move(left_mult)) {
  const Index n = unit_.size();
  if (n < 1 || static_cast<Index>(left_mult_.size()) != n) {
    throw Error(Errc::DimensionMismatch, "structure table does not match dim");
  }
  for (const Mat& li : left_mult_) {
    if (li.rows() != n || li.cols() != n) {
      throw Error(Errc::DimensionMismatch, "structure table does not match dim");
    }
  }
  // Commutativity: c[i][j][k] == c[j][i][k].
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        if (table(i, j, k) != table(j, i, k)) {
          throw Error(Errc::NonCommutative,
                      "c[i][j][k] != c[j][i][k] at " + triple(i, j, k));
        }
      }
    }
  }
  // Unit law: unit * e_i = e_i.
  for (Index i = 0; i < n; ++i) {
    Vec prod = mul(unit_, basis_vector(i));
    for (Index k = 0; k < n; ++k) {
      if (prod(k) != (k == i ? 1 : 0)) {
        throw Error(Errc::BadUnit,
                    "unit * e_i != e_i at " + triple(i, i, k));
      }
    }
  }
  // Associativity: (e_i e_j) e_k == e_i (e_j e_k).
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Vec ij = mul(basis_vector(i), basis_vector(j));
      for (Index k = 0; k < n; ++k) {
        Vec lhs = mul(ij, basis_vector(k));
        Vec rhs = mul(basis_vector(i), mul(basis_vector(j), basis_vector(k)));
        if (lhs != rhs) {
          throw Error(Errc::NonAssociative,
                      "(e_i e_j) e_k != e_i (e_j e_k) at " + triple(i, j, k));
        }
      }
    }
  }
}

StructAlgebra StructAlgebra::from_table(
    const Vec& unit,
    const std::vector<std::vector<std::vector<Rational>>>& table) {
  const size_t n = table.size();
  if (n == 0 || static_cast<size_t>(unit.size()) != n) {
    throw Error(Errc::DimensionMismatch, "structure table does not match dim");
  }
  std::vector<Mat> lm(n, Mat::Zero(static_cast<Index>(n), static_cast<Index>(n)));
  for (size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(Errc::DimensionMismatch, "structure table does not match dim");
    }
    for (size_t j = 0; j < n; ++j) {
      if (table[i][j].size() != n) {
        throw Error(Errc::DimensionMismatch, "structure table does not match dim");
      }
      for (size_t k = 0; k < n; ++k) {
        lm[i](static_cast<Index>(k), static_cast<Index>(j)) = table[i][j][k];
      }
    }
  }
  return StructAlgebra(unit, std::move(lm));
}

Mat StructAlgebra::left_mult_operator(const Vec& x) const {
  if (x.size() != dim()) {
    throw Error(Errc::DimensionMismatch, "element does not live in this algebra");
  }
  Mat op = Mat::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (x(i) != 0) op += x(i) * left_mult_[static_cast<size_t>(i)];
  }
  return op;
}

Vec StructAlgebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw Error(Errc::DimensionMismatch, "element does not live in this algebra");
  }
  Vec out = Vec::Zero(dim());
  for (Index i = 0; i < dim(); ++i) {
    if (x(i) != 0) out += x(i) * (left_mult_[static_cast<size_t>(i)] * y);
  }
  return out;
}

Vec StructAlgebra::basis_vector(Index i) const {
  Vec e = Vec::Zero(dim());
  e(i) = 1;
  return e;
}

bool StructAlgebra::operator==(const StructAlgebra& other) const {
  if (dim() != other.dim() || unit_ != other.unit_) return false;
  for (size_t i = 0; i < left_mult_.size(); ++i) {
    if (left_mult_[i] != other.left_mult_[i]) return false;
  }
  return true;
}

bool check_endo(const StructAlgebra& A, const AlgMap& phi) {
  if (phi.src_dim() != A.dim() || phi.dst_dim() != A.dim()) return false;
  return check_hom(A, A, phi.matrix);
}

bool check_hom(const StructAlgebra& src, const StructAlgebra& dst, const Mat& phi) {
  if (phi.cols() != src.dim() || phi.rows() != dst.dim()) return false;
  if (Vec(phi * src.unit()) != dst.unit()) return false;
  for (Index i = 0; i < src.dim(); ++i) {
    for (Index j = i; j < src.dim(); ++j) {
      Vec lhs = phi * src.mul(src.basis_vector(i), src.basis_vector(j));
      Vec rhs = dst.mul(phi.col(i), phi.col(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Submodule kernel(const Mat& phi) {
  return Submodule::span_of(kernel_basis(phi));
}

Submodule kernel(const AlgMap& phi) { return kernel(phi.matrix); }

Quotient quotient(const StructAlgebra& A, const Submodule& I) {
  const Index n = A.dim();
  if (I.ambient_dim() != n) {
    throw Error(Errc::DimensionMismatch, "ideal does not live in this algebra");
  }
  // Ideal check: e_i * r stays in I for every basis row r.
  for (Index r = 0; r < I.rank(); ++r) {
    Vec row = I.basis().row(r).transpose();
    for (Index i = 0; i < n; ++i) {
      if (!I.contains(A.mul(A.basis_vector(i), row))) {
        std::ostringstream os;
        os << "e_" << i << " * (ideal basis row " << r << ") escapes the span";
        throw Error(Errc::NotAnIdeal, os.str());
      }
    }
  }

  // Coset representatives are supported on the non-pivot columns of I.
  std::vector<Index> pivots;
  Mat basis = I.basis();
  rref(basis, &pivots);  // basis is already canonical; this only reads pivots
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Index> complement;
  for (Index c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<size_t>(c)]) complement.push_back(c);
  }
  const Index q = static_cast<Index>(complement.size());

  // projection(x): reduce x mod I, then read off the complement coordinates.
  Mat projection = Mat::Zero(q, n);
  for (Index c = 0; c < n; ++c) {
    Vec x = Vec::Zero(n);
    x(c) = 1;
    for (Index r = 0; r < I.rank(); ++r) {
      Index p = pivots[static_cast<size_t>(r)];
      if (x(p) != 0) x -= x(p) * I.basis().row(r).transpose();
    }
    for (Index k = 0; k < q; ++k) projection(k, c) = x(complement[static_cast<size_t>(k)]);
  }
  Mat section = Mat::Zero(n, q);
  for (Index k = 0; k < q; ++k) section(complement[static_cast<size_t>(k)], k) = 1;

  std::vector<Mat> lm(static_cast<size_t>(q));
  for (Index i = 0; i < q; ++i) {
    Mat li(q, q);
    for (Index j = 0; j < q; ++j) {
      li.col(j) = projection * A.mul(section.col(i), section.col(j));
    }
    lm[static_cast<size_t>(i)] = li;
  }
  Vec qunit = projection * A.unit();
  StructAlgebra Q(qunit, std::move(lm));
  return Quotient{std::move(Q), std::move(projection), std::move(section)};
}

TensorProduct tensor_product(const StructAlgebra& left, const StructAlgebra& right) {
  const Index nl = left.dim(), nr = right.dim(), n = nl * nr;
  std::vector<Mat> lm(static_cast<size_t>(n));
  for (Index i = 0; i < nl; ++i) {
    const Mat& li = left.basis_left_mult(i);
    for (Index j = 0; j < nr; ++j) {
      const Mat& lj = right.basis_left_mult(j);
      // (e_i (x) f_j) * (e_k (x) f_l) = (e_i e_k) (x) (f_j f_l):
      // the left-multiplication operator is the Kronecker product.
      Mat op(n, n);
      for (Index p = 0; p < nl; ++p) {
        for (Index r = 0; r < nr; ++r) {
          for (Index k = 0; k < nl; ++k) {
            for (Index l = 0; l < nr; ++l) {
              op(p * nr + r, k * nr + l) = li(p, k) * lj(r, l);
            }
          }
        }
      }
      lm[static_cast<size_t>(i * nr + j)] = std::move(op);
    }
  }
  Vec unit = Vec::Zero(n);
  for (Index i = 0; i < nl; ++i) {
    for (Index j = 0; j < nr; ++j) {
      unit(i * nr + j) = left.unit()(i) * right.unit()(j);
    }
  }
  TensorProduct out{StructAlgebra(std::move(unit), std::move(lm)), nl, nr};
  return out;
}

TensorProduct tensor_square(const StructAlgebra& A) { return tensor_product(A, A); }

Vec TensorProduct::pure(const Vec& x, const Vec& y) const {
  if (x.size() != left_dim || y.size() != right_dim) {
    throw Error(Errc::DimensionMismatch, "tensor factors have wrong dimensions");
  }
  Vec out = Vec::Zero(left_dim * right_dim);
  for (Index i = 0; i < left_dim; ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < right_dim; ++j) {
      out(flat(i, j)) = x(i) * y(j);
    }
  }
  return out;
}

Submodule ideal_closure(const StructAlgebra& A, const std::vector<Vec>& gens) {
  const Index n = A.dim();
  Mat current(static_cast<Index>(gens.size()), n);
  for (size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].size() != n) {
      throw Error(Errc::DimensionMismatch, "generator does not live in this algebra");
    }
    current.row(static_cast<Index>(g)) = gens[g].transpose();
  }
  current = rref(std::move(current));
  // Saturate: rank is bounded by dim, so this terminates.
  for (;;) {
    Mat products(current.rows() * n, n);
    for (Index r = 0; r < current.rows(); ++r) {
      Vec v = current.row(r).transpose();
      for (Index i = 0; i < n; ++i) {
        products.row(r * n + i) = A.mul(A.basis_vector(i), v).transpose();
      }
    }
    Mat next = rref(vstack(current, products));
    if (next.rows() == current.rows()) {
      return Submodule::span_of(next);
    }
    current = std::move(next);
  }
}

}  // namespace sigmatau
