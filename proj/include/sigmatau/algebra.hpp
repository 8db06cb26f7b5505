#pragma once

// Finite-dimensional commutative algebras over the rationals, presented by
// structure constants c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k.
// Elements are coordinate vectors, maps are matrices whose columns are the
// images of the basis vectors, and subspaces carry a canonical reduced
// row echelon basis so that equality of submodules is plain matrix equality.

#include <optional>
#include <string>
#include <vector>

#include "sigmatau/errors.hpp"
#include "sigmatau/linalg.hpp"

namespace sigmatau {

class Submodule {
 public:
  Submodule() : basis_(0, 0) {}

  /// Canonicalizes the row span of `vectors_as_rows`.
  static Submodule span_of(const Mat& vectors_as_rows);

  /// Trivial subspace of an ambient space.
  static Submodule zero(Index ambient_dim);

  const Mat& basis() const { return basis_; }
  Index rank() const { return basis_.rows(); }
  Index ambient_dim() const { return basis_.cols(); }

  bool contains(const Vec& v) const;
  bool contains(const Submodule& other) const;

  /// Coordinates c with basis()^T c = v, or nullopt if v is outside the span.
  std::optional<Vec> coords_of(const Vec& v) const;

  bool operator==(const Submodule& other) const { return basis_ == other.basis_; }
  bool operator!=(const Submodule& other) const { return !(*this == other); }

 private:
  explicit Submodule(Mat canonical_basis) : basis_(std::move(canonical_basis)) {}
  Mat basis_;  // rank x ambient_dim, canonical RREF
};

enum class MapKind { EndomorphismClaimed, LinearOnly };

/// A linear map between (possibly different) algebras; columns are images of
/// the source basis vectors.
struct AlgMap {
  Mat matrix;
  MapKind kind = MapKind::LinearOnly;

  Index src_dim() const { return matrix.cols(); }
  Index dst_dim() const { return matrix.rows(); }
};

class StructAlgebra {
 public:
  /// The base field as a dim-1 algebra.
  StructAlgebra();

  /// Validates commutativity, associativity and the unit law; throws
  /// Error{NonCommutative|NonAssociative|BadUnit} naming a violating triple.
  StructAlgebra(Vec unit, std::vector<Mat> left_mult);

  static StructAlgebra from_table(
      const Vec& unit,
      const std::vector<std::vector<std::vector<Rational>>>& table);

  Index dim() const { return unit_.size(); }
  const Vec& unit() const { return unit_; }

  /// c[i][j][k]
  const Rational& table(Index i, Index j, Index k) const {
    return left_mult_[static_cast<size_t>(i)](k, j);
  }

  /// Matrix of y -> e_i * y.
  const Mat& basis_left_mult(Index i) const {
    return left_mult_[static_cast<size_t>(i)];
  }

  /// Matrix of y -> x * y.
  Mat left_mult_operator(const Vec& x) const;

  Vec mul(const Vec& x, const Vec& y) const;

  Vec basis_vector(Index i) const;

  bool operator==(const StructAlgebra& other) const;

 private:
  Vec unit_;
  std::vector<Mat> left_mult_;  // left_mult_[i](k, j) = c[i][j][k]
};

/// phi(e_i)phi(e_j) = phi(e_i e_j) for all pairs, and phi(unit) = unit.
bool check_endo(const StructAlgebra& A, const AlgMap& phi);

/// Same multiplicativity/unit test for a map between two algebras.
bool check_hom(const StructAlgebra& src, const StructAlgebra& dst, const Mat& phi);

/// Canonical null-space basis; rank-nullity holds by construction.
Submodule kernel(const AlgMap& phi);
Submodule kernel(const Mat& phi);

struct Quotient {
  StructAlgebra algebra;
  Mat projection;  // dim(quotient) x dim(A)
  Mat section;     // dim(A) x dim(quotient); projection * section = I
};

/// Quotient by a (verified) ideal. Throws Error{NotAnIdeal} naming a basis
/// product that escapes I.
Quotient quotient(const StructAlgebra& A, const Submodule& I);

struct TensorProduct {
  StructAlgebra algebra;  // dim = dim(left) * dim(right)
  Index left_dim = 0;
  Index right_dim = 0;

  /// Row-major flattening (i, j) -> i * right_dim + j.
  Index flat(Index i, Index j) const { return i * right_dim + j; }

  /// Bilinear coordinate embedding x (x) y.
  Vec pure(const Vec& x, const Vec& y) const;
};

TensorProduct tensor_product(const StructAlgebra& left, const StructAlgebra& right);
TensorProduct tensor_square(const StructAlgebra& A);

/// Smallest subspace containing gens and closed under multiplication by all
/// basis elements (= the ideal generated by gens, A being commutative).
Submodule ideal_closure(const StructAlgebra& A, const std::vector<Vec>& gens);

}  // namespace sigmatau
