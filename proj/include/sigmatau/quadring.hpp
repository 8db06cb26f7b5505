#pragma once

// Rings of integers O_K of quadratic number fields Q(sqrt(d)), d squarefree.
// Integral basis {1, sqrt(d)} when d is not 1 mod 4, {1, omega} with
// omega = (1 + sqrt(d))/2 when d is 1 mod 4. Field-level elements
// (QuadRat) always use the sqrt(d) basis, whichever branch the ring is in.

#include <optional>
#include <string>

#include "sigmatau/algebra.hpp"
#include "sigmatau/rational.hpp"

namespace sigmatau {

enum class Branch { Sqrt, Omega };

class QuadRing {
 public:
  /// Validates d: squarefree (trial division, documented bound), d not in
  /// {0, 1}. Throws Error{NotSquarefree|DisallowedD|TooLargeToFactor}.
  explicit QuadRing(const Integer& d);

  const Integer& d() const { return d_; }
  Branch branch() const { return branch_; }

  /// (d - 1) / 4; only meaningful on the Omega branch (omega^2 = omega + m).
  Integer omega_constant() const { return (d_ - 1) / 4; }

  /// "sqrt(d)" or "omega", for diagnostics.
  std::string gen_name() const;

  bool operator==(const QuadRing& o) const { return d_ == o.d_; }
  bool operator!=(const QuadRing& o) const { return !(*this == o); }

 private:
  Integer d_;
  Branch branch_;
};

inline QuadRing make_ring(const Integer& d) { return QuadRing(d); }

/// a + b * gen in the integral basis {1, gen}.
struct QuadInt {
  Integer a{0};
  Integer b{0};

  bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadInt& o) const { return !(*this == o); }
  bool is_zero() const { return a == 0 && b == 0; }
};

/// u + v * sqrt(d) with exact rational coordinates (sqrt basis always).
struct QuadRat {
  Rational u{0};
  Rational v{0};

  bool operator==(const QuadRat& o) const { return u == o.u && v == o.v; }
  bool operator!=(const QuadRat& o) const { return !(*this == o); }
  bool is_zero() const { return u == 0 && v == 0; }
};

QuadInt qadd(const QuadInt& x, const QuadInt& y);
QuadInt qsub(const QuadInt& x, const QuadInt& y);
QuadInt qneg(const QuadInt& x);
QuadInt qmul(const QuadRing& R, const QuadInt& x, const QuadInt& y);

/// The nontrivial automorphism: sqrt(d) -> -sqrt(d), i.e. omega -> 1 - omega.
QuadInt conj(const QuadRing& R, const QuadInt& x);

/// x * conj(x); asserts the gen coordinate cancels.
Integer norm(const QuadRing& R, const QuadInt& x);

/// Field embedding into the sqrt(d) basis.
QuadRat to_quadrat(const QuadRing& R, const QuadInt& x);

QuadRat qr_add(const QuadRat& x, const QuadRat& y);
QuadRat qr_sub(const QuadRat& x, const QuadRat& y);
QuadRat qr_mul(const QuadRing& R, const QuadRat& x, const QuadRat& y);
/// Exact division in Q(sqrt(d)); y must be nonzero.
QuadRat qr_div(const QuadRing& R, const QuadRat& x, const QuadRat& y);

/// Lattice membership: Sqrt branch needs u, v integers; Omega branch needs
/// 2v and u - v integers (then z = (u - v) + (2v) * omega).
std::optional<QuadInt> member(const QuadRing& R, const QuadRat& z);

/// The ring as a dim-2 rational structure-constant algebra over {1, gen}.
StructAlgebra as_algebra(const QuadRing& R);

std::string to_string(const QuadRing& R, const QuadInt& x);

}  // namespace sigmatau
