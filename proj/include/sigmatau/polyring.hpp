#pragma once

// Univariate polynomials over the rationals, endomorphisms given by the
// image of x, and the rank-one generator Delta = (tau - sigma)/g of the
// module of (sigma,tau)-derivations, with g = tau(x) - sigma(x).

#include <string>
#include <vector>

#include "sigmatau/errors.hpp"
#include "sigmatau/rational.hpp"

namespace sigmatau {

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  static Poly from_coeffs(std::vector<Rational> ascending);
  static Poly x();
  static Poly monomial(const Rational& coeff, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;  // ascending, no trailing zeros
};

/// Quotient and remainder with deg(rem) < deg(b); b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Exact quotient a / b; throws Error{InexactDivision} on nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd by the Euclidean algorithm. Throws Error{BothZero}.
Poly poly_gcd(const Poly& f, const Poly& g);

Poly monic(const Poly& f);

/// The algebra endomorphism f -> f(image_of_x).
struct PolyEndo {
  Poly image_of_x;
};

/// f(phi(x)) by Horner evaluation in the polynomial ring.
Poly endo_apply(const PolyEndo& phi, const Poly& f);

class DeltaGenerator {
 public:
  /// Throws Error{SigmaEqualsTau} when sigma(x) == tau(x).
  DeltaGenerator(PolyEndo sigma, PolyEndo tau);

  const PolyEndo& sigma() const { return sigma_; }
  const PolyEndo& tau() const { return tau_; }

  /// g = tau(x) - sigma(x) = unit() * monic_g().
  Poly g() const { return monic_g_ * unit_; }
  const Poly& monic_g() const { return monic_g_; }
  const Rational& unit() const { return unit_; }

  /// ((tau - sigma)(f)) / g; the division is checked to be exact.
  Poly apply(const Poly& f) const;

 private:
  PolyEndo sigma_;
  PolyEndo tau_;
  Poly monic_g_;
  Rational unit_;
};

inline DeltaGenerator delta_generator(PolyEndo sigma, PolyEndo tau) {
  return DeltaGenerator(std::move(sigma), std::move(tau));
}

inline Poly delta_apply(const DeltaGenerator& delta, const Poly& f) {
  return delta.apply(f);
}

/// The unique (sigma,tau)-derivation with the given value at x:
/// D(f) = image_of_x * Delta(f).
class PolyDerivation {
 public:
  PolyDerivation(PolyEndo sigma, PolyEndo tau, Poly image_of_x);

  const Poly& image_of_x() const { return image_; }
  const DeltaGenerator& delta() const { return delta_; }

  Poly apply(const Poly& f) const { return image_ * delta_.apply(f); }

 private:
  DeltaGenerator delta_;
  Poly image_;
};

inline PolyDerivation poly_derivation(PolyEndo sigma, PolyEndo tau, Poly image_of_x) {
  return PolyDerivation(std::move(sigma), std::move(tau), std::move(image_of_x));
}

/// Text syntax: "3*x^2 - 1/2*x + 4"; whitespace-insensitive; '*' optional.
Poly parse_poly(const std::string& text);
std::string to_string(const Poly& f);

}  // namespace sigmatau
