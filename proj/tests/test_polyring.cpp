#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sigmatau/polyring.hpp"

using namespace sigmatau;
using namespace sigmatau::testing;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_deg) {
  const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
  std::vector<Rational> c(static_cast<size_t>(deg) + 1);
  for (auto& coef : c) {
    std::int64_t num = static_cast<std::int64_t>(rng() % 9) - 4;
    std::int64_t den = static_cast<std::int64_t>(rng() % 3) + 1;
    coef = Rational(num, den);
  }
  return Poly::from_coeffs(std::move(c));
}

// q-integer [n]_q = 1 + q + ... + q^(n-1), the independent oracle for the
// coefficient of Delta(x^n) when sigma(x) = x and tau(x) = q x.
Rational q_integer(const Rational& q, int n) {
  Rational acc(0), pw(1);
  for (int k = 0; k < n; ++k) {
    acc += pw;
    pw *= q;
  }
  return acc;
}

}  // namespace

TEST_CASE("canonical form and printing") {
  CHECK(Poly().degree() == -1);
  CHECK(Poly::from_coeffs({Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK(to_string(Poly()) == "0");
  Poly p = Poly::from_coeffs({Rational(4), Rational(-1, 2), Rational(3)});
  CHECK(to_string(p) == "3*x^2 - 1/2*x + 4");
  CHECK(to_string(Poly::x()) == "x");
  CHECK(to_string(-Poly::x()) == "-x");
}

TEST_CASE("parser handles the documented syntax and round-trips") {
  CHECK(parse_poly("3*x^2 - 1/2*x + 4") ==
        Poly::from_coeffs({Rational(4), Rational(-1, 2), Rational(3)}));
  CHECK(parse_poly("  3 x^2-1/2x+4 ") ==
        parse_poly("3*x^2 - 1/2*x + 4"));
  CHECK(parse_poly("x") == Poly::x());
  CHECK(parse_poly("-x^3") == Poly::monomial(-1, 3));
  CHECK(parse_poly("0") == Poly());
  CHECK(code_of([] { parse_poly("x + "); }) == Errc::BadInput);
  CHECK(code_of([] { parse_poly("2y"); }) == Errc::BadInput);
  CHECK(code_of([] { parse_poly("1/0"); }) == Errc::BadInput);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = random_poly(rng, 8);
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("endo_apply substitutes the image of x") {
  PolyEndo identity{Poly::x()};
  PolyEndo doubling{Poly::monomial(2, 1)};
  PolyEndo zero{Poly()};
  Poly f = parse_poly("x^2");
  CHECK(endo_apply(identity, f) == f);
  CHECK(endo_apply(doubling, f) == parse_poly("4*x^2"));
  CHECK(endo_apply(zero, parse_poly("x^2 + 1")) == Poly(Rational(1)));
}

TEST_CASE("poly_gcd is monic Euclid") {
  Poly f = parse_poly("x^2 - 1");
  CHECK(poly_gcd(f, Poly()) == monic(f));
  CHECK(poly_gcd(parse_poly("x^2 - 1"), parse_poly("x - 1")) == parse_poly("x - 1"));
  CHECK(poly_gcd(parse_poly("x^2"), parse_poly("x^3")) == parse_poly("x^2"));
  CHECK(code_of([] { poly_gcd(Poly(), Poly()); }) == Errc::BothZero);
}

TEST_CASE("delta generator on the Jackson and forward-difference pairs") {
  // sigma(x) = x, tau(x) = 2x: g = x, Delta(x^2) = 3x, Delta(x) = 1.
  DeltaGenerator jackson(PolyEndo{Poly::x()}, PolyEndo{Poly::monomial(2, 1)});
  CHECK(jackson.g() == Poly::x());
  CHECK(jackson.apply(parse_poly("x^2")) == parse_poly("3*x"));
  CHECK(jackson.apply(Poly::x()) == Poly(Rational(1)));
  CHECK(jackson.apply(parse_poly("x^3")) == parse_poly("7*x^2"));

  // sigma(x) = x, tau(x) = x + 1: g = 1, Delta(x^2) = 2x + 1.
  DeltaGenerator forward(PolyEndo{Poly::x()}, PolyEndo{parse_poly("x + 1")});
  CHECK(forward.apply(parse_poly("x^2")) == parse_poly("2*x + 1"));

  // non-invertible pair sigma(x) = x^2, tau(x) = x^3:
  // g = x^3 - x^2, Delta(x^2) = x^3 + x^2.
  DeltaGenerator noninv(PolyEndo{parse_poly("x^2")}, PolyEndo{parse_poly("x^3")});
  CHECK(noninv.g() == parse_poly("x^3 - x^2"));
  CHECK(noninv.apply(parse_poly("x^2")) == parse_poly("x^3 + x^2"));

  // constants die
  CHECK(jackson.apply(Poly(Rational(42))) == Poly());

  CHECK(code_of([] {
          DeltaGenerator(PolyEndo{Poly::x()}, PolyEndo{Poly::x()});
        }) == Errc::SigmaEqualsTau);
}

TEST_CASE("q-integer coefficients for q in {2, 3, -1}") {
  for (std::int64_t q : {2, 3, -1}) {
    DeltaGenerator delta(PolyEndo{Poly::x()}, PolyEndo{Poly::monomial(Rational(q), 1)});
    for (int n = 1; n <= 10; ++n) {
      Poly expected = Poly::monomial(q_integer(Rational(q), n), n - 1);
      CHECK(delta.apply(Poly::monomial(1, n)) == expected);
    }
  }
}

TEST_CASE("g divides (tau - sigma)(f) exactly for random inputs") {
  std::mt19937_64 rng(7);
  int performed = 0;
  while (performed < 300) {
    PolyEndo sigma{random_poly(rng, 3)};
    PolyEndo tau{random_poly(rng, 3)};
    if (sigma.image_of_x == tau.image_of_x) continue;
    DeltaGenerator delta(sigma, tau);
    Poly f = random_poly(rng, 12);
    CHECK_NOTHROW(delta.apply(f));  // InexactDivision must never fire
    ++performed;
  }
}

TEST_CASE("Leibniz law for Delta") {
  std::mt19937_64 rng(11);
  int performed = 0;
  while (performed < 120) {
    PolyEndo sigma{random_poly(rng, 3)};
    PolyEndo tau{random_poly(rng, 3)};
    if (sigma.image_of_x == tau.image_of_x) continue;
    DeltaGenerator delta(sigma, tau);
    Poly f = random_poly(rng, 6), h = random_poly(rng, 6);
    Poly lhs = delta.apply(f * h);
    Poly rhs = delta.apply(f) * endo_apply(tau, h) +
               endo_apply(sigma, f) * delta.apply(h);
    CHECK(lhs == rhs);
    ++performed;
  }
}

TEST_CASE("gcd over the images (tau - sigma)(x^k) is associate to g") {
  std::mt19937_64 rng(13);
  int performed = 0;
  while (performed < 40) {
    PolyEndo sigma{random_poly(rng, 3)};
    PolyEndo tau{random_poly(rng, 3)};
    if (sigma.image_of_x == tau.image_of_x) continue;
    DeltaGenerator delta(sigma, tau);
    Poly acc;
    for (int k = 1; k <= 8; ++k) {
      Poly xs = Poly::monomial(1, k);
      Poly image = endo_apply(tau, xs) - endo_apply(sigma, xs);
      acc = (acc.is_zero() && image.is_zero()) ? acc : poly_gcd(acc, image);
    }
    CHECK(acc == delta.monic_g());
    ++performed;
  }
}

TEST_CASE("poly_derivation is image_of_x times the generator") {
  PolyDerivation zero = poly_derivation(PolyEndo{Poly::x()},
                                        PolyEndo{Poly::monomial(2, 1)}, Poly());
  CHECK(zero.apply(parse_poly("x^5 + x")) == Poly());

  PolyDerivation unit = poly_derivation(PolyEndo{Poly::x()},
                                        PolyEndo{Poly::monomial(2, 1)},
                                        Poly(Rational(1)));
  DeltaGenerator jackson(PolyEndo{Poly::x()}, PolyEndo{Poly::monomial(2, 1)});
  CHECK(unit.apply(parse_poly("x^4")) == jackson.apply(parse_poly("x^4")));

  // sigma(x) = x, tau(x) = x + 1, image x: D(x^2) = x(2x + 1)
  PolyDerivation fd = poly_derivation(PolyEndo{Poly::x()}, PolyEndo{parse_poly("x + 1")},
                                      Poly::x());
  CHECK(fd.apply(parse_poly("x^2")) == parse_poly("2*x^2 + x"));

  // rank-one freeness on monomials up to degree 12
  std::mt19937_64 rng(17);
  int performed = 0;
  while (performed < 30) {
    PolyEndo sigma{random_poly(rng, 2)};
    PolyEndo tau{random_poly(rng, 2)};
    if (sigma.image_of_x == tau.image_of_x) continue;
    Poly image = random_poly(rng, 4);
    PolyDerivation D = poly_derivation(sigma, tau, image);
    DeltaGenerator delta(sigma, tau);
    for (int k = 0; k <= 12; ++k) {
      Poly xs = Poly::monomial(1, k);
      CHECK(D.apply(xs) == image * delta.apply(xs));
    }
    ++performed;
  }
}
